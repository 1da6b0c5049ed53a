from .settings import Settings, settings
from .run import Command, RunConfig

__all__ = ["Settings", "settings", "Command", "RunConfig"]
