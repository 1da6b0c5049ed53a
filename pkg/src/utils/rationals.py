import re
from typing import Iterable, List, Tuple
from sympy.polys.domains import QQ
from .errors import ConfigError
from .linalg import Scalar

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_INTEGER = re.compile(r"^\s*([+-]?\d+)\s*$")


def parse_rational(text: str) -> Scalar:
    """Parse "p/q" or "p" into an exact rational. Floats are rejected."""
    match = _RATIONAL.match(text)
    if not match:
        raise ConfigError(f"not an exact rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ConfigError(f"zero denominator in {text!r}")
    return QQ(numerator, denominator)


def format_rational(value: Scalar) -> str:
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> Tuple[Scalar, ...]:
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ConfigError(f"empty entry in rational list {text!r}")
    return tuple(parse_rational(p) for p in parts)


def parse_int_list(text: str) -> Tuple[int, ...]:
    parts = text.split(",")
    values: List[int] = []
    for part in parts:
        match = _INTEGER.match(part)
        if not match:
            raise ConfigError(f"not an integer: {part!r} in {text!r}")
        values.append(int(match.group(1)))
    return tuple(values)


def format_rationals(values: Iterable[Scalar]) -> List[str]:
    return [format_rational(v) for v in values]


def is_integral(values: Iterable[Scalar]) -> bool:
    return all(QQ.convert(v).denominator == 1 for v in values)
