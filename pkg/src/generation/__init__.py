from .box import TruncationBox
from .certificates import (
    Certificate,
    Certified,
    KnownChecks,
    homogeneous_parts,
    export_dag,
    replay_all,
)
from .highest_weight import (
    Extraction,
    top_component,
    normalize_hw,
    extract_hw_component,
    extract_power,
    extract_hw_vector,
)
from .translation import Translation, translate_degree, hw_supplier
from .fill import FillResult, lowering_words, fill_from_hw
from .wedge_reduction import (
    TILDE,
    WedgeReduction,
    tilde_checks,
    pure_wedge,
    basis_wedge,
    wedge_weight_vector,
    translate_w1,
    spread_pure_wedge,
    top_class,
    translate_top_wedge,
)
from .seeds import SeedKind, SeedPlacement, seed_vectors
from .closure import (
    Verdict,
    ClosureRun,
    ClosureEngine,
    Prediction,
    predicted_verdicts,
    classify,
    summarize,
    closure,
    certificate_file,
)
from .proofs import ProofReplay, replay_non_minuscule, replay_minuscule

__all__ = [
    "TruncationBox",
    "Certificate",
    "Certified",
    "KnownChecks",
    "homogeneous_parts",
    "export_dag",
    "replay_all",
    "Extraction",
    "top_component",
    "normalize_hw",
    "extract_hw_component",
    "extract_power",
    "extract_hw_vector",
    "Translation",
    "translate_degree",
    "hw_supplier",
    "FillResult",
    "lowering_words",
    "fill_from_hw",
    "TILDE",
    "WedgeReduction",
    "tilde_checks",
    "pure_wedge",
    "basis_wedge",
    "wedge_weight_vector",
    "translate_w1",
    "spread_pure_wedge",
    "top_class",
    "translate_top_wedge",
    "SeedKind",
    "SeedPlacement",
    "seed_vectors",
    "Verdict",
    "ClosureRun",
    "ClosureEngine",
    "Prediction",
    "predicted_verdicts",
    "classify",
    "summarize",
    "closure",
    "certificate_file",
    "ProofReplay",
    "replay_non_minuscule",
    "replay_minuscule",
]
