"""Exact verification of tetrad systems of Type II binary codes."""

from .catalog import build, complete_to_type2, count_type2_formula, enumerate_type2
from .enumerators import (
    HarmonicLinForm,
    HomoPoly2,
    QSqrt2,
    bachoc_z_check,
    design_check,
    hwe,
    macwilliams_dual,
    sigma_transform,
    vanishing_check,
    weight_distribution,
)
from .gf2core import (
    Code,
    DualityClass,
    Word,
    classify_self_duality,
    dual,
    is_extremal,
    make_code,
    min_distance,
)
from .lattice import root_count
from .tetrad import (
    Signature,
    admissible_systems,
    decompose,
    koch_check,
    prop_check,
    tetrad_subcode,
    tetrads,
)

__version__ = "0.1.0"

__all__ = [
    "build",
    "complete_to_type2",
    "count_type2_formula",
    "enumerate_type2",
    "root_count",
    "admissible_systems",
    "bachoc_z_check",
    "classify_self_duality",
    "Code",
    "decompose",
    "design_check",
    "dual",
    "DualityClass",
    "HarmonicLinForm",
    "HomoPoly2",
    "hwe",
    "is_extremal",
    "koch_check",
    "macwilliams_dual",
    "make_code",
    "min_distance",
    "prop_check",
    "QSqrt2",
    "sigma_transform",
    "Signature",
    "tetrad_subcode",
    "tetrads",
    "vanishing_check",
    "weight_distribution",
    "Word",
]
