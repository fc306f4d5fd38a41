"""Decide whether a nilpotent Lie algebra is an Einstein nilradical.

The exact pipeline (structure constants -> derivations -> pre-Einstein
derivation -> root vectors -> rational LP) returns YES/NO certificates that
can be checked independently. A floating-point moment-map descent recovers
the nilsoliton metric itself.
"""

from .convex_cert import (
    AlphaSystem,
    Certificate,
    alpha_set,
    decide_einstein,
    solution_polytope_dim,
    verify_certificate,
)
from .derivations import (
    DerivationSpace,
    PreEinstein,
    derivation_space,
    eigenvalue_type,
    necessary_condition,
    pre_einstein,
)
from .errors import NilradError
from .lie_core import (
    Cocycle,
    LieAlgebra,
    b2_cocycle_check,
    center,
    central_extension,
    jacobi_check,
    lower_central_series,
    parse_algebra,
)
from .scalar import Scalar

__version__ = "0.1.0"

__all__ = [
    "AlphaSystem", "Certificate", "Cocycle", "DerivationSpace", "LieAlgebra", "NilradError",
    "PreEinstein", "Scalar", "alpha_set", "b2_cocycle_check", "center", "central_extension",
    "decide_einstein", "derivation_space", "eigenvalue_type", "jacobi_check",
    "lower_central_series", "necessary_condition", "parse_algebra", "pre_einstein",
    "solution_polytope_dim", "verify_certificate",
]
