"""Exact cabling-sequence invariants of torus knot tunnels.

A (p, q) torus knot with coprime parameters of magnitude >= 2 has a middle
tunnel, an upper tunnel, and a lower tunnel.  This package computes, in
exact integer arithmetic, the full invariant sequence of each tunnel (the
simple slope in Q/Z, the odd integer slopes, the binary invariants, and
the intermediate torus knots of the middle tunnel) and classifies how many
of the three tunnels are actually distinct.
"""

from .arith import (
    NotAKnotError,
    SimpleSlope,
    TorusKnotParams,
    TUNNEL_KINDS,
    UnknotError,
    cf_expand,
    cf_value,
    coprime_pairs,
    egcd,
    gcd,
    mod_inverse,
    normalize_params,
)
from .classification import (
    TunnelClassification,
    case1_closed_form,
    case2_closed_forms,
    case_of,
    classify,
    is_middle_regular,
    partition_tunnels,
)
from .middle import CablingSequence, middle_sequence, rho_invariant
from .semisimple import PkProfile, lower_sequence, pk_profile, upper_sequence
from .words import (
    GENERATORS,
    GeneratorWord,
    L,
    Mat2,
    U,
    generator_word,
    intermediate_of_matrix,
    partial_products,
    slope_of_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "CablingSequence",
    "GENERATORS",
    "GeneratorWord",
    "L",
    "Mat2",
    "NotAKnotError",
    "PkProfile",
    "SimpleSlope",
    "TorusKnotParams",
    "TUNNEL_KINDS",
    "TunnelClassification",
    "U",
    "UnknotError",
    "case1_closed_form",
    "case2_closed_forms",
    "case_of",
    "cf_expand",
    "cf_value",
    "classify",
    "coprime_pairs",
    "egcd",
    "gcd",
    "generator_word",
    "intermediate_of_matrix",
    "is_middle_regular",
    "lower_sequence",
    "middle_sequence",
    "mod_inverse",
    "normalize_params",
    "partial_products",
    "partition_tunnels",
    "pk_profile",
    "rho_invariant",
    "slope_of_matrix",
    "upper_sequence",
]
