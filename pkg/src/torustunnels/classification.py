"""How many distinct tunnels a torus knot has, and which ones coincide.

With canonical p > q >= 2 there are three mutually exclusive cases:

  case I    p - q = 1: all three tunnels carry the same invariant sequence
            [1/3], 5, 7, ..., 2q - 1, so the knot has a single tunnel.
  case II   p = m*q + 1 or p = m*q - 1 with m >= 2: the middle and upper
            tunnels coincide and the lower tunnel differs; two tunnels.
  case III  everything else: the middle sequence contains a nonzero binary
            invariant and all three sequences differ; three tunnels.

Tunnels are compared by their invariants (simple slope, integer slopes,
binary values).  The empty binary tuple stored for upper and lower tunnels
stands for all zeros and is expanded to the matching length before the
comparison, otherwise the case I/II coincidences would be missed on purely
representational grounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import SimpleSlope, normalize_params
from .middle import CablingSequence, middle_sequence
from .semisimple import lower_sequence, upper_sequence

__all__ = [
    "TunnelClassification",
    "case_of",
    "classify",
    "partition_tunnels",
    "case1_closed_form",
    "case2_closed_forms",
    "is_middle_regular",
]

ClosedForm = tuple[SimpleSlope, tuple[int, ...]]


@dataclass(frozen=True)
class TunnelClassification:
    """Canonical parameters, case label, and the tunnel coincidence classes.

    ``coincidences`` partitions ("middle", "upper", "lower") into classes of
    equal tunnels, stated in the canonical p > q orientation; classes and
    their members keep that kind order.
    """

    p: int
    q: int
    case_label: str
    distinct_count: int
    coincidences: tuple[tuple[str, ...], ...]


def case_of(p: int, q: int) -> str:
    """Case label "I", "II", or "III" of the (p, q) torus knot."""
    params = normalize_params(p, q, "middle")
    cp, cq = params.canonical_p, params.canonical_q
    if cp - cq == 1:
        return "I"
    if cp % cq in (1, cq - 1):
        return "II"
    return "III"


def _comparison_key(seq: CablingSequence):
    binaries = seq.binaries
    if seq.tunnel_kind != "middle":
        binaries = (0,) * max(0, len(seq.slopes) - 1)
    return seq.simple_slope, seq.slopes, binaries


def partition_tunnels(
    middle: CablingSequence, upper: CablingSequence, lower: CablingSequence
) -> tuple[tuple[str, ...], ...]:
    """Partition the three tunnel kinds into classes of equal invariants."""
    keyed = [
        ("middle", _comparison_key(middle)),
        ("upper", _comparison_key(upper)),
        ("lower", _comparison_key(lower)),
    ]
    parts: list[tuple[list[str], object]] = []
    for kind, key in keyed:
        for members, existing in parts:
            if existing == key:
                members.append(kind)
                break
        else:
            parts.append(([kind], key))
    return tuple(tuple(members) for members, _ in parts)


def classify(p: int, q: int) -> TunnelClassification:
    """Count the distinct tunnels of (p, q) by comparing all three sequences."""
    params = normalize_params(p, q, "middle")
    cp, cq = params.canonical_p, params.canonical_q
    parts = partition_tunnels(
        middle_sequence(cp, cq), upper_sequence(cp, cq), lower_sequence(cp, cq)
    )
    return TunnelClassification(cp, cq, case_of(cp, cq), len(parts), parts)


def case1_closed_form(p: int, q: int) -> ClosedForm:
    """The single slope sequence [1/3], 5, 7, ..., 2q - 1 of a case I knot."""
    if case_of(p, q) != "I":
        raise ValueError(f"({p},{q}) is not a case I torus knot")
    params = normalize_params(p, q, "middle")
    return SimpleSlope(1, 3), tuple(range(5, 2 * params.canonical_q, 2))


def case2_closed_forms(p: int, q: int) -> tuple[ClosedForm, ClosedForm]:
    """Closed-form slope sequences of a case II knot, as two (simple, integers) pairs.

    The first form equals the middle and upper sequences, the second the
    lower sequence, in the canonical p > q orientation.  For p = m*q + 1 the
    first form is [1/(2m+1)], 4m+1, 6m+1, ..., 2m(q-1)+1 and the lower form
    repeats each odd value 3, 5, ..., 2q-1 m times except 3, which appears
    m-1 times.  For p = m*q - 1 the first form is [1/(2m-1)], 4m-1, ...,
    2m(q-1)-1 and the lower form repeats each value m times except 3 and
    2q-1, which appear m-1 times.
    """
    if case_of(p, q) != "II":
        raise ValueError(f"({p},{q}) is not a case II torus knot")
    params = normalize_params(p, q, "middle")
    cp, cq = params.canonical_p, params.canonical_q
    # The p % q == 1 branch must be tested first: for q = 2 both congruences
    # hold, and only the m*q + 1 form matches the computed sequences.
    if cp % cq == 1:
        m = cp // cq
        upper_form = (
            SimpleSlope(1, 2 * m + 1),
            tuple(2 * m * k + 1 for k in range(2, cq)),
        )
        repeated = [3] * (m - 1)
        for value in range(5, 2 * cq, 2):
            repeated.extend([value] * m)
    else:
        m = (cp + 1) // cq
        upper_form = (
            SimpleSlope(1, 2 * m - 1),
            tuple(2 * m * k - 1 for k in range(2, cq)),
        )
        repeated = [3] * (m - 1)
        for value in range(5, 2 * cq - 1, 2):
            repeated.extend([value] * m)
        repeated.extend([2 * cq - 1] * (m - 1))
    return upper_form, (SimpleSlope(1, 3), tuple(repeated))


def is_middle_regular(p: int, q: int) -> bool:
    """True when some middle binary invariant is 1; equivalent to case III."""
    return 1 in middle_sequence(p, q).binaries
