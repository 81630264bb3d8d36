"""Cabling sequence of the middle tunnel of a torus knot."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import SimpleSlope, cf_expand, normalize_params
from .words import (
    generator_word,
    intermediate_of_matrix,
    partial_products,
    slope_of_matrix,
)

__all__ = ["CablingSequence", "middle_sequence", "rho_invariant"]


@dataclass(frozen=True)
class CablingSequence:
    """Invariants of one tunnel.

    ``slopes`` holds the odd integer slopes that follow the simple slope
    (possibly none).  ``binaries`` covers positions 2..N and is nonempty
    only for middle tunnels; upper and lower tunnels are semisimple, so all
    their binary invariants are zero and the tuple stays empty.
    ``intermediates`` lists the torus knots produced along the way, ending
    at the canonical pair itself; it is tracked only for middle tunnels.
    """

    tunnel_kind: str
    simple_slope: SimpleSlope
    slopes: tuple[int, ...]
    binaries: tuple[int, ...]
    intermediates: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        return ", ".join([str(self.simple_slope)] + [str(m) for m in self.slopes])


def middle_sequence(p: int, q: int) -> CablingSequence:
    """Cabling sequence of the middle tunnel of the (p, q) torus knot.

    The input is normalized so the word is built on canonical p > q >= 2;
    the middle tunnel does not distinguish (p, q) from (q, p).  The simple
    slope is [1/(2*n1 + 1)], the integer slopes are a*d + b*c over the
    partial products M_1..M_N, and binary invariant t is 1 exactly when
    the letters at indices t and t-1 differ.  A mirror image (p*q < 0)
    negates every slope and leaves the binaries unchanged.
    """
    params = normalize_params(p, q, "middle")
    cf = cf_expand(params.canonical_p, params.canonical_q)
    word = generator_word(cf)
    mats = partial_products(word)
    simple = SimpleSlope(1, 2 * cf[0] + 1)
    slopes = tuple(slope_of_matrix(m) for m in mats[1:])
    binaries = tuple(
        int(word.letter(t) != word.letter(t - 1)) for t in range(2, len(mats))
    )
    intermediates = tuple(intermediate_of_matrix(m) for m in mats)
    if params.negate_slopes:
        simple = -simple
        slopes = tuple(-m for m in slopes)
    return CablingSequence("middle", simple, slopes, binaries, intermediates)


def rho_invariant(seq: CablingSequence) -> int | Fraction:
    """Final slope of a sequence reduced modulo 2.

    For any sequence with at least one integer slope this is an int, and it
    equals 1 for every tunnel produced here because the integer slopes are
    all odd.  When the sequence is the simple slope alone, the reduction
    happens in Q/2Z and the representative fraction in [0, 2) is returned.
    """
    if seq.slopes:
        return seq.slopes[-1] % 2
    return seq.simple_slope.fraction() % 2
