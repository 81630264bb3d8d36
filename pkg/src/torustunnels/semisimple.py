"""Cabling sequences of upper and lower tunnels.

The slopes of the upper tunnel of (p, q) come from the ceiling staircase
p_k = ceil(k*p/q) for k = 1..q.  With k0 the first index where the
staircase exceeds 1, the sequence is

    [1/(2*p_k0 - 1)],  2*p_(k0+1) - 1,  ...,  2*p_(q-1) - 1

for q - k0 slopes in total.  The lower tunnel of (p, q) is the upper
tunnel of (q, p).
"""

from __future__ import annotations

from dataclasses import replace
from typing import NamedTuple

from .arith import NotAKnotError, SimpleSlope, UnknotError, gcd, normalize_params
from .middle import CablingSequence

__all__ = ["PkProfile", "pk_profile", "upper_sequence", "lower_sequence"]


class PkProfile(NamedTuple):
    """Ceiling staircase of (p, q): pk[k-1] = ceil(k*p/q) for k = 1..q.

    The staircase is nondecreasing, its last entry equals p, and k0 is the
    smallest k with pk > 1.
    """

    p: int
    q: int
    pk: tuple[int, ...]
    k0: int


def pk_profile(p: int, q: int) -> PkProfile:
    """Compute the staircase of canonical positive coprime p, q >= 2.

    Ceilings are taken with integer arithmetic only: (k*p + q - 1) // q.
    """
    if p == 0 or q == 0:
        raise NotAKnotError(f"({p},{q}) is not a knot (zero coordinate)")
    if p < 0 or q < 0:
        raise ValueError("pk_profile expects positive canonical parameters")
    g = gcd(p, q)
    if g != 1:
        raise NotAKnotError(f"({p},{q}) is not a knot (gcd = {g})")
    if min(p, q) == 1:
        raise UnknotError(f"({p},{q}) is the trivial knot")
    pk = tuple((k * p + q - 1) // q for k in range(1, q + 1))
    k0 = next(k for k, value in enumerate(pk, start=1) if value > 1)
    return PkProfile(p, q, pk, k0)


def upper_sequence(p: int, q: int) -> CablingSequence:
    """Cabling sequence of the upper tunnel of the (p, q) torus knot.

    Unlike the middle tunnel, (p, q) and (q, p) give genuinely different
    sequences, so no coordinate swap happens; a mirror image (p*q < 0)
    negates every slope.  Binary invariants are all zero (stored empty) and
    intermediate knots are not tracked for this family.
    """
    params = normalize_params(p, q, "upper")
    profile = pk_profile(params.canonical_p, params.canonical_q)
    simple = SimpleSlope(1, 2 * profile.pk[profile.k0 - 1] - 1)
    slopes = tuple(
        2 * profile.pk[k - 1] - 1 for k in range(profile.k0 + 1, profile.q)
    )
    if params.negate_slopes:
        simple = -simple
        slopes = tuple(-m for m in slopes)
    return CablingSequence("upper", simple, slopes, (), ())


def lower_sequence(p: int, q: int) -> CablingSequence:
    """Cabling sequence of the lower tunnel: the upper tunnel of (q, p)."""
    return replace(upper_sequence(q, p), tunnel_kind="lower")
