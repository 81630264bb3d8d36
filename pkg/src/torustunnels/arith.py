"""Exact integer and rational primitives shared by the tunnel-invariant modules.

Everything works on plain Python integers, which have arbitrary magnitude,
so slope values can grow without any overflow handling.  Rational values
are ``fractions.Fraction``; nothing in this package touches floating point.

Conventions used throughout:

* A torus knot is described by a pair (p, q) of coprime integers.  It is a
  nontrivial knot exactly when both coordinates have magnitude >= 2.  Bad
  pairs are rejected with ``NotAKnotError`` (a zero coordinate, or a common
  divisor) or ``UnknotError`` (a coordinate of magnitude 1, which gives the
  trivial knot).
* (-p, -q) describes the same curve as (p, q) and normalizes identically;
  p*q < 0 marks the mirror image, which negates every slope invariant.
* Continued fractions are the positive-remainder Euclidean expansions
  [n1, ..., nk] with every term >= 1 and nk >= 2, so that
  p/q = n1 + 1/(n2 + 1/(... + 1/nk)).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from fractions import Fraction
from math import gcd
from typing import NamedTuple

__all__ = [
    "NotAKnotError",
    "UnknotError",
    "SimpleSlope",
    "TorusKnotParams",
    "TUNNEL_KINDS",
    "gcd",
    "egcd",
    "mod_inverse",
    "cf_expand",
    "cf_value",
    "normalize_params",
    "coprime_pairs",
]

TUNNEL_KINDS = ("middle", "upper", "lower")


class NotAKnotError(ValueError):
    """The pair (p, q) does not describe a knot (zero coordinate or gcd != 1)."""


class UnknotError(ValueError):
    """The pair (p, q) describes the trivial knot, which carries no invariants here."""


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y = g = gcd(a, b).

    For nonnegative inputs g is the ordinary nonnegative gcd.
    """
    r0, r1 = a, b
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while r1:
        div = r0 // r1
        r0, r1 = r1, r0 - div * r1
        x0, x1 = x1, x0 - div * x1
        y0, y1 = y1, y0 - div * y1
    return r0, x0, y0


def mod_inverse(q: int, p: int) -> int:
    """Return the integer q' with 0 < q' < p and q*q' congruent to 1 mod p."""
    if p < 2:
        raise ValueError(f"modulus must be at least 2, got {p}")
    g, x, _ = egcd(q % p, p)
    if g != 1:
        raise ValueError(f"{q} is not invertible modulo {p} (gcd = {g})")
    return x % p


def cf_expand(p: int, q: int) -> list[int]:
    """Positive-remainder continued fraction [n1, ..., nk] of p/q.

    Requires coprime p > q >= 2.  Under those preconditions the expansion
    has at least two terms and always ends with nk >= 2, because the last
    nonzero remainder is 1 and the remainder before it is at least 2.
    """
    if q < 2:
        raise ValueError(f"denominator must be at least 2, got {q}")
    if p <= q:
        raise ValueError(f"expected p > q, got p = {p}, q = {q}")
    g = gcd(p, q)
    if g != 1:
        raise ValueError(f"({p}, {q}) is not coprime (gcd = {g})")
    terms = []
    while q:
        terms.append(p // q)
        p, q = q, p % q
    assert terms[-1] >= 2, "positive-remainder expansion cannot end in 1"
    return terms


def cf_value(terms: Sequence[int]) -> Fraction:
    """Exact value n1 + 1/(n2 + 1/(... + 1/nk)) of a continued fraction."""
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for n in reversed(terms[:-1]):
        value = n + 1 / value
    return value


class SimpleSlope:
    """A residue class num/den in Q/Z, stored canonically.

    The representative satisfies den > 0, 0 <= num < den and
    gcd(num, den) = 1, so the class of -1/7 and the class of 6/7 compare
    equal and both print as "[6/7]".
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        if den == 0:
            raise ValueError("zero denominator")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        self.num = num // g
        self.den = den // g

    def fraction(self) -> Fraction:
        """The canonical representative as an exact fraction in [0, 1)."""
        return Fraction(self.num, self.den)

    def __neg__(self) -> "SimpleSlope":
        return SimpleSlope(-self.num, self.den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SimpleSlope):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"SimpleSlope({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"[{self.num}/{self.den}]"


class TorusKnotParams(NamedTuple):
    """A user-supplied (p, q) pair together with its canonical form.

    canonical_p/canonical_q are the positive parameters the algorithms run
    on.  negate_slopes records a mirror image (p*q < 0), which negates every
    slope invariant; swapped records a (p, q) -> (q, p) exchange, applied
    only for middle tunnels to reach canonical_p > canonical_q.
    """

    p: int
    q: int
    canonical_p: int
    canonical_q: int
    negate_slopes: bool
    swapped: bool


def normalize_params(p: int, q: int, tunnel_kind: str = "middle") -> TorusKnotParams:
    """Validate (p, q) and put it in canonical form for the given tunnel kind."""
    if tunnel_kind not in TUNNEL_KINDS:
        raise ValueError(f"unknown tunnel kind {tunnel_kind!r}")
    if p == 0 or q == 0:
        raise NotAKnotError(f"({p},{q}) is not a knot (zero coordinate)")
    g = gcd(abs(p), abs(q))
    if g != 1:
        raise NotAKnotError(f"({p},{q}) is not a knot (gcd = {g})")
    cp, cq = abs(p), abs(q)
    if min(cp, cq) == 1:
        raise UnknotError(f"({p},{q}) is the trivial knot")
    swapped = tunnel_kind == "middle" and cp < cq
    if swapped:
        cp, cq = cq, cp
    return TorusKnotParams(p, q, cp, cq, p * q < 0, swapped)


def coprime_pairs(max_p: int) -> Iterator[tuple[int, int]]:
    """Yield every coprime pair 2 <= q < p <= max_p in (p, q) lexicographic order."""
    for p in range(3, max_p + 1):
        for q in range(2, p):
            if gcd(p, q) == 1:
                yield p, q
