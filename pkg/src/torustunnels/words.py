"""Generator words in U and L and their running matrix products.

U = [[1,1],[0,1]] and L = [[1,0],[1,1]] generate the monoid of nonnegative
unimodular 2x2 integer matrices.  The continued fraction [n1, ..., nk] of
p/q determines the word

    L...L  U...U  L...L  U...U  ...    (blocks of sizes n1, n2, n3, ...)

with the single last letter of the final block dropped, since no cabling
corresponds to it.  Letters are indexed from -n1: the L-prefix occupies
indices -n1..-1, the first U sits at index 0, and the highest stored index
is N = n2 + ... + nk - 2.

The partial product M_t multiplies the letters at indices -n1..t with the
higher index on the left.  Every M_t has determinant one and nonnegative
entries.  Its row sum (a+c, b+d) is the mediant step of a Stern-Brocot
descent ending at (p, q), and a*d + b*c is the slope invariant of the
cabling that M_t encodes.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

__all__ = [
    "Mat2",
    "GeneratorWord",
    "IDENTITY",
    "U",
    "L",
    "GENERATORS",
    "generator_word",
    "partial_products",
    "slope_of_matrix",
    "intermediate_of_matrix",
]


class Mat2(NamedTuple):
    """2x2 integer matrix with rows (a, b) and (c, d)."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)


IDENTITY = Mat2(1, 0, 0, 1)
U = Mat2(1, 1, 0, 1)
L = Mat2(1, 0, 1, 1)
GENERATORS = {"U": U, "L": L}


class GeneratorWord(NamedTuple):
    """A word of "U"/"L" letters indexed start_index..start_index+len-1."""

    start_index: int
    letters: str

    @property
    def last_index(self) -> int:
        return self.start_index + len(self.letters) - 1

    def letter(self, i: int) -> str:
        if not self.start_index <= i <= self.last_index:
            raise IndexError(
                f"letter index {i} outside {self.start_index}..{self.last_index}"
            )
        return self.letters[i - self.start_index]


def _check_cf(cf: Sequence[int]) -> None:
    if len(cf) < 2:
        raise ValueError("continued fraction must have at least two terms")
    if any(n < 1 for n in cf):
        raise ValueError("continued fraction terms must be positive")
    if cf[-1] < 2:
        raise ValueError("final continued fraction term must be at least 2")


def generator_word(cf: Sequence[int]) -> GeneratorWord:
    """Alternating L/U word of a continued fraction, without the unused last letter.

    The word has n1 + N + 1 letters and starts at index -n1.
    """
    _check_cf(cf)
    blocks = [("L" if j % 2 == 0 else "U") * n for j, n in enumerate(cf)]
    return GeneratorWord(-cf[0], "".join(blocks)[:-1])


def partial_products(word: GeneratorWord) -> list[Mat2]:
    """Products M_0, ..., M_N with M_t = A_t * A_(t-1) * ... * A_(start_index).

    One left multiplication per letter; the products over the negative
    indices alone (the L-prefix) are accumulated but not reported.
    """
    product = IDENTITY
    out = []
    for offset, ch in enumerate(word.letters):
        product = GENERATORS[ch] @ product
        if word.start_index + offset >= 0:
            out.append(product)
    return out


def slope_of_matrix(m: Mat2) -> int:
    """Slope invariant a*d + b*c; equals 2*b*c + 1, hence odd, when det(m) = 1."""
    return m.a * m.d + m.b * m.c


def intermediate_of_matrix(m: Mat2) -> tuple[int, int]:
    """Row sum (a+c, b+d): the parameters of the torus knot produced at this stage."""
    return m.a + m.c, m.b + m.d
