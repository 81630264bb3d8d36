#!/usr/bin/env python3
"""Walk through the middle-tunnel computation step by step.

The (41, 29) torus knot is worked in full: continued fraction, generator
word, partial matrix products, slopes, binary invariants, and intermediate
knots.  A second example shows how a negative parameter only flips the
signs of the slopes.
"""

from torustunnels import (
    cf_expand,
    generator_word,
    intermediate_of_matrix,
    middle_sequence,
    mod_inverse,
    partial_products,
    rho_invariant,
    slope_of_matrix,
)


def show_word(word):
    indices = range(word.start_index, word.last_index + 1)
    print("  index :", "  ".join(f"{i:3d}" for i in indices))
    print("  letter:", "  ".join(f"{word.letter(i):>3}" for i in indices))


def main():
    p, q = 41, 29
    print(f"=== middle tunnel of the ({p}, {q}) torus knot ===\n")

    cf = cf_expand(p, q)
    print(f"continued fraction of {p}/{q}: {cf}")
    print("(positive remainders, so the last term is never 1)\n")

    word = generator_word(cf)
    n1 = cf[0]
    big_n = word.last_index
    print(f"generator word: L-prefix of length {n1}, then alternating U/L blocks,")
    print("with the unused final letter dropped")
    show_word(word)
    print(f"highest index N = {big_n}\n")

    print("partial products M_t (letters at indices -n1..t, higher index on the left):")
    mats = partial_products(word)
    for t, m in enumerate(mats):
        slope = slope_of_matrix(m)
        inter = intermediate_of_matrix(m)
        print(
            f"  M_{t} = [[{m.a},{m.b}],[{m.c},{m.d}]]"
            f"   det = {m.det()}   a*d+b*c = {slope:4d}   rows sum to {inter}"
        )
    print()

    print("M_0's value 2*n1 + 1 becomes the denominator of the simple slope;")
    print("the integer slopes are the values of M_1 onward.\n")

    qp = mod_inverse(q, p)
    print(f"the rows of M_N split (p, q): q' = {qp} is the inverse of {q} mod {p},")
    print(f"and M_N has rows {mats[-1].rows()[0]} and {mats[-1].rows()[1]}\n")

    seq = middle_sequence(p, q)
    print(f"slope sequence : {seq}")
    print(f"binaries       : {list(seq.binaries)}  (1 where the letter changes)")
    print(f"intermediates  : {', '.join(f'({a},{b})' for a, b in seq.intermediates)}")
    print(f"rho invariant  : {rho_invariant(seq)}  (final slope mod 2)\n")

    print("=== mirror image: (181, -48) ===\n")
    seq = middle_sequence(181, -48)
    print(f"slope sequence : {seq}")
    print(f"binaries       : {list(seq.binaries)}  (unchanged by the mirror)")
    print("the simple slope [-1/7] is stored by its canonical representative [6/7]")


if __name__ == "__main__":
    main()
