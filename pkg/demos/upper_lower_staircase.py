#!/usr/bin/env python3
"""Upper and lower tunnel slopes from the ceiling staircase.

For coprime p, q >= 2 the staircase p_k = ceil(k*p/q) drives everything:
the first k with p_k > 1 fixes the simple slope [1/(2*p_k - 1)] and each
later k < q contributes the odd slope 2*p_k - 1.  The lower tunnel of
(p, q) is the upper tunnel of (q, p), so one function covers both.
"""

from torustunnels import lower_sequence, pk_profile, upper_sequence


def show_staircase(p, q):
    profile = pk_profile(p, q)
    print(f"staircase of ({p}, {q}):")
    print("  k  :", " ".join(f"{k:3d}" for k in range(1, q + 1)))
    print("  p_k:", " ".join(f"{v:3d}" for v in profile.pk))
    print(f"  first step above 1 at k0 = {profile.k0}; p_q = {profile.pk[-1]} = p")
    print(f"  upper slopes: {upper_sequence(p, q)}")
    print()


def main():
    print("=== the (18, 7) torus knot, both orientations ===\n")
    show_staircase(18, 7)
    show_staircase(7, 18)

    print("the lower tunnel just swaps the parameters:")
    print(f"  lower(18, 7) = {lower_sequence(18, 7)}")
    print(f"  upper(7, 18) = {upper_sequence(7, 18)}")
    print()

    print("repeated values appear exactly as often as the staircase lingers")
    print("on a level; compare the p_k row of (7, 18) with the slope list.")
    print()

    print("=== sign convention ===\n")
    print(f"  upper(18, -7) = {upper_sequence(18, -7)}")
    print("(mirror image: every slope negated, simple slope re-canonicalized)")


if __name__ == "__main__":
    main()
