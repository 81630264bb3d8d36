#!/usr/bin/env python3
"""Census of tunnel counts over all small torus knots.

Every coprime pair 2 <= q < p <= MAX is classified by comparing the three
invariant sequences, and the result is checked against the closed-form
case predicates:

  case I  : p - q = 1            -> one tunnel
  case II : p = m*q +- 1, m >= 2 -> two tunnels (middle = upper)
  case III: otherwise            -> three tunnels

Along the way the census verifies that the middle tunnel has a nonzero
binary invariant exactly in case III.
"""

from collections import Counter

from torustunnels import case_of, classify, coprime_pairs, is_middle_regular, middle_sequence

MAX = 40


def main():
    counts = Counter()
    samples = {}
    for p, q in coprime_pairs(MAX):
        result = classify(p, q)
        assert result.case_label == case_of(p, q)
        assert is_middle_regular(p, q) == (result.case_label == "III")
        counts[result.case_label] += 1
        samples.setdefault(result.case_label, (p, q, result))

    print(f"=== census of coprime pairs 2 <= q < p <= {MAX} ===\n")
    total = sum(counts.values())
    for label in ("I", "II", "III"):
        print(f"case {label:>3}: {counts[label]:4d} knots")
    print(f"  total: {total:4d}\n")

    print("one sample per case:\n")
    for label in ("I", "II", "III"):
        p, q, result = samples[label]
        middle = middle_sequence(p, q)
        parts = "; ".join(" = ".join(part) for part in result.coincidences)
        print(f"  ({p}, {q})  case {label}: {result.distinct_count} distinct  [{parts}]")
        print(f"       middle sequence: {middle}")
        print(f"       middle binaries: {list(middle.binaries)}")
    print()

    print("a middle tunnel with some binary invariant 1 is 'regular', and that")
    print("happens exactly for the case III knots, the ones with three tunnels.")


if __name__ == "__main__":
    main()
