import math

import pytest
from hypothesis import assume, given, strategies as st

from torustunnels.arith import cf_expand, coprime_pairs, mod_inverse
from torustunnels.words import (
    GeneratorWord,
    L,
    Mat2,
    U,
    generator_word,
    intermediate_of_matrix,
    partial_products,
    slope_of_matrix,
)


def test_generator_matrices():
    assert U == Mat2(1, 1, 0, 1)
    assert L == Mat2(1, 0, 1, 1)
    assert (U @ L) == Mat2(2, 1, 1, 1)
    assert U.det() == L.det() == 1


def test_generator_word_examples():
    word = generator_word([1, 2, 2, 2, 2])
    assert word == GeneratorWord(-1, "LUULLUUL")
    assert word.last_index == 6

    word = generator_word([3, 1, 3, 2, 1, 3])
    assert word == GeneratorWord(-3, "LLLULLLUULUU")
    assert word.last_index == 8

    assert generator_word([1, 2]) == GeneratorWord(-1, "LU")


def test_generator_word_letter_indexing():
    word = generator_word([2, 3])
    assert word.letters == "LLUU"
    assert word.letter(-2) == "L"
    assert word.letter(0) == "U"
    with pytest.raises(IndexError):
        word.letter(2)
    with pytest.raises(IndexError):
        word.letter(-3)


def test_generator_word_rejects_bad_cf():
    with pytest.raises(ValueError):
        generator_word([5])
    with pytest.raises(ValueError):
        generator_word([2, 1])
    with pytest.raises(ValueError):
        generator_word([0, 2])


def test_partial_products_examples():
    mats = partial_products(generator_word([1, 2, 2, 2, 2]))
    assert len(mats) == 7
    assert mats[0] == Mat2(2, 1, 1, 1)
    assert mats[6] == Mat2(17, 12, 24, 17)

    assert partial_products(generator_word([1, 2])) == [Mat2(2, 1, 1, 1)]


def test_slope_of_matrix_examples():
    assert slope_of_matrix(Mat2(3, 2, 1, 1)) == 5
    assert slope_of_matrix(Mat2(17, 12, 24, 17)) == 577
    assert slope_of_matrix(Mat2(1, 0, 0, 1)) == 1


def test_intermediate_of_matrix_examples():
    assert intermediate_of_matrix(Mat2(2, 1, 1, 1)) == (3, 2)
    assert intermediate_of_matrix(Mat2(132, 35, 49, 13)) == (181, 48)
    assert intermediate_of_matrix(Mat2(1, 0, 0, 1)) == (1, 1)


def test_partial_products_sweep():
    # Determinants stay 1, slopes stay odd, row sums are coprime, their
    # totals strictly increase, and the walk starts at (2*n1+1, 2) and ends
    # at (p, q).
    for p, q in coprime_pairs(120):
        cf = cf_expand(p, q)
        mats = partial_products(generator_word(cf))
        assert len(mats) == sum(cf[1:]) - 1
        previous_total = 0
        for m in mats:
            assert m.det() == 1
            assert slope_of_matrix(m) % 2 == 1
            a, b = intermediate_of_matrix(m)
            assert math.gcd(a, b) == 1
            assert a + b > previous_total
            previous_total = a + b
        assert intermediate_of_matrix(mats[0]) == (2 * cf[0] + 1, 2)
        assert intermediate_of_matrix(mats[-1]) == (p, q)


def test_principal_pair_rows():
    # Rows of the final matrix are (q', (q*q'-1)/p) and (p-q', q-(q*q'-1)/p)
    # as a set, with q' the inverse of q modulo p.
    mats = partial_products(generator_word(cf_expand(41, 29)))
    assert set(mats[-1].rows()) == {(17, 12), (24, 17)}

    mats = partial_products(generator_word(cf_expand(181, 48)))
    assert set(mats[-1].rows()) == {(132, 35), (49, 13)}

    for p, q in coprime_pairs(60):
        final = partial_products(generator_word(cf_expand(p, q)))[-1]
        qp = mod_inverse(q, p)
        r = (q * qp - 1) // p
        assert set(final.rows()) == {(qp, r), (p - qp, q - r)}


@given(st.integers(min_value=3, max_value=10**5), st.integers(min_value=2, max_value=10**5))
def test_final_product_reaches_pair_random(p, q):
    assume(p > q and math.gcd(p, q) == 1)
    final = partial_products(generator_word(cf_expand(p, q)))[-1]
    assert final.det() == 1
    assert intermediate_of_matrix(final) == (p, q)
