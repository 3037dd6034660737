from fractions import Fraction

import pytest

from oracles import skew_tableaux, syt_by_permutations
from partcalc.partitions import SkewShape, enumerate_partitions
from partcalc.tableaux import bareiss_determinant, factorial, skew_count, skew_syt_count, syt_count, syt_enumerate


def test_syt_examples():
    assert syt_count(()) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((6, 3, 3, 2)) == 35035
    assert syt_count((6, 3, 3, 2)) == factorial(14) // 2488320


def test_skew_examples():
    assert skew_syt_count(SkewShape((3, 2), (3, 2))) == 1
    assert skew_syt_count(SkewShape((2, 1), (1,))) == 2
    assert skew_syt_count(((3, 2), (1,))) == 5
    assert skew_count((3, 3, 1), (1,)) == syt_enumerate(SkewShape((3, 3, 1), (1,))) == 21


def test_enumerate_examples():
    assert syt_enumerate(((1,), ())) == 1
    assert syt_enumerate(((2, 2), ())) == 2


@pytest.mark.parametrize("parts", [(1,), (2, 1), (2, 2), (3, 1), (3, 2), (2, 2, 1), (3, 1, 1), (3, 2, 1)])
def test_syt_matches_permutation_oracle(parts):
    assert syt_count(parts) == syt_by_permutations(parts)


@pytest.mark.parametrize("n", range(0, 9))
def test_skew_determinant_matches_peeling_oracle(n):
    for lam in enumerate_partitions(n):
        for k in range(n + 1):
            for mu in enumerate_partitions(k):
                if lam.contains(mu):
                    assert skew_count(lam, mu) == skew_tableaux(tuple(lam), tuple(mu))


def test_enumeration_cap():
    with pytest.raises(ValueError):
        syt_enumerate(((7, 6), ()), cap=12)


def test_bareiss():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[2, 1], [1, 1]]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[Fraction(1, 2), 1], [1, 2]]) == 0
    assert bareiss_determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_sum_of_squares():
    for n in range(0, 11):
        assert sum(syt_count(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)
