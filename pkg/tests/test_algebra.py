from fractions import Fraction

import pytest

from partcalc.algebra import (
    DensePolynomial,
    G_even_coefficients,
    TruncatedSeries,
    bernoulli,
    build_G,
    faulhaber,
    g0_coefficients,
    series_ratio,
)

z = DensePolynomial.variable()


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish():
    assert all(bernoulli(m) == 0 for m in range(3, 30, 2))


def test_faulhaber_first():
    assert faulhaber(1) == z * z / 2 + z / 2
    for k in range(1, 21):
        assert faulhaber(1)(k) == k * (k + 1) // 2


def test_faulhaber_square_at_3():
    assert faulhaber(2)(3) == 14


@pytest.mark.parametrize("n", range(1, 13))
def test_faulhaber_matches_power_sums(n):
    P = faulhaber(n)
    for k in range(0, 30):
        assert P(k) == sum(i ** n for i in range(1, k + 1))


@pytest.mark.parametrize("n", range(1, 13))
def test_faulhaber_reflection(n):
    P = faulhaber(n)
    assert P(-1) == 0
    for k in range(0, 8):
        assert P(-k - 1) == (-1) ** (n + 1) * P(k)


def _double_sum(r, n):
    # G_2(n) = sum_{j<=n} sum_{i<=j} G_0(i), G_0(i) = prod_{1<=t<=r}(i^2 - t^2)
    def g0(i):
        p = 1
        for t in range(1, r + 1):
            p *= i * i - t * t
        return p

    return sum(sum(g0(i) for i in range(1, j + 1)) for j in range(1, n + 1))


@pytest.mark.parametrize("r", range(1, 5))
def test_G_properties(r):
    from math import factorial

    G = build_G(r)
    assert G(0) == 0
    for n in range(1, 11):
        assert G(n) == G(-n)
        assert G(n) == Fraction((-1) ** r * n * factorial(r) ** 2, 2) + _double_sum(r, n - 1)


def test_G_is_even_with_known_coefficients():
    assert G_even_coefficients(1) == [Fraction(-7, 12), Fraction(1, 12)]
    assert G_even_coefficients(2) == [Fraction(37, 15), Fraction(-1, 2), Fraction(1, 30)]


def test_g0_coefficients_expand_product():
    eta = g0_coefficients(3)
    poly = sum((c * z ** (2 * w) for w, c in enumerate(eta)), DensePolynomial())
    assert poly == (z * z - 1) * (z * z - 4) * (z * z - 9)


def test_series_ratio_examples():
    one = DensePolynomial((1,))
    assert series_ratio(one, DensePolynomial((1, -1)), 3) == TruncatedSeries([1, 1, 1, 1], 3)
    assert series_ratio(DensePolynomial((1, 1)), one, 5) == TruncatedSeries([1, 1], 5)
    assert series_ratio(DensePolynomial((2, 2)), DensePolynomial((2,)), 2) == TruncatedSeries([1, 1], 2)


def test_series_ratio_zero_constant_term():
    with pytest.raises(ZeroDivisionError):
        series_ratio(DensePolynomial((1,)), DensePolynomial((0, 1)), 3)


def test_polynomial_arithmetic_and_format():
    p = (z + 1) * (z - 2)
    assert p.coeffs == (Fraction(-2), Fraction(-1), Fraction(1))
    assert p.degree == 2
    assert p(3) == 4
    assert p.shift(1) == (z + 2) * (z - 1)
    assert DensePolynomial.from_roots([1, -2]) == (z - 1) * (z + 2)
    assert (Fraction(3, 2) * z ** 2 - Fraction(3, 2) * z).format("n") == "3/2*n^2 - 3/2*n"
    assert DensePolynomial().format() == "0"
    assert DensePolynomial().degree < 0


def test_series_exp_log_roundtrip():
    s = TruncatedSeries([0, 1, Fraction(1, 2), 3], 6)
    assert s.exp().log() == s
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1], 3).exp()
    with pytest.raises(ValueError):
        TruncatedSeries([2, 1], 3).log()


def test_series_exp_matches_factorials():
    from math import factorial

    e = TruncatedSeries([0, 1], 8).exp()
    assert [e[k] for k in range(9)] == [Fraction(1, factorial(k)) for k in range(9)]
