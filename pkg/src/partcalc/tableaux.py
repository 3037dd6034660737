"""Counting standard Young tableaux of straight and skew shapes."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import (
    CapExceeded,
    Partition,
    SkewShape,
    _remove_moves,
    as_partition,
    hook_product,
)

DEFAULT_ENUMERATION_CAP = 12
SKEW_CACHE_SIZE = 1 << 16


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return 1 if n <= 1 else n * factorial(n - 1)


def syt_count(lam) -> int:
    """f_lambda = |lambda|! / H_lambda."""
    lam = as_partition(lam)
    q, r = divmod(factorial(lam.size), hook_product(lam))
    assert r == 0, f"hook product of {lam} does not divide {lam.size}!"
    return q


def _inv_factorial(k: int) -> Fraction:
    return Fraction(0) if k < 0 else Fraction(1, factorial(k))


def bareiss_determinant(matrix) -> Fraction:
    """Exact determinant by Bareiss elimination (every division is exact)."""
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@lru_cache(maxsize=SKEW_CACHE_SIZE)
def _skew_count(outer: Partition, inner: Partition) -> int:
    ell = len(outer)
    if ell == 0:
        return 1
    matrix = [
        [_inv_factorial(outer.part(i) - inner.part(j) - i + j) for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    value = bareiss_determinant(matrix) * factorial(outer.size - inner.size)
    assert value.denominator == 1 and value >= 0, f"bad skew count for {outer}/{inner}: {value}"
    return int(value)


def skew_syt_count(shape) -> int:
    """f_{lambda/mu} from the Aitken determinant det[1/(lambda_i - mu_j - i + j)!]."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    return _skew_count(shape.outer, shape.inner)


def skew_count(outer, inner) -> int:
    return _skew_count(as_partition(outer), as_partition(inner))


def syt_enumerate(shape, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Count skew tableaux by walking every sequence of corner removals.

    Brute force; only meant as an oracle for ``skew_syt_count``.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    if shape.size > cap:
        raise CapExceeded(f"skew size {shape.size} exceeds enumeration cap {cap}")
    inner = shape.inner

    def walk(lam):
        if lam == inner:
            return 1
        return sum(walk(smaller) for smaller in _remove_moves(lam) if smaller.contains(inner))

    return walk(shape.outer)
