"""The difference operators D and D^- on functions of partitions.

A :class:`PartitionFunction` wraps a pure evaluator.  Values only need to
support ``+``, ``-`` and multiplication by integers, so both Fractions and
:class:`~partcalc.algebra.DensePolynomial` values work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .partitions import (
    DEFAULT_PARTITION_CAP,
    CapExceeded,
    _add_results,
    _remove_moves,
    as_partition,
    enumerate_extensions,
    hook_product,
)
from .tableaux import skew_count

DEFAULT_OPERATOR_CAP = 12


class PartitionFunction:
    """A memoized pure function lambda -> value with a label for reports."""

    def __init__(self, evaluator, name: str = "g", memoize: bool = True):
        self._evaluator = evaluator
        self.name = name
        # plain dict: concurrent writers can only store identical values
        self._memo = {} if memoize else None
        self._D = None

    def __call__(self, lam):
        lam = as_partition(lam)
        memo = self._memo
        if memo is None:
            return self._evaluator(lam)
        try:
            return memo[lam]
        except KeyError:
            value = memo[lam] = self._evaluator(lam)
            return value

    def __repr__(self):
        return f"PartitionFunction({self.name})"

    def __add__(self, other):
        other = _lift(other)
        return PartitionFunction(lambda lam: self(lam) + other(lam), f"({self.name} + {other.name})")

    def __sub__(self, other):
        other = _lift(other)
        return PartitionFunction(lambda lam: self(lam) - other(lam), f"({self.name} - {other.name})")

    def __mul__(self, other):
        other = _lift(other)
        return PartitionFunction(lambda lam: self(lam) * other(lam), f"{self.name}*{other.name}")

    __rmul__ = __mul__

    def __neg__(self):
        return PartitionFunction(lambda lam: -self(lam), f"-{self.name}")

    def over_H(self) -> "PartitionFunction":
        """lambda -> g(lambda) / H_lambda."""
        return PartitionFunction(
            lambda lam: self(lam) * Fraction(1, hook_product(lam)), f"{self.name}/H"
        )


def _lift(value) -> PartitionFunction:
    if isinstance(value, PartitionFunction):
        return value
    c = Fraction(value)
    return PartitionFunction(lambda lam: c, str(c), memoize=False)


inv_H = PartitionFunction(lambda lam: Fraction(1, hook_product(lam)), "1/H")
size = PartitionFunction(lambda lam: Fraction(lam.size), "|lambda|", memoize=False)


def binom_size(r: int) -> PartitionFunction:
    """lambda -> C(|lambda|, r)."""
    return PartitionFunction(lambda lam: Fraction(comb(lam.size, r)) if r >= 0 else Fraction(0),
                             f"C(n,{r})", memoize=False)


def apply_D(g: PartitionFunction) -> PartitionFunction:
    """Dg(lambda) = sum over lambda^+ of g(lambda^+) - g(lambda).

    The result is cached on ``g`` so repeated applications share memo tables.
    """
    if g._D is None:
        def Dg(lam):
            return sum((g(p) for p in _add_results(lam)), 0) - g(lam)
        g._D = PartitionFunction(Dg, f"D({g.name})")
    return g._D


def apply_Dminus(g: PartitionFunction) -> PartitionFunction:
    """D^-g(lambda) = |lambda| g(lambda) - sum over lambda^- of g(lambda^-)."""
    def Dmg(lam):
        return lam.size * g(lam) - sum((g(p) for p in _remove_moves(lam)), 0)
    return PartitionFunction(Dmg, f"D-({g.name})")


def apply_Dk(g: PartitionFunction, k: int, cap: int = DEFAULT_OPERATOR_CAP) -> PartitionFunction:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > cap:
        raise CapExceeded(f"operator depth {k} exceeds cap {cap}")
    for _ in range(k):
        g = apply_D(g)
    return g


def skew_weighted_sum(g: PartitionFunction, mu, n: int, cap: int = DEFAULT_PARTITION_CAP):
    """Sum of f_{lambda/mu} g(lambda) over lambda containing mu with n more boxes."""
    mu = as_partition(mu)
    return sum((skew_count(lam, mu) * g(lam) for lam in enumerate_extensions(mu, n, cap)), 0)


def skew_sum_via_binomial(g: PartitionFunction, mu, n: int, cap: int = DEFAULT_OPERATOR_CAP):
    """sum_k C(n, k) D^k g(mu); equals ``skew_weighted_sum`` for every g."""
    mu = as_partition(mu)
    return sum((comb(n, k) * apply_Dk(g, k, cap)(mu) for k in range(n + 1)), 0)


def Dk_via_inversion(g: PartitionFunction, mu, n: int, cap: int = DEFAULT_PARTITION_CAP):
    """D^n g(mu) as an alternating binomial sum of skew weighted sums."""
    mu = as_partition(mu)
    return sum(
        ((-1) ** (n + k) * comb(n, k) * skew_weighted_sum(g, mu, k, cap) for k in range(n + 1)), 0
    )


@dataclass
class Telescope:
    A: list
    B: list
    first_failure: int | None = field(default=None)

    @property
    def holds(self) -> bool:
        return self.first_failure is None


def telescope(g: PartitionFunction, mu, n: int, cap: int = DEFAULT_PARTITION_CAP) -> Telescope:
    """A(k) = weighted sums of g, B(k) = weighted sums of Dg; checks A(k+1) = A(k) + B(k)."""
    Dg = apply_D(g)
    A = [skew_weighted_sum(g, mu, k, cap) for k in range(n + 1)]
    B = [skew_weighted_sum(Dg, mu, k, cap) for k in range(n)]
    bad = next((k + 1 for k in range(n) if A[k + 1] != A[k] + B[k]), None)
    return Telescope(A, B, bad)
