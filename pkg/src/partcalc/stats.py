"""Partition statistics: hook and content sums, corner power sums, the
series statistics L_k and the shifted-parts polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .algebra import DensePolynomial, TruncatedSeries, series_ratio
from .diffops import PartitionFunction, inv_H
from .partitions import Partition, as_partition, contents, corners, hook_product, hook_values, parse


def stat_S(lam, r: int) -> int:
    """Sum over boxes of prod_{1<=j<=r} (h^2 - j^2)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return sum(prod(h * h - j * j for j in range(1, r + 1)) for h in hook_values(lam))


def stat_C(lam, r: int) -> int:
    """Sum over boxes of prod_{0<=j<=r-1} (c^2 - j^2)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return sum(prod(c * c - j * j for j in range(r)) for _, c in contents(lam))


def okada_constant(r: int) -> int:
    """K_r = (2r)! (2r+1)! / (r! (r+1)!^2)."""
    q, rem = divmod(factorial(2 * r) * factorial(2 * r + 1), factorial(r) * factorial(r + 1) ** 2)
    assert rem == 0
    return q


def content_constant(r: int) -> Fraction:
    """(2r)!/(r+1)!, the constant of the content formula."""
    return Fraction(factorial(2 * r), factorial(r + 1))


def stat_power_sum_hooks(lam, nu) -> int:
    """p_nu evaluated at the squared hook lengths of lambda."""
    nu = as_partition(nu)
    if not nu:
        raise ValueError("nu must be nonempty")
    hooks = hook_values(lam)
    return prod(sum(h ** (2 * t) for h in hooks) for t in nu)


def stat_q(lam, k: int) -> int:
    cd = corners(lam)
    return sum(x ** k for x in cd.x) - sum(y ** k for y in cd.y)


def stat_q_nu(lam, nu) -> int:
    return prod(stat_q(lam, k) for k in as_partition(nu))


@lru_cache(maxsize=4096)
def rho_series(h: int, order: int) -> TruncatedSeries:
    """h sum_k C(h,2k) z^k / sum_k C(h,2k+1) z^k to the given order."""
    if h < 1:
        raise ValueError("h must be positive")
    num = DensePolynomial(h * comb(h, 2 * k) for k in range(h // 2 + 1))
    den = DensePolynomial(comb(h, 2 * k + 1) for k in range((h + 1) // 2))
    return series_ratio(num, den, order)


@lru_cache(maxsize=65536)
def _rho_product(lam: Partition, order: int) -> TruncatedSeries:
    out = TruncatedSeries.one(order)
    for h in hook_values(lam):
        if h > 1:
            out = out * rho_series(h, order)
    return out


def rho_product(lam, order: int) -> TruncatedSeries:
    """prod over boxes of rho(h, z), truncated at ``order``."""
    return _rho_product(as_partition(lam), order)


def stat_L(lam, k: int) -> Fraction:
    """Coefficient of z^k in prod rho(h, z)."""
    return rho_product(lam, k)[k]


def weight_w(lam, order: int):
    """``(series, e)`` with w(lambda) = series * (sqrt z)^(-e).

    The series part is prod rho(h, z) / H_lambda and e = |lambda|.
    """
    lam = as_partition(lam)
    return rho_product(lam, order) / hook_product(lam), lam.size


@lru_cache(maxsize=65536)
def _phi(lam: Partition) -> DensePolynomial:
    n = lam.size
    return DensePolynomial.from_roots(-(n + lam.part(i) - i) for i in range(1, n + 1))


def phi_poly(lam) -> DensePolynomial:
    """prod_{i=1..n} (z + n + lambda_i - i) with n = |lambda|."""
    return _phi(as_partition(lam))


@dataclass(frozen=True)
class StatisticId:
    kind: str
    params: tuple = ()
    over_H: bool = False

    def __str__(self):
        text = self.kind
        if self.kind in ("p", "qnu"):
            text += ":" + ",".join(map(str, self.params))
        elif self.params:
            text += ":" + str(self.params[0])
        return text + ("/H" if self.over_H else "")


_KINDS = ("S", "C", "p", "q", "qnu", "L", "phi", "invH")


def parse_stat_id(text: str) -> StatisticId:
    """Parse ``S:r``, ``C:r``, ``p:nu``, ``q:k``, ``qnu:nu``, ``L:k``, ``phi:z0``
    or ``invH``, each optionally followed by ``/H``."""
    text = text.strip()
    over_H = text.endswith("/H")
    if over_H:
        text = text[:-2]
    kind, _, arg = text.partition(":")
    if kind not in _KINDS:
        raise ValueError(f"unknown statistic {kind!r}")
    if kind == "invH":
        if arg or over_H:
            raise ValueError("invH takes no argument")
        return StatisticId("invH")
    if not arg:
        raise ValueError(f"statistic {kind} needs an argument")
    if kind in ("p", "qnu"):
        nu = parse(arg)
        if not nu:
            raise ValueError(f"{kind} needs a nonempty partition")
        return StatisticId(kind, tuple(nu), over_H)
    try:
        value = Fraction(arg) if kind == "phi" else int(arg)
    except ValueError:
        raise ValueError(f"bad argument {arg!r} for {kind}") from None
    if kind in ("S", "C") and value < 1:
        raise ValueError(f"{kind} needs r >= 1")
    if kind in ("q", "L") and value < 0:
        raise ValueError(f"{kind} needs k >= 0")
    return StatisticId(kind, (value,), over_H)


def statistic_function(stat) -> PartitionFunction:
    """Resolve a statistic id (or its text form) to a PartitionFunction."""
    if isinstance(stat, str):
        stat = parse_stat_id(stat)
    kind, params = stat.kind, stat.params
    if kind == "invH":
        return inv_H
    if kind == "S":
        fn = lambda lam: Fraction(stat_S(lam, params[0]))
    elif kind == "C":
        fn = lambda lam: Fraction(stat_C(lam, params[0]))
    elif kind == "p":
        fn = lambda lam: Fraction(stat_power_sum_hooks(lam, params))
    elif kind == "q":
        fn = lambda lam: Fraction(stat_q(lam, params[0]))
    elif kind == "qnu":
        fn = lambda lam: Fraction(stat_q_nu(lam, params))
    elif kind == "L":
        fn = lambda lam: stat_L(lam, params[0])
    else:
        fn = lambda lam: phi_poly(lam)(params[0])
    g = PartitionFunction(fn, str(StatisticId(kind, params)))
    return g.over_H() if stat.over_H else g
