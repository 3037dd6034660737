"""Hook statistics recovered from corner contents alone.

Three identities live here: the block decomposition of a diagram into
rectangles B_ij whose hook multisets depend only on corner contents, the
rational generating function of the hook ratios H_lambda/H_{lambda^{i+}},
and the expansion of S(lambda, r) in even powers of corner differences.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .algebra import DensePolynomial, G_even_coefficients, TruncatedSeries, series_ratio
from .partitions import as_partition, corner_coordinates, corners, hook_lengths, hook_ratio_add
from .report import VerificationReport
from .stats import stat_q


def partial_sums(F0):
    """F1(n) = F0(1)+...+F0(n), F2(n) = F1(1)+...+F1(n); both vanish for n <= 0."""
    f1_cache: dict = {}
    f2_cache: dict = {}

    def F1(n):
        if n <= 0:
            return 0
        if n not in f1_cache:
            f1_cache[n] = F1(n - 1) + F0(n)
        return f1_cache[n]

    def F2(n):
        if n <= 0:
            return 0
        if n not in f2_cache:
            f2_cache[n] = F2(n - 1) + F1(n)
        return f2_cache[n]

    return F1, F2


def hook_sum_via_corners(lam, F0) -> Fraction:
    """Sum of F0(h) over boxes, computed from x and y through double partial sums."""
    cd = corners(lam)
    x, y = cd.x, cd.y
    _, F2 = partial_sums(F0)
    total = Fraction(0)
    # y is 1-based in the formulas: y_i == y[i - 1]
    for i in range(1, cd.m + 1):
        for j in range(i):
            total += (F2(x[i] - x[j] - 1) + F2(y[i - 1] - y[j] - 1)
                      - F2(x[i] - y[j] - 1) - F2(y[i - 1] - x[j] - 1))
    return total


def blocks(lam) -> dict:
    """Actual hook multisets of the rectangles B_ij, keyed by (i, j), j < i."""
    lam = as_partition(lam)
    alpha, beta = corner_coordinates(lam)
    hooks = dict(hook_lengths(lam))
    m = len(beta) - 1
    out = {}
    for i in range(1, m + 1):
        rows = range(alpha[i] + 1, alpha[i - 1] + 1)  # alpha_{i+1}+1 .. alpha_i
        for j in range(i):
            cols = range(beta[j] + 1, beta[j + 1] + 1)
            out[(i, j)] = sorted(hooks[(r, c)] for r in rows for c in cols)
    return out


def blocks_from_corners(lam) -> dict:
    """Hook multisets of B_ij predicted from corner contents."""
    cd = corners(lam)
    x, y = cd.x, cd.y
    out = {}
    for i in range(1, cd.m + 1):
        height = x[i] - y[i - 1]
        for j in range(i):
            out[(i, j)] = sorted(
                a - b for a in range(x[i] - y[j], x[i] - x[j]) for b in range(height)
            )
    return out


def corner_polynomials(lam):
    """(left, right) of sum_i (H/H_{i+}) prod_{j != i} (1 - x_j z) = prod_j (1 - y_j z)."""
    cd = corners(lam)
    left = DensePolynomial()
    for i in range(cd.m + 1):
        ratio = 1 / hook_ratio_add(lam, i)
        left = left + ratio * prod(
            (DensePolynomial((1, -xj)) for j, xj in enumerate(cd.x) if j != i), start=DensePolynomial((1,))
        )
    right = prod((DensePolynomial((1, -yj)) for yj in cd.y), start=DensePolynomial((1,)))
    return left, right


def corner_generating_check(lam, order: int) -> VerificationReport:
    """Check sum_i (H/H_{i+}) / (1 - x_i z) = prod(1 - y_j z) / prod(1 - x_j z).

    Exact polynomial identity after clearing denominators, then the same
    identity as truncated series, then the exp of sum q_k z^k / k form.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    lam = as_partition(lam)
    cd = corners(lam)
    left, right = corner_polynomials(lam)

    lhs_series = TruncatedSeries((), order)
    for i, xi in enumerate(cd.x):
        lhs_series = lhs_series + series_ratio(
            DensePolynomial((1 / hook_ratio_add(lam, i),)), DensePolynomial((1, -xi)), order
        )
    num = prod((DensePolynomial((1, -yj)) for yj in cd.y), start=DensePolynomial((1,)))
    den = prod((DensePolynomial((1, -xj)) for xj in cd.x), start=DensePolynomial((1,)))
    rhs_series = series_ratio(num, den, order)
    log_series = TruncatedSeries([0] + [Fraction(stat_q(lam, k), k) for k in range(1, order + 1)], order)
    exp_series = log_series.exp()

    ok = left == right and lhs_series == rhs_series and rhs_series == exp_series
    return VerificationReport(
        "corner-generating",
        {"lambda": lam, "order": order},
        lhs_series,
        rhs_series,
        passed=ok,
        counterexample=None if ok else lam,
        detail={"polynomial_lhs": left, "polynomial_rhs": right, "exp_form": exp_series},
    )


def corner_V(lam, k: int) -> int:
    """V(k): triangular xx and yy sums of (difference)^(2k) minus the full xy grid."""
    cd = corners(lam)
    x, y = cd.x, cd.y
    e = 2 * k
    xx = sum((x[i] - x[j]) ** e for i in range(len(x)) for j in range(i, len(x)))
    yy = sum((y[i] - y[j]) ** e for i in range(len(y)) for j in range(i, len(y)))
    xy = sum((xi - yj) ** e for xi in x for yj in y)
    return xx + yy - xy


def corner_V_symmetrized(lam, k: int) -> int:
    """Coefficient form from (sum e^{x z} - sum e^{y z})(sum e^{-x z} - sum e^{-y z}):
    full grids everywhere with the cross term appearing twice.  Equals 2 V(k)."""
    cd = corners(lam)
    x, y = cd.x, cd.y
    e = 2 * k
    xx = sum((a - b) ** e for a in x for b in x)
    yy = sum((a - b) ** e for a in y for b in y)
    xy = sum((a - b) ** e for a in x for b in y)
    return xx + yy - 2 * xy


def S_via_corner_formula(lam, r: int) -> Fraction:
    """S(lambda, r) = sum_{k=1}^{r+1} xi_k V(k), xi_k the even coefficients of G."""
    if r < 1:
        raise ValueError("r must be >= 1")
    xi = G_even_coefficients(r)
    return sum((xi[k - 1] * corner_V(lam, k) for k in range(1, r + 2)), Fraction(0))
