"""Executable checks of the hook-length identities.

Every ``check_*`` function returns a :class:`VerificationReport` (or a list of
them).  A failed identity is reported, never raised; only malformed input
raises.  All comparisons are exact.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import comb, prod

from .algebra import DensePolynomial
from .corner_calculus import (
    S_via_corner_formula,
    blocks,
    blocks_from_corners,
    corner_generating_check,
    hook_sum_via_corners,
)
from .diffops import (
    Dk_via_inversion,
    PartitionFunction,
    apply_D,
    apply_Dk,
    apply_Dminus,
    binom_size,
    inv_H,
    size,
    skew_sum_via_binomial,
    skew_weighted_sum,
    telescope,
)
from .partitions import (
    _add_results,
    _remove_moves,
    add_moves,
    as_partition,
    corners,
    enumerate_extensions,
    enumerate_partitions,
    hook_product,
    hook_ratio_add,
    hook_ratio_remove,
    hook_values,
    remove_moves,
)
from .report import VerificationReport
from .stats import (
    content_constant,
    okada_constant,
    phi_poly,
    stat_C,
    stat_power_sum_hooks,
    stat_q,
    stat_S,
    statistic_function,
    weight_w,
)
from .tableaux import factorial, skew_count, syt_count, syt_enumerate


@dataclass(frozen=True)
class Caps:
    """Parameter grids for the default suite."""

    n_max: int = 14  # straight sums over |lambda| = n
    r_max: int = 4
    skew_mu_max: int = 4
    skew_n_max: int = 12
    op_lambda_max: int = 7
    op_r_max: int = 3
    no_N: int = 6
    operator_cap: int = 12


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b and a >= 0 else 0


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def partitions_up_to(n: int) -> list:
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


# ---------------------------------------------------------------- straight sums


def check_okada_panova(n: int, r: int) -> VerificationReport:
    """n! sum S(lambda, r)/H^2 = K_r C(n, r+1)."""
    lhs = factorial(n) * sum(
        (Fraction(stat_S(lam, r), hook_product(lam) ** 2) for lam in enumerate_partitions(n)), Fraction(0)
    )
    return VerificationReport("okada-panova", {"n": n, "r": r}, lhs, Fraction(okada_constant(r) * comb(n, r + 1)))


def check_marked_hook(n: int) -> VerificationReport:
    lhs = sum(
        (Fraction(syt_count(lam) * stat_S(lam, 1), hook_product(lam)) for lam in enumerate_partitions(n)),
        Fraction(0),
    )
    return VerificationReport("marked-hook", {"n": n}, lhs, Fraction(3 * comb(n, 2)))


def check_content_formula(n: int, r: int) -> VerificationReport:
    """n! sum C(lambda, r)/H^2 = (2r)!/(r+1)! C(n, r+1)."""
    lhs = factorial(n) * sum(
        (Fraction(stat_C(lam, r), hook_product(lam) ** 2) for lam in enumerate_partitions(n)), Fraction(0)
    )
    return VerificationReport("content", {"n": n, "r": r}, lhs, content_constant(r) * comb(n, r + 1))


def _skew_marked(mu, n, stat, const, name):
    mu = as_partition(mu)
    if n < mu.size:
        raise ValueError("n must be at least |mu|")
    base = stat(mu, 1)
    lhs = sum(
        (Fraction(hook_product(mu) * skew_count(lam, mu) * (stat(lam, 1) - base), hook_product(lam))
         for lam in enumerate_extensions(mu, n - mu.size)),
        Fraction(0),
    )
    rhs = const * (n - mu.size) * (n + mu.size - 1)
    return VerificationReport(name, {"mu": mu, "n": n}, lhs, rhs)


def check_skew_marked_hook(mu, n: int) -> VerificationReport:
    """Sum over |lambda| = n containing mu of H_mu f_{lambda/mu}/H_lambda (S(lambda,1)-S(mu,1))."""
    return _skew_marked(mu, n, stat_S, Fraction(3, 2), "skew-marked-hook")


def check_skew_marked_content(mu, n: int) -> VerificationReport:
    return _skew_marked(mu, n, stat_C, Fraction(1, 2), "skew-marked-content")


# ------------------------------------------------------------- operator levels


def _three_levels(name, g, lam, r, const):
    lam = as_partition(lam)
    H = hook_product(lam)
    iterated = [H * apply_Dk(g, r + s)(lam) for s in range(3)]
    inverted = [H * Dk_via_inversion(g, lam, r + s) for s in range(3)]
    expected = [const * lam.size, const, Fraction(0)]
    ok = iterated == expected and inverted == expected
    return VerificationReport(
        name, {"lambda": lam, "r": r}, iterated, expected, passed=ok,
        counterexample=None if ok else lam, detail={"via_inversion": inverted},
    )


def check_DS(lam, r: int) -> VerificationReport:
    """H D^r(S/H) = K_r |lambda|, H D^{r+1}(S/H) = K_r, H D^{r+2}(S/H) = 0, by two paths."""
    return _three_levels("DS", statistic_function(f"S:{r}/H"), lam, r, okada_constant(r))


def check_DC(lam, r: int) -> VerificationReport:
    return _three_levels("DC", statistic_function(f"C:{r}/H"), lam, r, content_constant(r))


# -------------------------------------------------------------- shifted parts


def _phi_over_H():
    return PartitionFunction(lambda lam: phi_poly(lam) / hook_product(lam), "phi/H")


def _phi_at_over_H(z0):
    return PartitionFunction(lambda lam: phi_poly(lam)(z0) / hook_product(lam), f"phi({z0})/H")


def check_shifted(lam, r_max: int = 3, n_max: int = 5) -> VerificationReport:
    """D(phi(z)/H) = z phi(z+1)/H coefficientwise, plus both corollaries at lambda."""
    lam = as_partition(lam)
    H = hook_product(lam)
    g = _phi_over_H()
    z = DensePolynomial.variable()
    lhs = apply_D(g)(lam)
    rhs = z * phi_poly(lam).shift(1) / H
    failures = []
    for r in range(r_max + 1):
        rising = prod((z + j for j in range(r + 1)), start=DensePolynomial((1,)))
        if apply_Dk(g, r + 1)(lam) != rising * phi_poly(lam).shift(r + 1) / H:
            failures.append(("iterated", r))
        gr = _phi_at_over_H(-r)
        if apply_Dk(gr, r + 1)(lam) != 0:
            failures.append(("vanishing", r))
        for n in range(n_max + 1):
            direct = skew_weighted_sum(gr, lam, n)
            via = sum((comb(n, k) * apply_Dk(gr, k)(lam) for k in range(r + 1)), Fraction(0))
            if direct != via:
                failures.append(("sum", r, n))
    ok = lhs == rhs and not failures
    return VerificationReport(
        "shifted", {"lambda": lam, "r_max": r_max, "n_max": n_max}, lhs, rhs, passed=ok,
        counterexample=None if ok else {"lambda": lam, "failures": failures},
    )


# ---------------------------------------------------------------- polynomiality


def newton_polynomial(values, degree: int) -> DensePolynomial:
    """Polynomial in n through (k, values[k]) for k = 0..degree, via forward differences."""
    diffs = [Fraction(v) for v in values[: degree + 1]]
    leading = []
    for _ in range(degree + 1):
        leading.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    out = DensePolynomial()
    basis = DensePolynomial((1,))
    for k, c in enumerate(leading):
        out = out + c * basis
        basis = basis * DensePolynomial((-k, 1)) / (k + 1)
    return out


def polynomiality_check(values, degree: int, name: str = "polynomiality") -> VerificationReport:
    """Pass iff all (degree+1)-st forward differences vanish."""
    values = [Fraction(v) for v in values]
    if len(values) < degree + 2:
        raise ValueError(f"need at least {degree + 2} values for degree {degree}")
    diffs = values
    for _ in range(degree + 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    ok = all(d == 0 for d in diffs)
    poly = newton_polynomial(values, degree) if ok else None
    return VerificationReport(
        name, {"degree": degree, "count": len(values)}, diffs, [Fraction(0)] * len(diffs),
        passed=ok, detail=poly,
    )


# ----------------------------------------------------------- Nekrasov-Okounkov


def _poly_series_mul(a, b, N):
    out = [DensePolynomial() for _ in range(N + 1)]
    for i, ai in enumerate(a):
        if ai:
            for j in range(N + 1 - i):
                if b[j]:
                    out[i + j] = out[i + j] + ai * b[j]
    return out


def nekrasov_okounkov_sides(N: int):
    """Coefficients of x^0..x^N on both sides, each a polynomial in t."""
    t = DensePolynomial.variable()
    lhs = []
    for n in range(N + 1):
        total = DensePolynomial()
        for lam in enumerate_partitions(n):
            f = syt_count(lam)
            total = total + f * f * prod((t + h * h for h in hook_values(lam)), start=DensePolynomial((1,)))
        lhs.append(total / factorial(n) ** 2)
    rhs = [DensePolynomial((1,))] + [DensePolynomial() for _ in range(N)]
    for i in range(1, N + 1):
        # (1 - x^i)^(-1-t) = sum_k C(t+k, k) x^(ik)
        factor = [DensePolynomial() for _ in range(N + 1)]
        coeff = DensePolynomial((1,))
        for k in range(N // i + 1):
            if k:
                coeff = coeff * (t + k) / k
            factor[i * k] = coeff
        rhs = _poly_series_mul(rhs, factor, N)
    return lhs, rhs


def check_nekrasov_okounkov(N: int) -> VerificationReport:
    if N > 10:
        raise ValueError("N must be at most 10")
    lhs, rhs = nekrasov_okounkov_sides(N)
    bad = next((n for n in range(N + 1) if lhs[n] != rhs[n]), None)
    return VerificationReport("nekrasov-okounkov", {"N": N}, lhs, rhs, counterexample=bad)


# ------------------------------------------------------------- L_k statistics


def _L_over_H(k: int) -> PartitionFunction:
    return statistic_function(f"L:{k}/H")


def check_polynomial_star(mu, r: int, n_max: int) -> VerificationReport:
    """Sum f_{lambda/mu} L_r/H = sum_{k<=2r} C(n,k) D^k(L_r/H)(mu), a polynomial of degree <= 2r."""
    mu = as_partition(mu)
    g = _L_over_H(r)
    direct = [skew_weighted_sum(g, mu, n) for n in range(n_max + 1)]
    via = [sum((comb(n, k) * apply_Dk(g, k)(mu) for k in range(2 * r + 1)), Fraction(0))
           for n in range(n_max + 1)]
    poly = polynomiality_check(direct, 2 * r) if n_max + 1 >= 2 * r + 2 else None
    ok = direct == via and (poly is None or poly.passed)
    return VerificationReport(
        "polynomial-star", {"mu": mu, "r": r, "n_max": n_max}, direct, via, passed=ok,
        detail=None if poly is None else {"polynomial": poly.detail},
    )


def check_DL(lam, r: int) -> VerificationReport:
    """H D^{2r+1}(L_r/H) = 0, H D^{2r}(L_r/H) = (2r-1)!!, H D^{2r-1}(L_r/H) = (2r-1)!! |lambda|."""
    lam = as_partition(lam)
    g = _L_over_H(r)
    H = hook_product(lam)
    df = double_factorial(2 * r - 1)
    lhs = [H * apply_Dk(g, 2 * r - 1)(lam), H * apply_Dk(g, 2 * r)(lam), H * apply_Dk(g, 2 * r + 1)(lam)]
    rhs = [Fraction(df * lam.size), Fraction(df), Fraction(0)]
    return VerificationReport("DL", {"lambda": lam, "r": r}, lhs, rhs)


def check_d_star(lam, k: int) -> VerificationReport:
    """D(L_k/H) = |lambda| L_{k-1}/H - D^-(L_{k-1}/H)."""
    lam = as_partition(lam)
    prev = _L_over_H(k - 1)
    lhs = apply_D(_L_over_H(k))(lam)
    rhs = lam.size * prev(lam) - apply_Dminus(prev)(lam)
    return VerificationReport("d-star", {"lambda": lam, "k": k}, lhs, rhs)


def check_DrL(lam, r: int, k: int) -> VerificationReport:
    """D^r(L_k/H) = |lambda| D^{r-1}(L_{k-1}/H) + (r-1) D^{r-2}(L_{k-1}/H) - D^- D^{r-1}(L_{k-1}/H)."""
    lam = as_partition(lam)
    prev = _L_over_H(k - 1)
    lhs = apply_Dk(_L_over_H(k), r)(lam)
    rhs = lam.size * apply_Dk(prev, r - 1)(lam) - apply_Dminus(apply_Dk(prev, r - 1))(lam)
    if r >= 2:
        rhs += (r - 1) * apply_Dk(prev, r - 2)(lam)
    return VerificationReport("DrL", {"lambda": lam, "r": r, "k": k}, lhs, rhs)


def _align(terms):
    """Sum series * (sqrt z)^(-e) terms on the common exponent max(e)."""
    top = max(e for _, e in terms)
    total = None
    for s, e in terms:
        shift, odd = divmod(top - e, 2)
        if odd:
            raise ValueError("half-power exponents differ by an odd amount")
        s = s.mul_z(shift)
        total = s if total is None else total + s
    return total, top


def check_carde(lam, order: int) -> VerificationReport:
    """sum w(lambda^+) = w(1) w(lambda) + sum w(lambda^-), coefficientwise in z."""
    lam = as_partition(lam)
    plus = [weight_w(p, order) for p in _add_results(lam)]
    w1, e1 = weight_w((1,), order)
    wl, el = weight_w(lam, order)
    right = [(w1 * wl, e1 + el)] + [weight_w(p, order) for p in _remove_moves(lam)]
    lhs, le = _align(plus)
    rhs, re = _align(right)
    return VerificationReport("carde", {"lambda": lam, "order": order}, lhs, rhs, passed=(le == re and lhs == rhs))


# ------------------------------------------------------------ operator algebra


_ALGEBRA_STATS = ("invH", "S:1/H", "q:2/H", "C:1/H")


def _stat_fn(name):
    if name == "size/H":
        return size.over_H()
    return statistic_function(name)


def check_commutator(lam, stat: str) -> VerificationReport:
    """(D D^- - D^- D) g = D g."""
    lam = as_partition(lam)
    g = _stat_fn(stat)
    lhs = apply_D(apply_Dminus(g))(lam) - apply_Dminus(apply_D(g))(lam)
    return VerificationReport("commutator", {"lambda": lam, "g": stat}, lhs, apply_D(g)(lam))


def check_linearity(lam, seed: int = 0) -> VerificationReport:
    lam = as_partition(lam)
    rng = random.Random(seed)
    a1, a2 = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2))
    g1, g2 = _stat_fn("S:1/H"), _stat_fn("q:2/H")
    combo = a1 * g1 + a2 * g2
    lhs = [apply_D(combo)(lam), apply_Dminus(combo)(lam)]
    rhs = [a1 * apply_D(g1)(lam) + a2 * apply_D(g2)(lam),
           a1 * apply_Dminus(g1)(lam) + a2 * apply_Dminus(g2)(lam)]
    return VerificationReport("linearity", {"lambda": lam, "a1": a1, "a2": a2}, lhs, rhs)


def check_D_plus_minus(lam) -> VerificationReport:
    """D(1/H) = 0 and D^-(a/H) = 0."""
    lam = as_partition(lam)
    lhs = [apply_D(inv_H)(lam), apply_Dminus(7 * inv_H)(lam)]
    return VerificationReport("D-annihilators", {"lambda": lam}, lhs, [Fraction(0), Fraction(0)])


def check_dbino(lam, r: int) -> VerificationReport:
    """D(C(n,r)/H) = C(n,r-1)/H and D^-(C(n,r)/H) = r C(n,r)/H."""
    lam = as_partition(lam)
    g = binom_size(r) * inv_H
    n, H = lam.size, hook_product(lam)
    lhs = [apply_D(g)(lam), apply_Dminus(g)(lam)]
    rhs = [Fraction(_binom(n, r - 1), H), Fraction(r * _binom(n, r), H)]
    return VerificationReport("dbino", {"lambda": lam, "r": r}, lhs, rhs)


def check_dkbino(lam, stat: str, k: int, r: int) -> VerificationReport:
    """D^k(C(n,r) g) = sum_i C(k,i) C(n+i, r-k+i) D^i g."""
    lam = as_partition(lam)
    g = _stat_fn(stat)
    n = lam.size
    lhs = apply_Dk(binom_size(r) * g, k)(lam)
    rhs = sum((comb(k, i) * _binom(n + i, r - k + i) * apply_Dk(g, i)(lam) for i in range(k + 1)), Fraction(0))
    return VerificationReport("dkbino", {"lambda": lam, "g": stat, "k": k, "r": r}, lhs, rhs)


def check_leibniz1(lam, stat: str) -> VerificationReport:
    """D(g/H) = sum_+ (g(l+) - g(l))/H_{l+},  D^-(g/H) = sum_- (g(l) - g(l-))/H_{l-}."""
    lam = as_partition(lam)
    g = statistic_function(stat)
    gH = g.over_H()
    lhs = [apply_D(gH)(lam), apply_Dminus(gH)(lam)]
    rhs = [
        sum((Fraction(1, hook_product(p)) * (g(p) - g(lam)) for p in _add_results(lam)), Fraction(0)),
        sum((Fraction(1, hook_product(p)) * (g(lam) - g(p)) for p in _remove_moves(lam)), Fraction(0)),
    ]
    return VerificationReport("leibniz1", {"lambda": lam, "g": stat}, lhs, rhs)


def _plain(name):
    return size if name == "size" else statistic_function(name)


def check_leibniz(lam, stats) -> VerificationReport:
    """Product rule for D and D^- on prod g_j / H, checked in its two forms.

    With two factors the displayed expansion is used; for any number of
    factors the sum over (A, B) splits with A nonempty.
    """
    lam = as_partition(lam)
    gs = [_plain(s) for s in stats]
    prod_g = PartitionFunction(lambda l: prod((g(l) for g in gs), start=Fraction(1)), "*".join(stats))
    lhs = [apply_D(prod_g.over_H())(lam), apply_Dminus(prod_g.over_H())(lam)]

    def split_sum(neighbours, sign):
        total = Fraction(0)
        for p in neighbours:
            delta = [g(p) - g(lam) for g in gs]
            base = [g(lam) for g in gs]
            for mask in cartesian((0, 1), repeat=len(gs)):
                if any(mask):
                    total += prod((delta[j] if mask[j] else base[j] for j in range(len(gs))), start=Fraction(1)) / hook_product(p)
        return sign * total

    rhs = [split_sum(_add_results(lam), 1), split_sum(_remove_moves(lam), -1)]
    ok = lhs == rhs
    if len(gs) == 2:
        g1, g2 = gs
        two = [
            g1(lam) * apply_D(g2.over_H())(lam) + g2(lam) * apply_D(g1.over_H())(lam)
            + sum(((g1(p) - g1(lam)) * (g2(p) - g2(lam)) / hook_product(p) for p in _add_results(lam)), Fraction(0)),
            g1(lam) * apply_Dminus(g2.over_H())(lam) + g2(lam) * apply_Dminus(g1.over_H())(lam)
            - sum(((g1(lam) - g1(p)) * (g2(lam) - g2(p)) / hook_product(p) for p in _remove_moves(lam)), Fraction(0)),
        ]
        ok = ok and lhs == two
    return VerificationReport("leibniz", {"lambda": lam, "g": list(stats)}, lhs, rhs, passed=ok)


def check_qk(lam, k: int) -> VerificationReport:
    """D(q_k/H) = sum_i 2 sum_{j<=k/2} C(k,2j) x_i^(k-2j) / H_{lambda^{i+}}."""
    lam = as_partition(lam)
    x = corners(lam).x
    lhs = apply_D(statistic_function(f"q:{k}/H"))(lam)
    rhs = Fraction(0)
    jumps_ok = True
    for i, p in add_moves(lam):
        jump = 2 * sum(comb(k, 2 * j) * x[i] ** (k - 2 * j) for j in range(1, k // 2 + 1))
        jumps_ok = jumps_ok and stat_q(p, k) - stat_q(lam, k) == jump
        rhs += Fraction(jump, hook_product(p))
    return VerificationReport("qk", {"lambda": lam, "k": k}, lhs, rhs, passed=(lhs == rhs and jumps_ok))


# ---------------------------------------------------------- two-path transforms


def check_main2(stat: str, mu, n: int) -> VerificationReport:
    """Direct skew sum vs sum_k C(n,k) D^k g(mu); iterated D^n g(mu) vs the inversion formula."""
    mu = as_partition(mu)
    g = statistic_function(stat)
    direct = skew_weighted_sum(g, mu, n)
    binomial = skew_sum_via_binomial(g, mu, n)
    iterated = apply_Dk(g, n)(mu)
    inverted = Dk_via_inversion(g, mu, n)
    return VerificationReport(
        "main2", {"g": stat, "mu": mu, "n": n}, [direct, iterated], [binomial, inverted],
    )


def check_telescope(stat: str, mu, n: int) -> VerificationReport:
    tel = telescope(statistic_function(stat), mu, n)
    return VerificationReport(
        "telescope", {"g": stat, "mu": as_partition(mu), "n": n}, tel.A[1:],
        [a + b for a, b in zip(tel.A, tel.B)], counterexample=tel.first_failure,
    )


def check_skew_hook(mu, n: int) -> VerificationReport:
    """Sum f_{lambda/mu}/H_lambda = 1/H_mu."""
    mu = as_partition(mu)
    return VerificationReport("skew-hook", {"mu": mu, "n": n}, skew_weighted_sum(inv_H, mu, n),
                              Fraction(1, hook_product(mu)))


def skew_stanley_values(nu, mu, n_max: int) -> list:
    """(1/(n+|mu|)!) sum f_lambda f_{lambda/mu} p_nu(h^2) for n = 0..n_max."""
    nu, mu = as_partition(nu), as_partition(mu)
    out = []
    for n in range(n_max + 1):
        total = sum(syt_count(lam) * skew_count(lam, mu) * stat_power_sum_hooks(lam, nu)
                    for lam in enumerate_extensions(mu, n))
        out.append(Fraction(total, factorial(n + mu.size)))
    return out


def check_skew_stanley(nu, mu, n_max: int | None = None) -> VerificationReport:
    """Polynomiality in n with degree |nu| + l, plus the finite D-expansion at mu."""
    nu, mu = as_partition(nu), as_partition(mu)
    degree = nu.size + len(nu)
    if n_max is None:
        n_max = 2 * degree + 3
    values = skew_stanley_values(nu, mu, n_max)
    poly = polynomiality_check(values, degree, "skew-stanley")
    g = statistic_function("p:" + str(nu) + "/H")
    via = [sum((comb(n, i) * apply_Dk(g, i)(mu) for i in range(degree + 1)), Fraction(0)) for n in range(n_max + 1)]
    vanishes = apply_Dk(g, degree + 1)(mu) == 0
    ok = poly.passed and via == values and vanishes
    return VerificationReport(
        "skew-stanley", {"nu": nu, "mu": mu, "n_max": n_max}, values, via, passed=ok,
        detail={"polynomial": poly.detail, "degree": degree},
    )


# ----------------------------------------------------------- corners and hooks


_F0_FAMILY = {
    "1": lambda h: 1,
    "h": lambda h: h,
    "h^2": lambda h: h * h,
    "h^4": lambda h: h ** 4,
    "S1": lambda h: h * h - 1,
    "S2": lambda h: (h * h - 1) * (h * h - 4),
    "S3": lambda h: (h * h - 1) * (h * h - 4) * (h * h - 9),
}


def check_sum_F(lam) -> VerificationReport:
    """Sum of F0(h) from corner contents vs direct, over a family of F0; also B_ij multisets."""
    lam = as_partition(lam)
    hooks = hook_values(lam)
    lhs = [hook_sum_via_corners(lam, F) for F in _F0_FAMILY.values()]
    rhs = [Fraction(sum(F(h) for h in hooks)) for F in _F0_FAMILY.values()]
    ok = lhs == rhs and blocks(lam) == blocks_from_corners(lam)
    return VerificationReport("sum-F", {"lambda": lam}, lhs, rhs, passed=ok)


def check_corner_generating(lam, order: int = 6) -> VerificationReport:
    return corner_generating_check(lam, order)


def check_S_corner(lam, r: int) -> VerificationReport:
    lam = as_partition(lam)
    return VerificationReport("S-corner", {"lambda": lam, "r": r}, S_via_corner_formula(lam, r),
                              Fraction(stat_S(lam, r)))


def check_hook_ratios(lam) -> VerificationReport:
    """Hook-multiset change on adding a corner, and both closed hook-ratio products."""
    lam = as_partition(lam)
    cd = corners(lam)
    x, y, m = cd.x, cd.y, cd.m
    H = hook_product(lam)
    base = hook_values(lam)
    lhs, rhs = [], []
    for k, p in add_moves(lam):
        lhs.append(hook_ratio_add(lam, k))
        rhs.append(Fraction(hook_product(p), H))
        for g in (lambda h: h, lambda h: h * h, lambda h: h ** 3):
            lhs.append(Fraction(sum(map(g, hook_values(p))) - sum(map(g, base))))
            rhs.append(Fraction(
                g(1)
                + sum(g(x[k] - x[i]) - g(x[k] - y[i]) for i in range(k))
                + sum(g(x[i] - x[k]) - g(y[i - 1] - x[k]) for i in range(k + 1, m + 1))
            ))
    for row in range(1, len(lam) + 1):
        if lam.part(row) > lam.part(row + 1):
            smaller = list(lam)
            smaller[row - 1] -= 1
            smaller = as_partition([s for s in smaller if s])
            lhs.append(hook_ratio_remove(lam, row))
            rhs.append(Fraction(H, hook_product(smaller)))
    return VerificationReport("hook-ratios", {"lambda": lam}, lhs, rhs)


def check_corner_invariants(lam) -> VerificationReport:
    """Interlacing x_0 < y_1 < ... < x_m, q_0 = 1, q_1 = 0, q_2 = 2|lambda|, and #add - #remove = 1."""
    lam = as_partition(lam)
    cd = corners(lam)
    seq = [v for pair in zip(cd.x, cd.y) for v in pair] + [cd.x[-1]]
    lhs = [all(a < b for a, b in zip(seq, seq[1:])), stat_q(lam, 0), stat_q(lam, 1), stat_q(lam, 2),
           len(add_moves(lam)) - len(remove_moves(lam))]
    rhs = [True, 1, 0, 2 * lam.size, 1]
    return VerificationReport("corner-invariants", {"lambda": lam}, lhs, rhs)


# ------------------------------------------------------------------- tableaux


def check_tableaux(n: int) -> VerificationReport:
    """Sum f^2 = n!, branching up and down for every |lambda| = n, skew recursion."""
    parts = enumerate_partitions(n)
    lhs = [sum(syt_count(lam) ** 2 for lam in parts)]
    rhs = [factorial(n)]
    bad = []
    for lam in parts:
        if (n + 1) * syt_count(lam) != sum(syt_count(p) for p in _add_results(lam)):
            bad.append(("up", lam))
        if n and syt_count(lam) != sum(syt_count(p) for p in _remove_moves(lam)):
            bad.append(("down", lam))
        for k in range(n + 1):
            for mu in enumerate_partitions(k):
                if lam.contains(mu) and lam != mu:
                    rec = sum(skew_count(p, mu) for p in _remove_moves(lam) if p.contains(mu))
                    if skew_count(lam, mu) != rec:
                        bad.append(("skew", lam, mu))
    return VerificationReport("tableaux", {"n": n}, lhs, rhs, passed=(lhs == rhs and not bad),
                              counterexample=bad or None)


def check_skew_counts(lam) -> VerificationReport:
    """Aitken determinant vs brute-force walk, over every mu inside lambda."""
    lam = as_partition(lam)
    inners = [mu for k in range(lam.size + 1) for mu in enumerate_partitions(k) if lam.contains(mu)]
    lhs = [skew_count(lam, mu) for mu in inners]
    rhs = [syt_enumerate((lam, mu)) for mu in inners]
    return VerificationReport("skew-counts", {"lambda": lam}, lhs, rhs)


# ---------------------------------------------------------------- suite runner


def _mus(k):
    return partitions_up_to(k)


def grid(name: str, caps: Caps = Caps()) -> list:
    """(check name, kwargs) tasks for one identity on the default grid."""
    c = caps
    ops = partitions_up_to(c.op_lambda_max)
    small = partitions_up_to(5)
    tasks = {
        "okada-panova": [dict(n=n, r=r) for n in range(1, c.n_max + 1) for r in range(0, c.r_max + 1)],
        "marked-hook": [dict(n=n) for n in range(1, c.n_max + 1)],
        "content": [dict(n=n, r=r) for n in range(1, c.n_max + 1) for r in range(1, c.r_max + 1)],
        "skew-marked-hook": [dict(mu=mu, n=n) for mu in _mus(c.skew_mu_max) for n in range(mu.size, c.skew_n_max + 1)],
        "skew-marked-content": [dict(mu=mu, n=n) for mu in _mus(c.skew_mu_max) for n in range(mu.size, c.skew_n_max + 1)],
        "DS": [dict(lam=lam, r=r) for lam in ops for r in range(1, c.op_r_max + 1) if r + 2 <= c.operator_cap],
        "DC": [dict(lam=lam, r=r) for lam in ops for r in range(1, c.op_r_max + 1) if r + 2 <= c.operator_cap],
        "shifted": [dict(lam=lam, r_max=c.op_r_max, n_max=5) for lam in ops],
        "nekrasov-okounkov": [dict(N=c.no_N)],
        "polynomial-star": [dict(mu=mu, r=r, n_max=6) for mu in _mus(2) for r in range(0, 3)],
        "DL": [dict(lam=lam, r=r) for lam in small for r in (1, 2)],
        "d-star": [dict(lam=lam, k=k) for lam in partitions_up_to(6) for k in (1, 2, 3)],
        "DrL": [dict(lam=lam, r=r, k=k) for lam in partitions_up_to(4) for r in (1, 2, 3) for k in (1, 2)],
        "carde": [dict(lam=lam, order=4) for lam in small],
        "main2": [dict(stat=s, mu=mu, n=n) for s in ("invH", "S:1/H", "C:1/H", "q:2/H", "L:1/H")
                  for mu in ((), (1,), (2, 1)) for n in range(6)],
        "telescope": [dict(stat=s, mu=mu, n=5) for s in ("invH", "S:1/H", "q:2/H") for mu in ((), (1,), (2, 1))],
        "skew-hook": [dict(mu=mu, n=n) for mu in _mus(c.skew_mu_max) for n in range(0, 5)],
        "skew-stanley": [dict(nu=nu, mu=mu) for nu in ((1,), (2,), (1, 1)) for mu in ((), (1,))],
        "commutator": [dict(lam=lam, stat=s) for lam in ops for s in ("invH", "size/H", "q:2/H", "S:1/H")],
        "linearity": [dict(lam=lam) for lam in ops],
        "D-annihilators": [dict(lam=lam) for lam in partitions_up_to(8)],
        "dbino": [dict(lam=lam, r=r) for lam in ops for r in range(0, 5)],
        "dkbino": [dict(lam=lam, stat=s, k=k, r=r) for lam in small for s in ("invH", "q:2/H")
                   for k in range(4) for r in range(5)],
        "leibniz1": [dict(lam=lam, stat=s) for lam in ops for s in ("q:2", "S:1", "C:1")],
        "leibniz": [dict(lam=lam, stats=pair) for lam in ops
                    for pair in (("size", "q:2"), ("size", "S:1"), ("q:2", "S:1"), ("size", "q:2", "S:1"))],
        "qk": [dict(lam=lam, k=k) for lam in ops for k in range(7)],
        "sum-F": [dict(lam=lam) for lam in partitions_up_to(9)],
        "corner-generating": [dict(lam=lam, order=6) for lam in partitions_up_to(8)],
        "S-corner": [dict(lam=lam, r=r) for lam in partitions_up_to(8) for r in (1, 2, 3)],
        "hook-ratios": [dict(lam=lam) for lam in partitions_up_to(8)],
        "corner-invariants": [dict(lam=lam) for lam in partitions_up_to(12)],
        "tableaux": [dict(n=n) for n in range(0, 11)],
        "skew-counts": [dict(lam=lam) for lam in partitions_up_to(8)],
    }
    if name not in tasks:
        raise KeyError(name)
    return [(name, kw) for kw in tasks[name]]


CHECKS = {
    "okada-panova": check_okada_panova,
    "marked-hook": check_marked_hook,
    "content": check_content_formula,
    "skew-marked-hook": check_skew_marked_hook,
    "skew-marked-content": check_skew_marked_content,
    "DS": check_DS,
    "DC": check_DC,
    "shifted": check_shifted,
    "nekrasov-okounkov": check_nekrasov_okounkov,
    "polynomial-star": check_polynomial_star,
    "DL": check_DL,
    "d-star": check_d_star,
    "DrL": check_DrL,
    "carde": check_carde,
    "main2": check_main2,
    "telescope": check_telescope,
    "skew-hook": check_skew_hook,
    "skew-stanley": check_skew_stanley,
    "commutator": check_commutator,
    "linearity": check_linearity,
    "D-annihilators": check_D_plus_minus,
    "dbino": check_dbino,
    "dkbino": check_dkbino,
    "leibniz1": check_leibniz1,
    "leibniz": check_leibniz,
    "qk": check_qk,
    "sum-F": check_sum_F,
    "corner-generating": check_corner_generating,
    "S-corner": check_S_corner,
    "hook-ratios": check_hook_ratios,
    "corner-invariants": check_corner_invariants,
    "tableaux": check_tableaux,
    "skew-counts": check_skew_counts,
}


def run_task(task) -> VerificationReport:
    name, kwargs = task
    return CHECKS[name](**kwargs)


def run_tasks(tasks, workers: int = 1) -> list:
    """Run tasks and return reports in task order, whatever the worker count."""
    tasks = list(tasks)
    if workers <= 1 or len(tasks) < 2:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def run_suite(caps: Caps = Caps(), names=None, workers: int = 1) -> list:
    names = list(CHECKS) if names is None else names
    tasks = [t for name in names for t in grid(name, caps)]
    return run_tasks(tasks, workers)


def caps_dict(caps: Caps) -> dict:
    return asdict(caps)
