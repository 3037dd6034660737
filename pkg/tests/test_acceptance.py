"""Acceptance criteria 1-13, exact comparisons only.

Each test prints one ``criterion N: PASS|FAIL`` line; the lines are also
collected and repeated in the pytest terminal summary.  Running this file
directly (``python3 tests/test_acceptance.py``) prints the same lines.
"""

import time

from oracles import skew_tableaux
from partcalc import verify
from partcalc.partitions import enumerate_partitions
from partcalc.stats import okada_constant
from partcalc.tableaux import factorial, skew_count, syt_count, syt_enumerate

RESULTS = []

ALG_STATS = ("invH", "size/H", "S:1/H", "q:2/H", "C:1/H")
LEIBNIZ_SETS = (("size", "q:2"), ("size", "S:1"), ("q:2", "S:1"), ("size", "q:2", "S:1"))


def _record(number, title, budget, fn):
    start = time.perf_counter()
    failures = fn()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < budget
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, budget {budget}s)"
    if failures:
        line += f"  first failure: {failures[0]}"
    print(line)
    RESULTS.append(line)
    return ok, failures


def _failed(reports):
    return [(r.identity, r.params_text()) for r in reports if not r.passed]


def up_to(n):
    return verify.partitions_up_to(n)


def criterion_1():
    bad = [] if [okada_constant(r) for r in range(4)] == [1, 3, 40, 1050] else [("K_r", "constants")]
    return bad + _failed(verify.check_okada_panova(n, r) for n in range(0, 15) for r in range(0, 5))


def criterion_2():
    return _failed(verify.check_marked_hook(n) for n in range(0, 17))


SKEW_MUS = ((), (1,), (2,), (1, 1), (2, 1), (2, 2))


def criterion_3():
    reports = []
    for mu in SKEW_MUS:
        for n in range(sum(mu), 13):
            reports.append(verify.check_skew_marked_hook(mu, n))
            reports.append(verify.check_skew_marked_content(mu, n))
    return _failed(reports)


def criterion_4():
    return _failed(verify.check_content_formula(n, r) for n in range(0, 15) for r in range(0, 5))


def criterion_5():
    reports = []
    for lam in ((), (1,), (2, 1), (3, 1)):
        for r in (1, 2):
            reports += [verify.check_DS(lam, r), verify.check_DC(lam, r)]
    # the two paths must also agree with each other, not just with the targets
    bad = [(r.identity, r.params_text()) for r in reports if r.lhs != r.detail["via_inversion"]]
    return _failed(reports) + bad


def criterion_6():
    return _failed(
        verify.check_main2(stat, mu, n)
        for stat in ("invH", "S:1/H", "C:1/H", "q:2/H", "L:1/H")
        for mu in ((), (1,), (2, 1))
        for n in range(0, 6)
    )


def criterion_7():
    reports = []
    for lam in up_to(7):
        reports += [verify.check_commutator(lam, s) for s in ALG_STATS]
        reports += [verify.check_leibniz(lam, s) for s in LEIBNIZ_SETS]
        reports += [verify.check_leibniz1(lam, s) for s in ("q:2", "S:1", "C:1")]
        reports += [verify.check_dbino(lam, r) for r in range(0, 6)]
        reports.append(verify.check_D_plus_minus(lam))
        reports.append(verify.check_linearity(lam))
    for lam in up_to(5):
        reports += [verify.check_dkbino(lam, s, k, r) for s in ("invH", "q:2/H") for k in range(4) for r in range(5)]
    return _failed(reports)


def criterion_8():
    return _failed(verify.check_shifted(lam, 3, 5) for lam in up_to(7))


def criterion_9():
    reports = [verify.check_DL(lam, r) for lam in up_to(5) for r in (1, 2)]
    reports += [verify.check_carde(lam, order) for lam in up_to(5) for order in range(1, 5)]
    return _failed(reports)


def criterion_10():
    reports = []
    for lam in up_to(8):
        reports.append(verify.check_sum_F(lam))
        reports.append(verify.check_corner_generating(lam, 6))
        reports += [verify.check_S_corner(lam, r) for r in (1, 2, 3)]
        reports.append(verify.check_hook_ratios(lam))
    return _failed(reports)


def criterion_11():
    return _failed([verify.check_nekrasov_okounkov(6)])


def criterion_12():
    bad = []
    if syt_count((6, 3, 3, 2)) != 35035:
        bad.append(("f", "6,3,3,2"))
    for n in range(0, 11):
        parts = enumerate_partitions(n)
        if sum(syt_count(lam) ** 2 for lam in parts) != factorial(n):
            bad.append(("sum f^2", n))
        bad += [("branching", lam) for lam in parts
                if (n + 1) * syt_count(lam) != sum(syt_count(p) for p in verify._add_results(lam))]
    for lam in up_to(8):
        for mu in up_to(lam.size):
            if lam.contains(mu):
                det = skew_count(lam, mu)
                if det != skew_tableaux(tuple(lam), tuple(mu)) or det != syt_enumerate((lam, mu)):
                    bad.append(("skew", lam, mu))
    return bad


def criterion_13():
    reports = []
    for nu in ((1,), (2,), (1, 1)):
        for mu in ((), (1,)):
            degree = sum(nu) + len(nu)
            values = verify.skew_stanley_values(nu, mu, 2 * degree + 3)
            reports.append(verify.polynomiality_check(values, degree))
            reports.append(verify.check_skew_stanley(nu, mu, 2 * degree + 3))
    return _failed(reports)


CRITERIA = [
    (1, "Okada-Panova sums, n <= 14, r <= 4", 30, criterion_1),
    (2, "marked hook formula, n <= 16", 30, criterion_2),
    (3, "skew marked hook and content, |mu| <= n <= 12", 60, criterion_3),
    (4, "content formula, n <= 14, r <= 4", 30, criterion_4),
    (5, "three-level D checks for S and C, two paths", 60, criterion_5),
    (6, "binomial expansion vs direct skew sums", 60, criterion_6),
    (7, "operator algebra, |lambda| <= 7", 60, criterion_7),
    (8, "shifted parts polynomial, |lambda| <= 7, r <= 3", 60, criterion_8),
    (9, "D-degree of L_r and the w recurrence", 120, criterion_9),
    (10, "corner machinery, |lambda| <= 8", 120, criterion_10),
    (11, "Nekrasov-Okounkov truncation, n <= 6", 30, criterion_11),
    (12, "tableau layer", 60, criterion_12),
    (13, "skew hook-square sums are polynomial in n", 120, criterion_13),
]


def _run(number):
    num, title, budget, fn = CRITERIA[number - 1]
    ok, failures = _record(num, title, budget, fn)
    assert ok, failures[:5]


def test_criterion_01_okada_panova():
    _run(1)


def test_criterion_02_marked_hook():
    _run(2)


def test_criterion_03_skew_marked():
    _run(3)


def test_criterion_04_content_formula():
    _run(4)


def test_criterion_05_three_level_D():
    _run(5)


def test_criterion_06_binomial_expansion():
    _run(6)


def test_criterion_07_operator_algebra():
    _run(7)


def test_criterion_08_shifted_parts():
    _run(8)


def test_criterion_09_DL_and_w_recurrence():
    _run(9)


def test_criterion_10_corner_machinery():
    _run(10)


def test_criterion_11_nekrasov_okounkov():
    _run(11)


def test_criterion_12_tableaux():
    _run(12)


def test_criterion_13_polynomiality():
    _run(13)


if __name__ == "__main__":
    for number in range(1, len(CRITERIA) + 1):
        num, title, budget, fn = CRITERIA[number - 1]
        _record(num, title, budget, fn)
