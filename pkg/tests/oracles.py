"""Brute-force reference implementations that share no code with the package."""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations


def hooks_by_counting(parts):
    parts = list(parts)
    out = []
    for i, row in enumerate(parts):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for below in parts[i + 1:] if below > j)
            out.append(arm + leg + 1)
    return out


def hook_product(parts):
    p = 1
    for h in hooks_by_counting(parts):
        p *= h
    return p


def euler_partition_counts(n_max):
    """p(0..n_max) via the pentagonal-number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def neighbours_up(parts):
    """All valid one-box additions, found by trying every row."""
    parts = list(parts)
    out = []
    for i in range(len(parts) + 1):
        new = parts + [0]
        new[i] += 1
        if all(a >= b for a, b in zip(new, new[1:])):
            out.append(tuple(p for p in new if p))
    return out


def neighbours_down(parts):
    parts = list(parts)
    out = []
    for i in range(len(parts)):
        new = parts[:]
        new[i] -= 1
        if all(a >= b for a, b in zip(new, new[1:])):
            out.append(tuple(p for p in new if p))
    return out


@lru_cache(maxsize=None)
def skew_tableaux(outer, inner):
    """Count fillings of outer/inner by peeling removable boxes."""
    if outer == inner:
        return 1
    total = 0
    for smaller in neighbours_down(outer):
        if len(smaller) >= len(inner) and all(a >= b for a, b in zip(smaller, inner)):
            total += skew_tableaux(smaller, inner)
    return total


def partitions_of(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    return [(k,) + rest for k in range(min(n, largest), 0, -1) for rest in partitions_of(n - k, k)]


def brute_D(g, lam):
    return sum((g(p) for p in neighbours_up(lam)), Fraction(0)) - g(tuple(lam))


def brute_Dminus(g, lam):
    return sum(lam) * g(tuple(lam)) - sum((g(p) for p in neighbours_down(lam)), Fraction(0))


def syt_by_permutations(parts):
    """Count SYT by testing every filling; only for tiny shapes."""
    boxes = [(i, j) for i, row in enumerate(parts) for j in range(row)]
    count = 0
    for perm in permutations(range(len(boxes))):
        fill = dict(zip(boxes, perm))
        if all(fill[(i, j)] < fill[(i, j + 1)] for (i, j) in boxes if (i, j + 1) in fill) and all(
            fill[(i, j)] < fill[(i + 1, j)] for (i, j) in boxes if (i + 1, j) in fill
        ):
            count += 1
    return count
