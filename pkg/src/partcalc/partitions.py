"""Integer partitions, Young-diagram geometry and enumeration.

Boxes are ``(row, column)`` pairs, 1-based, English notation: row 1 is the
longest row.  The content of box ``(i, j)`` is ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

DEFAULT_PARTITION_CAP = 40


class CapExceeded(ValueError):
    """A size cap from the configuration was exceeded."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    ``Partition(())`` is the empty partition.  Instances are hashable and
    compare equal to plain tuples with the same parts.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and (not all(isinstance(p, int) for p in parts) or parts[-1] <= 0):
            raise ValueError(f"parts must be positive integers: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i, 1-based, zero past the last part."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def contains(self, other) -> bool:
        """True if ``other`` fits inside this diagram."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def boxes(self):
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


EMPTY = Partition(())


def as_partition(value) -> Partition:
    if type(value) is Partition:
        return value
    if isinstance(value, str):
        return parse(value)
    return Partition(value)


@lru_cache(maxsize=65536)
def _conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self):
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class CornerData:
    """Contents of inner corners ``x`` (m+1 of them) and outer corners ``y`` (m)."""

    x: tuple
    y: tuple

    @property
    def m(self) -> int:
        return len(self.y)


def parse(text: str) -> Partition:
    """Parse ``"6,3,3,2"``; the empty string is the empty partition.

    Input that is not weakly decreasing is rejected, not sorted.
    """
    text = text.strip()
    if not text:
        return EMPTY
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"not an integer: {tok!r}") from None
        if v <= 0:
            raise ValueError(f"parts must be positive: {v}")
        parts.append(v)
    return Partition(parts)


@lru_cache(maxsize=65536)
def _hooks(lam: Partition) -> tuple:
    conj = _conjugate(lam)
    return tuple(
        ((i + 1, j + 1), row - j + conj[j] - i - 1)
        for i, row in enumerate(lam)
        for j in range(row)
    )


def hook_lengths(lam) -> list:
    """``[((i, j), h), ...]`` in row-major order, h = arm + leg + 1."""
    return list(_hooks(as_partition(lam)))


def hook_values(lam) -> list:
    return [h for _, h in _hooks(as_partition(lam))]


@lru_cache(maxsize=65536)
def _hook_product(lam: Partition) -> int:
    return prod(h for _, h in _hooks(lam))


def hook_product(lam) -> int:
    """H_lambda; equals 1 for the empty partition."""
    return _hook_product(as_partition(lam))


def contents(lam) -> list:
    lam = as_partition(lam)
    return [((i, j), j - i) for i, j in lam.boxes()]


def corner_coordinates(lam):
    """Outer-corner coordinates as ``(alpha, beta)``.

    ``alpha[j-1]`` is alpha_j for j = 1..m+1 (alpha_1 > ... > alpha_m, alpha_{m+1} = 0)
    and ``beta[j]`` is beta_j for j = 0..m (beta_0 = 0).
    """
    lam = as_partition(lam)
    outer = [(i + 1, lam[i]) for i in range(len(lam)) if i + 1 == len(lam) or lam[i] > lam[i + 1]]
    outer.reverse()
    return [a for a, _ in outer] + [0], [0] + [b for _, b in outer]


@lru_cache(maxsize=65536)
def _corners(lam: Partition) -> CornerData:
    alpha, beta = corner_coordinates(lam)
    m = len(beta) - 1
    x = tuple(beta[i] - alpha[i] for i in range(m + 1))
    y = tuple(beta[j] - alpha[j - 1] for j in range(1, m + 1))
    return CornerData(x, y)


def corners(lam) -> CornerData:
    return _corners(as_partition(lam))


def _add_box(lam: Partition, row: int) -> Partition:
    parts = list(lam)
    if row > len(parts):
        parts.append(1)
    else:
        parts[row - 1] += 1
    return Partition(parts)


def _remove_box(lam: Partition, row: int) -> Partition:
    parts = list(lam)
    parts[row - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return Partition(parts)


@lru_cache(maxsize=65536)
def _add_moves(lam: Partition) -> tuple:
    m = len(_corners(lam).y)
    outer = [i + 1 for i in range(len(lam)) if i + 1 == len(lam) or lam[i] > lam[i + 1]]
    # inner corner k sits in row alpha_{k+1} + 1; rows listed top to bottom
    rows = [1] + [r + 1 for r in outer]
    return tuple((m - idx, _add_box(lam, row)) for idx, row in enumerate(rows))


def add_moves(lam) -> list:
    """``[(k, lambda^{k+}), ...]`` for every inner corner, top row first.

    Corner indices follow the increasing-content order of ``corners``, so the
    top row carries index m and the new bottom row index 0.
    """
    return list(_add_moves(as_partition(lam)))


@lru_cache(maxsize=65536)
def _add_results(lam: Partition) -> tuple:
    return tuple(p for _, p in _add_moves(lam))


@lru_cache(maxsize=65536)
def _remove_moves(lam: Partition) -> tuple:
    return tuple(
        _remove_box(lam, i + 1)
        for i in range(len(lam))
        if i + 1 == len(lam) or lam[i] > lam[i + 1]
    )


def remove_moves(lam) -> list:
    """Partitions obtained by removing one outer corner, top row first."""
    return list(_remove_moves(as_partition(lam)))


def _generate(total: int, lower: tuple, max_part: int):
    # partitions of `total` with part i >= lower[i], descending lex order
    suffix = [0] * (len(lower) + 1)
    for i in range(len(lower) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + lower[i]
    parts: list = []

    def rec(i, remaining, cap):
        if remaining == 0:
            if i >= len(lower):
                yield Partition(parts)
            return
        lo = lower[i] if i < len(lower) else 1
        need_after = suffix[i + 1] if i < len(lower) else 0
        hi = min(cap, remaining - need_after)
        for p in range(hi, lo - 1, -1):
            parts.append(p)
            yield from rec(i + 1, remaining - p, p)
            parts.pop()

    yield from rec(0, total, max_part)


def enumerate_partitions(n: int, cap: int = DEFAULT_PARTITION_CAP) -> list:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds partition cap {cap}")
    return list(_partitions_of(n))


@lru_cache(maxsize=256)
def _partitions_of(n: int) -> tuple:
    return tuple(_generate(n, (), n))


def enumerate_extensions(mu, n: int, cap: int = DEFAULT_PARTITION_CAP) -> list:
    """All lambda containing mu with |lambda| = |mu| + n, descending lex order."""
    mu = as_partition(mu)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if mu.size + n > cap:
        raise CapExceeded(f"|mu|+n={mu.size + n} exceeds partition cap {cap}")
    return list(_extensions(mu, n))


@lru_cache(maxsize=4096)
def _extensions(mu: Partition, n: int) -> tuple:
    total = mu.size + n
    return tuple(_generate(total, tuple(mu), total))


def hook_ratio_add(lam, k: int) -> Fraction:
    """H_{lambda^{k+}} / H_lambda from the corner contents alone."""
    cd = corners(lam)
    if not 0 <= k <= cd.m:
        raise IndexError(f"corner index {k} out of range 0..{cd.m}")
    xk = cd.x[k]
    num = prod(xk - xi for i, xi in enumerate(cd.x) if i != k)
    den = prod(xk - yj for yj in cd.y)
    return Fraction(num, den)


def hook_ratio_remove(lam, i: int) -> Fraction:
    """H_lambda / H_{lambda'} where lambda' drops the last box of row i."""
    lam = as_partition(lam)
    if not (1 <= i <= len(lam)) or lam.part(i) <= lam.part(i + 1):
        raise ValueError(f"row {i} of {lam} has no removable box")
    n = lam.size
    smaller = _remove_box(lam, i)
    li = lam.part(i)
    num = prod(i - li + 1 + lam.part(j) - j for j in range(1, n + 1))
    den = prod(i - li + smaller.part(j) - j for j in range(1, n))
    return Fraction(num, den)
