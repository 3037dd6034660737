"""Exact algebra: dense polynomials, truncated power series, Bernoulli numbers,
Faulhaber polynomials and the even polynomial G used by the corner formula.

Everything is built on :class:`fractions.Fraction`; no floating point is used.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable


def _frac(c) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


class DensePolynomial:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``.  Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def variable(cls) -> "DensePolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "DensePolynomial":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "DensePolynomial":
        """Monic polynomial prod (z - r)."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, DensePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return DensePolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DensePolynomial(c * other for c in self.coeffs)
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return DensePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DensePolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return DensePolynomial(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = DensePolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may itself be a polynomial."""
        acc = Fraction(0) if not isinstance(x, DensePolynomial) else DensePolynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a) -> "DensePolynomial":
        """Return ``p(z + a)``."""
        return self(DensePolynomial((a, 1)))

    def even_part_only(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DensePolynomial({[str(c) for c in self.coeffs]})"

    def format(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format


class TruncatedSeries:
    """Power series in z known modulo ``z**(order + 1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_frac(c) for c in coeffs][: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def from_polynomial(cls, p: DensePolynomial, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else Fraction(0)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries((other,), self.order)
        if not isinstance(other, TruncatedSeries):
            return None, None
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, n = self._common(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries((self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other, n = self._common(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries((self.coeffs[i] - other.coeffs[i] for i in range(n + 1)), n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c / other for c in self.coeffs), self.order)
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = sum((a[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncatedSeries(out, self.order)

    def derivative_coeffs(self):
        return [k * self.coeffs[k] for k in range(1, self.order + 1)]

    def exp(self) -> "TruncatedSeries":
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a series with zero constant term")
        # f' = g' f  =>  k f_k = sum_{j=1..k} j g_j f_{k-j}
        g = self.coeffs
        f = [Fraction(1)]
        for k in range(1, self.order + 1):
            s = sum((j * g[j] * f[k - j] for j in range(1, k + 1)), Fraction(0))
            f.append(s / k)
        return TruncatedSeries(f, self.order)

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] != 1:
            raise ValueError("log needs a series with constant term 1")
        # g' = f'/f
        dg = (TruncatedSeries(self.derivative_coeffs(), self.order) * self.inverse()).coeffs
        return TruncatedSeries([0] + [dg[k - 1] / k for k in range(1, self.order + 1)], self.order)

    def mul_z(self, s: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**s`` keeping the same order."""
        return TruncatedSeries((0,) * s + self.coeffs, self.order)

    def __eq__(self, other):
        other, n = self._common(other)
        if other is None:
            return NotImplemented
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_ratio(num: DensePolynomial, den: DensePolynomial, order: int) -> TruncatedSeries:
    """Expand ``num/den`` as a power series modulo ``z**(order+1)``."""
    if den[0] == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    return TruncatedSeries.from_polynomial(num, order) * TruncatedSeries.from_polynomial(den, order).inverse()


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Fraction(1)
    if m > 1 and m % 2:
        return Fraction(0)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    s = sum((comb(m + 1, j) * bernoulli(j) for j in range(m)), Fraction(0))
    return -s / (m + 1)


@lru_cache(maxsize=None)
def faulhaber(n: int) -> DensePolynomial:
    """The polynomial P_n with P_n(k) = 1^n + 2^n + ... + k^n."""
    if n < 1:
        raise ValueError("faulhaber needs n >= 1")
    c = [Fraction(0)] * (n + 2)
    c[n + 1] += Fraction(1, n + 1)
    c[n] += Fraction(1, 2)
    for j in range(1, n // 2 + 1):
        # (-1)^(j+1) times the unsigned |B_2j|, i.e. the signed B_2j itself
        unsigned = (-1) ** (j + 1) * bernoulli(2 * j)
        c[n - 2 * j + 1] += comb(n + 1, 2 * j) * (-1) ** (j + 1) * unsigned / (n + 1)
    return DensePolynomial(c)


def faulhaber_zeta(n: int, j: int) -> Fraction:
    """Coefficient of z^(n-2j+1) in P_n, read off the coefficient list."""
    return faulhaber(n)[n - 2 * j + 1]


def g0_coefficients(r: int) -> list[Fraction]:
    """eta_0..eta_r with prod_{i=1..r} (j^2 - i^2) = sum_w eta_w j^(2w)."""
    p = DensePolynomial((1,))
    for i in range(1, r + 1):
        p = p * DensePolynomial((-i * i, 1))
    return [p[w] for w in range(r + 1)]


@lru_cache(maxsize=None)
def build_G(r: int) -> DensePolynomial:
    """Even polynomial G of degree 2r+2 whose values shift the double partial
    sums of prod_{i<=r}(j^2 - i^2) by a linear term."""
    if r < 1:
        raise ValueError("build_G needs r >= 1")
    eta = g0_coefficients(r)
    z = DensePolynomial.variable()
    zm1 = DensePolynomial((-1, 1))
    G = (-1) ** r * Fraction(factorial(r) ** 2, 2) * z * z
    for w in range(1, r + 1):
        inner = faulhaber(2 * w)(zm1) / 2
        for j in range(w + 1):
            inner = inner + faulhaber_zeta(2 * w, j) * faulhaber(2 * w - 2 * j + 1)(zm1)
        G = G + eta[w] * inner
    return G


def G_even_coefficients(r: int) -> list[Fraction]:
    """xi_1..xi_{r+1} with G(n) = sum_i xi_i n^(2i)."""
    G = build_G(r)
    if not G.even_part_only() or G[0] != 0:
        raise ArithmeticError(f"G for r={r} is not an even polynomial without constant term")
    return [G[2 * i] for i in range(1, r + 2)]
