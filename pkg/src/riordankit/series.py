"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` stores ``c_0 .. c_N`` together with the truncation
order ``N``.  Every operation returns a series whose stated order is the
highest index at which the result is guaranteed correct, so nothing is ever
padded with zeros behind the caller's back.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    NonUnitConstant,
    NonUnitDivisor,
    NonzeroConstantTerm,
    NotDivisibleByT,
    NotRevertible,
    OrderExceeded,
)

DEFAULT_ORDER = 24

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class PowerSeries:
    """Immutable truncated power series ``sum c_n t^n`` for ``n <= order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = [_frac(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            # explicit polynomial data: pad or cut to the requested order
            c = c[: order + 1] + [Fraction(0)] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c = tuple(c)

    # construction helpers
    @classmethod
    def constant(cls, value: Scalar, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """The indeterminate ``t``."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k: int, value: Scalar = 1, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([0] * k + [value], order)

    # basic protocol
    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        return coeff(self, n)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"PowerSeries([{format_series(self)}], order={self.order})"

    def __str__(self):
        return format_series(self)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise OrderExceeded(f"cannot raise order {self.order} to {order}")
        return PowerSeries(self._c[: order + 1])

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order + 1`` if none)."""
        for i, x in enumerate(self._c):
            if x:
                return i
        return len(self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    # operators
    def __add__(self, other):
        return add(self, _lift(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-x for x in self._c])

    def __sub__(self, other):
        return add(self, -_lift(other, self.order))

    def __rsub__(self, other):
        return add(_lift(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        s = _frac(other)
        return PowerSeries([s * x for x in self._c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return div(self, other)
        s = _frac(other)
        if s == 0:
            raise ZeroDivisionError("series divided by zero scalar")
        return PowerSeries([x / s for x in self._c])

    def __rtruediv__(self, other):
        return div(_lift(other, self.order), self)

    def __pow__(self, k):
        if isinstance(k, int):
            return pow_int(self, k)
        k = _frac(k)
        return pow_rational(self, k.numerator, k.denominator)

    def __call__(self, inner: "PowerSeries") -> "PowerSeries":
        return compose(self, inner)


def _lift(x, order: int) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    return PowerSeries.constant(_frac(x), order)


def _common_denominator(xs: Sequence[Fraction]) -> int:
    d = 1
    for x in xs:
        q = x.denominator
        if q != 1:
            d = d * q // math.gcd(d, q)
    return d


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries([x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])])


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product, truncated at the smaller of the two orders."""
    n = min(a.order, b.order)
    return PowerSeries(_mul_coeffs(a.coeffs, b.coeffs, n))


def _mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    # integer convolution over a common denominator; much cheaper than
    # summing Fraction products term by term
    a = a[: n + 1]
    b = b[: n + 1]
    da = _common_denominator(a)
    db = _common_denominator(b)
    ia = [x.numerator * (da // x.denominator) for x in a]
    ib = [x.numerator * (db // x.denominator) for x in b]
    lo_a = next((i for i, x in enumerate(ia) if x), len(ia))
    lo_b = next((i for i, x in enumerate(ib) if x), len(ib))
    den = da * db
    out = []
    for m in range(n + 1):
        s = 0
        for i in range(lo_a, m - lo_b + 1):
            x = ia[i]
            if x:
                s += x * ib[m - i]
        out.append(Fraction(s, den))
    return out


def div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Quotient ``q`` with ``q * b == a``; requires ``b(0) != 0``."""
    b0 = b.coeffs[0]
    if b0 == 0:
        raise NonUnitDivisor("divisor has zero constant term")
    n = min(a.order, b.order)
    bc = b.coeffs
    q: list[Fraction] = []
    for m in range(n + 1):
        s = a.coeffs[m]
        for i in range(1, m + 1):
            if bc[i]:
                s -= bc[i] * q[m - i]
        q.append(s / b0)
    return PowerSeries(q)


def compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(t))`` by Horner evaluation; requires ``g(0) == 0``.

    The result order is ``min(order(g), v * (order(f) + 1) - 1)`` where
    ``v`` is the valuation of ``g``: unknown tail terms of ``f`` only show up
    from ``t^(v*(order(f)+1))`` on.
    """
    if g.coeffs[0] != 0:
        raise NonzeroConstantTerm("inner series must have zero constant term")
    v = g.valuation()
    order = g.order if v > g.order else min(g.order, v * (f.order + 1) - 1)
    gc = g.coeffs[: order + 1]
    fc = f.coeffs
    top = min(f.order, order // v if v <= order else 0)
    acc = [fc[top]] + [Fraction(0)] * order
    for i in range(top - 1, -1, -1):
        acc = _mul_coeffs(acc, gc, order)
        acc[0] += fc[i]
    return PowerSeries(acc)


def _powers(f: PowerSeries, kmax: int) -> list[PowerSeries]:
    """``[f^0, f^1, ..., f^kmax]`` at the order of ``f``."""
    out = [PowerSeries.constant(1, f.order)]
    for _ in range(kmax):
        out.append(mul(out[-1], f))
    return out


def revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse: the series ``h`` with ``f(h) = h(f) = t``.

    Solved one coefficient at a time from ``sum_k h_k f^k = t``; the
    coefficient of ``t^n`` involves ``h_n f_1^n`` plus already-known terms.
    """
    if f.order < 1 or f.coeffs[0] != 0 or f.coeffs[1] == 0:
        raise NotRevertible("reversion needs f(0) = 0 and f'(0) != 0")
    n = f.order
    pw = _powers(f, n)
    f1 = f.coeffs[1]
    h = [Fraction(0), 1 / f1]
    for m in range(2, n + 1):
        s = Fraction(0)
        for k in range(1, m):
            c = pw[k].coeffs[m]
            if c and h[k]:
                s += h[k] * c
        h.append(-s / f1 ** m)
    return PowerSeries(h)


def derive(f: PowerSeries) -> PowerSeries:
    if f.order == 0:
        raise OrderExceeded("derivative of an order-0 series carries no information")
    return PowerSeries([n * x for n, x in enumerate(f.coeffs) if n > 0])


def integrate(f: PowerSeries, constant: Scalar = 0) -> PowerSeries:
    return PowerSeries([_frac(constant)] + [x / (n + 1) for n, x in enumerate(f.coeffs)])


def pow_int(f: PowerSeries, k: int) -> PowerSeries:
    if k < 0:
        if f.coeffs[0] == 0:
            raise NonUnitDivisor("negative power of a series with zero constant term")
        return div(PowerSeries.constant(1, f.order), pow_int(f, -k))
    result = PowerSeries.constant(1, f.order)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def pow_rational(f: PowerSeries, num: int, den: int = 1) -> PowerSeries:
    """``f^(num/den)`` for ``f(0) == 1``, normalised so the result starts at 1.

    Uses the recurrence from ``den * f * g' = num * f' * g``:
    ``n g_n = sum_{k=1..n} ((a + 1) k - n) f_k g_{n-k}`` with ``a = num/den``.
    """
    if den <= 0:
        raise ValueError("denominator must be positive")
    if f.coeffs[0] != 1:
        raise NonUnitConstant("rational powers need constant term 1")
    a = Fraction(num, den)
    fc = f.coeffs
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            if fc[k]:
                s += ((a + 1) * k - n) * fc[k] * g[n - k]
        g.append(s / n)
    return PowerSeries(g)


def coeff(f: PowerSeries, n: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    if n > f.order:
        raise OrderExceeded(f"[t^{n}] requested from a series known to order {f.order}")
    return f.coeffs[n]


def shift(f: PowerSeries, k: int) -> PowerSeries:
    """Multiply by ``t^k``; for negative ``k`` divide, which must be exact."""
    if k >= 0:
        return PowerSeries([Fraction(0)] * k + list(f.coeffs))
    k = -k
    if any(f.coeffs[:k]):
        raise NotDivisibleByT(f"series is not divisible by t^{k}")
    if k > f.order:
        raise OrderExceeded(f"dividing by t^{k} leaves nothing of an order-{f.order} series")
    return PowerSeries(f.coeffs[k:])


def agree(a: PowerSeries, b: PowerSeries, order: int | None = None) -> bool:
    """Coefficientwise equality up to ``order`` (default: the common order)."""
    n = min(a.order, b.order) if order is None else order
    if n > a.order or n > b.order:
        raise OrderExceeded(f"cannot compare to order {n}")
    return a.coeffs[: n + 1] == b.coeffs[: n + 1]


def first_difference(a: PowerSeries, b: PowerSeries) -> int | None:
    n = min(a.order, b.order)
    for i in range(n + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return i
    return None


def format_coefficient(x: Fraction) -> str:
    return str(_frac(x))


def format_series(f: PowerSeries) -> str:
    return ", ".join(format_coefficient(x) for x in f.coeffs)


def parse_series(text: str) -> PowerSeries:
    """Inverse of :func:`format_series`: ``"1, 1, 1/2"`` -> series of order 2."""
    tokens = [tok for tok in text.split(",") if tok.strip()]
    return PowerSeries(Fraction(tok.strip()) for tok in tokens)
