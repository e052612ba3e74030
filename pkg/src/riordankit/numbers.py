"""Exact scalar helpers: generalized binomials and the small sequences the
catalog and identity checks are written in terms of."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=65536)
def _gbinom(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out / math.factorial(k)


def gbinom(x, k: int) -> Fraction:
    """``x (x-1) ... (x-k+1) / k!`` for rational ``x``; 0 when ``k < 0``."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    if x.denominator == 1 and 0 <= x.numerator:
        return Fraction(math.comb(x.numerator, k))
    return _gbinom(x, k)


def fibonacci(i: int) -> int:
    """``[t^i] 1/(1 - t - t^2)``, so ``F_0 = F_1 = 1``."""
    if i < 0:
        return 0
    a, b = 1, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def catalan_power_coeff(k: int, j: int) -> Fraction:
    """``[t^j] C(t)^k = k/(2j+k) binom(2j+k, j)``, with ``C^0 = 1``."""
    if j < 0:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if j == 0 else 0)
    return Fraction(k, 2 * j + k) * math.comb(2 * j + k, j)


def lambert_coeff(m: int, r, n: int) -> Fraction:
    """``[t^n] F_m(t)^r = r/(mn+r) binom(mn+r, n)``.

    Written as ``(r/n) binom(mn+r-1, n-1)`` for ``n >= 1``, which is the same
    number and has no pole at ``mn + r = 0``.
    """
    if n < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    r = Fraction(r)
    return r / n * gbinom(m * n + r - 1, n - 1)
