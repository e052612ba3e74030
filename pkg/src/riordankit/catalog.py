"""Named series and Riordan arrays, each paired with a closed-form oracle.

CLI names: ``pascal``, ``delannoy``, ``fib-catalan``, ``catalan-array``
(arrays) and ``catalan``, ``central-binomial``, ``ternary``, ``fuss:<m>``
(series).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .numbers import catalan_power_coeff, fibonacci, gbinom, lambert_coeff
from .riordan import RiordanArray
from .series import DEFAULT_ORDER, PowerSeries, pow_int, pow_rational, revert, shift


def _from_formula(fn: Callable[[int], Fraction], order: int) -> PowerSeries:
    return PowerSeries([fn(n) for n in range(order + 1)])


def _t(order: int) -> PowerSeries:
    return PowerSeries.variable(order)


def _one(order: int) -> PowerSeries:
    return PowerSeries.constant(1, order)


# -- series ------------------------------------------------------------------

def catalan(order: int = DEFAULT_ORDER) -> PowerSeries:
    return _from_formula(lambda n: Fraction(math.comb(2 * n, n), n + 1), order)


def catalan_via_sqrt(order: int = DEFAULT_ORDER) -> PowerSeries:
    """``(1 - sqrt(1 - 4t)) / (2t)``."""
    root = pow_rational(PowerSeries([1, -4], order + 1), 1, 2)
    return shift(1 - root, -1) / 2


def central_binomial(order: int = DEFAULT_ORDER) -> PowerSeries:
    return _from_formula(lambda n: Fraction(math.comb(2 * n, n)), order)


def central_binomial_via_sqrt(order: int = DEFAULT_ORDER) -> PowerSeries:
    """``(1 - 4t)^(-1/2)``."""
    return pow_rational(PowerSeries([1, -4], order), -1, 2)


def fuss_catalan(m: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """``F_m`` with ``[t^k] F_m = binom(mk+1, k) / (mk+1)``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _from_formula(lambda k: Fraction(math.comb(m * k + 1, k), m * k + 1), order)


def fuss_catalan_power(m: int, r, order: int = DEFAULT_ORDER) -> PowerSeries:
    """``F_m^r`` from Lambert's formula ``r/(mn+r) binom(mn+r, n)``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _from_formula(lambda n: lambert_coeff(m, r, n), order)


def fuss_catalan_power_via_pow(m: int, r, order: int = DEFAULT_ORDER) -> PowerSeries:
    r = Fraction(r)
    return pow_rational(fuss_catalan(m, order), r.numerator, r.denominator)


def ternary(order: int = DEFAULT_ORDER) -> PowerSeries:
    """``T_n = binom(3n+1, n) / (3n+1)``."""
    return _from_formula(lambda n: Fraction(math.comb(3 * n + 1, n), 3 * n + 1), order)


def fibonacci_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    return _from_formula(lambda n: Fraction(fibonacci(n)), order)


def pascal_horizontal_g(p: int, r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """``(1+w)^(r+1) / (1 - (p-1) w)`` at ``w = t (1+w)^p``.

    ``w`` is the reversion of ``t / (1+t)^p``.
    """
    w = revert(shift(pow_int(PowerSeries([1, 1], order), -p), 1))
    num = pow_int(1 + w, r + 1)
    return (num / (1 - (p - 1) * w)).truncate(order)


# -- arrays ------------------------------------------------------------------

def pascal(order: int = DEFAULT_ORDER) -> RiordanArray:
    t, one = _t(order), _one(order)
    return RiordanArray(one / (1 - t), t / (1 - t))


def delannoy(order: int = DEFAULT_ORDER) -> RiordanArray:
    t, one = _t(order), _one(order)
    return RiordanArray(one / (1 - t), t * (1 + t) / (1 - t))


def fibonacci_catalan_array(order: int = DEFAULT_ORDER) -> RiordanArray:
    t, one = _t(order), _one(order)
    return RiordanArray(one / (1 - t - t * t), shift(catalan(order), 1).truncate(order))


def catalan_array(order: int = DEFAULT_ORDER) -> RiordanArray:
    C = catalan(order)
    return RiordanArray(C, shift(C, 1).truncate(order))


def _pascal_entry(n: int, k: int) -> Fraction:
    return Fraction(math.comb(n, k)) if 0 <= k <= n else Fraction(0)


def _delannoy_entry(n: int, k: int) -> Fraction:
    # [t^(n-k)] (1+t)^k (1-t)^-(k+1)
    if not 0 <= k <= n:
        return Fraction(0)
    return Fraction(sum(math.comb(k, j) * math.comb(n - j, k) for j in range(min(k, n - k) + 1)))


def _fib_catalan_entry(n: int, k: int) -> Fraction:
    if not 0 <= k <= n:
        return Fraction(0)
    return sum((fibonacci(n - k - j) * catalan_power_coeff(k, j) for j in range(n - k + 1)),
               Fraction(0))


def _catalan_array_entry(n: int, k: int) -> Fraction:
    if not 0 <= k <= n:
        return Fraction(0)
    return Fraction(k + 1, 2 * n - k + 1) * math.comb(2 * n - k + 1, n - k)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[[int], Union[RiordanArray, PowerSeries]]
    closed_form: Optional[Callable[..., Fraction]] = None  # (n, k) for arrays, (n,) for series

    @property
    def is_array(self) -> bool:
        return self.name in ARRAY_NAMES


ARRAYS = {
    "pascal": CatalogEntry("pascal", pascal, _pascal_entry),
    "delannoy": CatalogEntry("delannoy", delannoy, _delannoy_entry),
    "fib-catalan": CatalogEntry("fib-catalan", fibonacci_catalan_array, _fib_catalan_entry),
    "catalan-array": CatalogEntry("catalan-array", catalan_array, _catalan_array_entry),
}
ARRAY_NAMES = tuple(ARRAYS)

SERIES = {
    "catalan": CatalogEntry("catalan", catalan_via_sqrt,
                            lambda n: Fraction(math.comb(2 * n, n), n + 1)),
    "central-binomial": CatalogEntry("central-binomial", central_binomial_via_sqrt,
                                     lambda n: Fraction(math.comb(2 * n, n))),
    "ternary": CatalogEntry("ternary", lambda order: fuss_catalan_power_via_pow(3, 1, order),
                            lambda n: Fraction(math.comb(3 * n + 1, n), 3 * n + 1)),
}


def _fuss_entry(m: int) -> CatalogEntry:
    return CatalogEntry(f"fuss:{m}", lambda order: fuss_catalan(m, order),
                        lambda n: lambert_coeff(m, 1, n))


def catalog_entry(name: str) -> CatalogEntry:
    if name in ARRAYS:
        return ARRAYS[name]
    if name in SERIES:
        return SERIES[name]
    if name.startswith("fuss:"):
        m = name[5:]
        if m.isdigit():
            return _fuss_entry(int(m))
    raise KeyError(f"unknown catalog name {name!r}")


def is_series_name(name: str) -> bool:
    try:
        return not catalog_entry(name).is_array
    except KeyError:
        return False


def lookup(name: str, order: int = DEFAULT_ORDER):
    return catalog_entry(name).builder(order)


def array(name: str, order: int = DEFAULT_ORDER) -> RiordanArray:
    if name not in ARRAYS:
        raise KeyError(f"unknown array {name!r}; choose from {', '.join(ARRAY_NAMES)}")
    return ARRAYS[name].builder(order)


def series(name: str, order: int = DEFAULT_ORDER) -> PowerSeries:
    entry = catalog_entry(name)
    if entry.is_array:
        raise KeyError(f"{name!r} is an array, not a series")
    return entry.builder(order)
