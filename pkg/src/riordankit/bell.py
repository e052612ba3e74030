"""Partial Bell polynomials, Faa di Bruno sums and the reciprocal relations.

Partitions are carried as multiplicity vectors ``(k_1, ..., k_n)`` with
``sum i k_i = n`` and ``sum k_i = k``.  Derivative data ``f^(k)(a)`` is
always passed in as an explicit list; nothing here differentiates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InsufficientDerivatives, NotRevertible
from .series import PowerSeries, pow_int, revert


@dataclass(frozen=True)
class PartitionVector:
    k: tuple[int, ...]  # k[i-1] = multiplicity of part i

    @property
    def n(self) -> int:
        return sum(i * m for i, m in enumerate(self.k, 1))

    @property
    def parts(self) -> int:
        return sum(self.k)

    def items(self):
        """``(part, multiplicity)`` pairs with nonzero multiplicity."""
        return [(i, m) for i, m in enumerate(self.k, 1) if m]


@lru_cache(maxsize=None)
def _partitions(n: int, k: int, largest: int) -> tuple[tuple[int, ...], ...]:
    # partitions of n into exactly k parts, each <= largest, largest part first
    if k == 0:
        return ((),) if n == 0 else ()
    out = []
    for first in range(min(largest, n - k + 1), 0, -1):
        if first * k < n:
            break
        for rest in _partitions(n - first, k - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, k: int) -> list[PartitionVector]:
    """All partitions of ``n`` into exactly ``k`` parts (the set sigma(n, k)).

    Ordered lexicographically by parts, largest part first.
    """
    if not 1 <= k <= n:
        return []
    out = []
    for parts in _partitions(n, k, n):
        mult = [0] * n
        for part in parts:
            mult[part - 1] += 1
        out.append(PartitionVector(tuple(mult)))
    return out


def all_partitions(n: int) -> list[PartitionVector]:
    """sigma(n): the union of sigma(n, k) over ``k = 1 .. n``."""
    return [pv for k in range(1, n + 1) for pv in partitions(n, k)]


def falling_factorial(x, k: int) -> Fraction:
    """``(x)_k = x (x-1) ... (x-k+1)``, ``(x)_0 = 1``."""
    out = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        out *= x - i
    return out


def bell_polynomial(n: int, k: int, x: Sequence) -> Fraction:
    """Partial exponential Bell polynomial ``B_{n,k}(x_1, x_2, ...)``.

    ``x[0]`` holds ``x_1``.
    """
    if n == 0 and k == 0:
        return Fraction(1)
    if not 1 <= k <= n:
        return Fraction(0)
    if len(x) < n - k + 1:
        raise ValueError(f"B_{n},{k} needs {n - k + 1} arguments")
    total = Fraction(0)
    nfact = math.factorial(n)
    for pv in partitions(n, k):
        term = Fraction(nfact)
        for i, m in pv.items():
            term *= (Fraction(x[i - 1]) / math.factorial(i)) ** m / math.factorial(m)
        total += term
    return total


def bell_via_series(f: PowerSeries, n: int, k: int) -> Fraction:
    """``B_{n,k} = n! [t^n] f^k / k!`` for ``f(0) = 0``."""
    if f.coeffs[0] != 0:
        raise ValueError("f(0) must be zero")
    fk = pow_int(f, k)
    return fk[n] * math.factorial(n) / math.factorial(k)


def _partition_sum(weights: Sequence, seq: Sequence, n: int) -> Fraction:
    # sum over sigma(n) of weights[k] * prod seq[i]^{k_i} / k_i!
    total = Fraction(0)
    for pv in all_partitions(n):
        term = Fraction(weights[pv.parts])
        if not term:
            continue
        for i, m in pv.items():
            term *= Fraction(seq[i]) ** m / math.factorial(m)
        total += term
    return total


def faa_di_bruno_coeff(fderivs: Sequence, phi: PowerSeries | Sequence, n: int) -> Fraction:
    """``[t^n] F(phi)`` from ``fderivs[k] = F^(k)(phi(0))`` and the
    coefficients of ``phi``.  ``phi`` may be a series or a plain list."""
    seq = phi.coeffs if isinstance(phi, PowerSeries) else phi
    if n == 0:
        return Fraction(fderivs[0])
    if len(fderivs) <= n:
        raise InsufficientDerivatives(f"[t^{n}] needs derivatives up to order {n}")
    if len(seq) <= n:
        raise ValueError(f"phi must have coefficients up to t^{n}")
    return _partition_sum(fderivs, seq, n)


def reciprocal_forward(alpha: Sequence, fderivs: Sequence, n: int) -> list[Fraction]:
    """``beta[m] = [t^m] f(alpha(t))`` for ``m = 0..n``; ``beta[0] = f(a)``."""
    return [faa_di_bruno_coeff(fderivs, alpha, m) for m in range(n + 1)]


def reciprocal_backward(beta: Sequence, fbar_derivs: Sequence, n: int) -> list[Fraction]:
    """Mirror of :func:`reciprocal_forward` with derivatives of ``fbar`` at ``f(a)``."""
    return [faa_di_bruno_coeff(fbar_derivs, beta, m) for m in range(n + 1)]


def inverse_derivatives(fderivs: Sequence, a) -> list[Fraction]:
    """Derivatives of ``fbar`` at ``f(a)`` from those of ``f`` at ``a``.

    With ``F(s) = f(a + s) - f(a)`` we have ``fbar(f(a) + s) = a + Fbar(s)``,
    so ``fbar^(k)(f(a)) = k! [s^k] Fbar`` for ``k >= 1``.
    """
    n = len(fderivs) - 1
    if n < 1 or fderivs[1] == 0:
        raise NotRevertible("need f'(a) != 0")
    F = PowerSeries([0] + [Fraction(fderivs[k]) / math.factorial(k) for k in range(1, n + 1)])
    Fbar = revert(F)
    return [Fraction(a)] + [Fbar[k] * math.factorial(k) for k in range(1, n + 1)]


def bell_forward(x: Sequence, fderivs: Sequence, n: int) -> list[Fraction]:
    """Exponential form: ``y_m = sum_k f^(k)(a) B_{m,k}(x_1, ...)`` for ``m = 1..n``.

    ``x[0]`` is ``x_1``; the result's index 0 is ``y_1``.
    """
    if len(fderivs) <= n:
        raise InsufficientDerivatives(f"y_{n} needs derivatives up to order {n}")
    return [sum((Fraction(fderivs[k]) * bell_polynomial(m, k, x) for k in range(1, m + 1)),
                Fraction(0)) for m in range(1, n + 1)]


def power_case_beta(alpha: Sequence, p, n: int) -> list[Fraction]:
    """Coefficients of ``(1 + sum alpha_m t^m)^p`` via the partition sum with
    falling factorials ``(p)_k``; ``alpha[0]`` must be 1."""
    if Fraction(alpha[0]) != 1:
        raise ValueError("alpha[0] must be 1")
    weights = [falling_factorial(p, k) for k in range(n + 1)]
    seq = list(alpha) + [0] * max(0, n + 1 - len(alpha))
    return [Fraction(1)] + [_partition_sum(weights, seq, m) for m in range(1, n + 1)]
