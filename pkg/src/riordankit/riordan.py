"""Riordan arrays ``(g, f)`` with entries ``d[n, k] = [t^n] g f^k``."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvalidRiordanArray, OrderExceeded, UnnormalizedG
from .series import (
    PowerSeries,
    agree,
    compose,
    derive,
    div,
    mul,
    pow_int,
    revert,
    shift,
)

Matrix = list[list[Fraction]]


@dataclass(frozen=True, eq=False)
class RiordanArray:
    g: PowerSeries
    f: PowerSeries
    _columns: list = field(default_factory=list, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self):
        if self.g.coeffs[0] == 0:
            raise InvalidRiordanArray("g(0) must be nonzero")
        if self.f.order < 1 or self.f.coeffs[0] != 0 or self.f.coeffs[1] == 0:
            raise InvalidRiordanArray("f needs f(0) = 0 and f'(0) != 0")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def __eq__(self, other):
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self.g.truncate(self.order) == other.g.truncate(other.order) and \
            self.f.truncate(self.order) == other.f.truncate(other.order)

    def __hash__(self):
        return hash((self.g, self.f))

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        return multiply(self, other)

    def column(self, k: int) -> PowerSeries:
        """Generating function ``g f^k`` of column ``k`` (cached)."""
        with self._lock:
            cols = self._columns
            if not cols:
                cols.append(self.g.truncate(self.order))
            while len(cols) <= k:
                cols.append(mul(cols[-1], self.f))
            return cols[k]

    def entry(self, n: int, k: int) -> Fraction:
        return entry(self, n, k)

    def matrix(self, rows: int) -> Matrix:
        """Leading ``rows x rows`` block (rows ``0 .. rows-1``)."""
        if rows - 1 > self.order:
            raise OrderExceeded(f"{rows} rows need order {rows - 1}, have {self.order}")
        return [[entry(self, n, k) for k in range(rows)] for n in range(rows)]

    def truncate(self, order: int) -> "RiordanArray":
        return RiordanArray(self.g.truncate(order), self.f.truncate(order))


def arrays_agree(R: RiordanArray, S: RiordanArray) -> bool:
    """Equality of both generating functions up to the common order."""
    return agree(R.g, S.g, min(R.order, S.order)) and agree(R.f, S.f, min(R.order, S.order))


def identity(order: int) -> RiordanArray:
    return RiordanArray(PowerSeries.constant(1, order), PowerSeries.variable(order))


def entry(R: RiordanArray, n: int, k: int) -> Fraction:
    if k < 0 or n < 0:
        return Fraction(0)
    if n > R.order:
        raise OrderExceeded(f"row {n} beyond order {R.order}")
    if k > n:
        return Fraction(0)
    return R.column(k).coeffs[n]


def multiply(R: RiordanArray, S: RiordanArray) -> RiordanArray:
    """``(g, f)(h, l) = (g * h(f), l(f))``."""
    return RiordanArray(mul(R.g, compose(S.g, R.f)), compose(S.f, R.f))


def inverse(R: RiordanArray) -> RiordanArray:
    fbar = revert(R.f.truncate(R.order))
    return RiordanArray(div(PowerSeries.constant(1, fbar.order), compose(R.g, fbar)), fbar)


def apply_ftra(R: RiordanArray, d: PowerSeries) -> PowerSeries:
    """Column-vector action ``g * d(f)``."""
    return mul(R.g, compose(d, R.f))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return [[sum((a[i][j] * b[j][k] for j in range(n)), Fraction(0)) for k in range(n)]
            for i in range(n)]


def a_sequence(R: RiordanArray) -> PowerSeries:
    """``A`` with ``f = t A(f)``, computed as ``t / fbar``."""
    fbar = revert(R.f.truncate(R.order))
    return div(PowerSeries.constant(1, fbar.order - 1), shift(fbar, -1))


def z_sequence(R: RiordanArray) -> PowerSeries:
    """``Z`` with ``g = 1 / (1 - t Z(f))``; defined only when ``g(0) = 1``."""
    if R.g.coeffs[0] != 1:
        raise UnnormalizedG("Z-sequence requires g(0) = 1")
    fbar = revert(R.f.truncate(R.order))
    gf = compose(R.g, fbar)
    return div(shift(gf - 1, -1), mul(shift(fbar, -1), gf))


@dataclass(frozen=True)
class RecurrenceCheck:
    ok: bool
    failure: Optional[tuple[str, int, int]] = None  # (kind, n, k) of first bad cell

    def __bool__(self):
        return self.ok


def check_row_recurrences(m: Matrix, A: PowerSeries, Z: Optional[PowerSeries]) -> RecurrenceCheck:
    """Check ``d[n+1,k+1] = sum_j a_j d[n,k+j]`` (and the Z rule for column 0)
    on every row of the square matrix ``m``."""
    rows = len(m)
    for n in range(rows - 1):
        if Z is not None:
            rhs = sum((Z.coeffs[j] * m[n][j] for j in range(n + 1)), Fraction(0))
            if m[n + 1][0] != rhs:
                return RecurrenceCheck(False, ("Z", n + 1, 0))
        for k in range(n + 1):
            rhs = sum((A.coeffs[j] * m[n][k + j] for j in range(n - k + 1)), Fraction(0))
            if m[n + 1][k + 1] != rhs:
                return RecurrenceCheck(False, ("A", n + 1, k + 1))
    return RecurrenceCheck(True)


def row_recurrence_check(R: RiordanArray, rows: int) -> RecurrenceCheck:
    """Rebuild rows ``1 .. rows`` from their predecessors via the A/Z rules.

    The Z rule is skipped when ``g(0) != 1`` since Z is undefined there.
    """
    if rows > R.order:
        raise OrderExceeded(f"{rows} recurrence steps need order {rows}, have {R.order}")
    A = a_sequence(R)
    Z = z_sequence(R) if R.g.coeffs[0] == 1 else None
    return check_row_recurrences(R.matrix(rows + 1), A, Z)


BELL_K_MAX = 8


def classify_subgroups(R: RiordanArray) -> frozenset[str]:
    """Subgroup labels whose defining relation holds to truncation order.

    ``Bell(k)`` is reported for the smallest matching ``1 <= k <= 8``.
    """
    N = R.order
    g, f = R.g.truncate(N), R.f.truncate(N)
    t = PowerSeries.variable(N)
    one = PowerSeries.constant(1, N)
    labels = set()
    if f == t:
        labels.add("Appell")
    if g == one:
        labels.add("Lagrange")
    for k in range(1, BELL_K_MAX + 1):
        if agree(f, shift(pow_int(g, k), 1), N):
            labels.add(f"Bell({k})")
            break
    df = derive(f)
    if agree(g, div(df, shift(f, -1))):
        labels.add("hitting-time")
    if agree(g, df):
        labels.add("derivative")
    if not any(g.coeffs[1::2]) and not any(f.coeffs[0::2]):
        labels.add("checkerboard")
    return frozenset(labels)


def is_pseudo_involution(R: RiordanArray) -> bool:
    N = R.order
    flip = RiordanArray(PowerSeries.constant(1, N), PowerSeries([0, -1], N))
    M = multiply(R, flip)
    return arrays_agree(multiply(M, M), identity(M.order))


def convolution_identity(R: RiordanArray, n: int, k: int, s: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``d[n,k] = sum_{j=s..n} d[n-j, k-s] [t^j] f^s``."""
    if not 1 <= s <= k:
        raise ValueError("need k >= s >= 1")
    if n > R.order:
        raise OrderExceeded(f"row {n} beyond order {R.order}")
    fs = pow_int(R.f.truncate(R.order), s)
    lhs = entry(R, n, k)
    rhs = sum((entry(R, n - j, k - s) * fs.coeffs[j] for j in range(s, n + 1)), Fraction(0))
    return lhs, rhs
