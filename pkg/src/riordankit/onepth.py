"""Vertical and horizontal one-pth Riordan arrays.

For a Riordan array ``(g, f)`` and integers ``p >= 1``, ``r >= 0`` let
``phi`` be the compositional inverse of ``t^p / f^(p-1)``.  Then

* the vertical array has entries ``d[pn+r-k, (p-1)n+r]`` and equals
  ``(t phi' g(phi) f(phi)^r / phi^(r+1), phi)``;
* the horizontal array has entries ``d[pn+r, (p-1)n+r+k]`` and equals
  ``(t phi' g(phi) f(phi)^r / phi^(r+1), f(phi))``.

``p = 2, r = 0`` gives the usual vertical and horizontal half arrays.
The brute-force ``oracle_*`` functions read the same entries directly off
the parent matrix and share no code with the ``phi`` construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import OrderExceeded
from .riordan import Matrix, RiordanArray, a_sequence, entry
from .series import (
    PowerSeries,
    compose,
    derive,
    div,
    mul,
    pow_int,
    revert,
    shift,
)


class Orientation(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class OnePthSpec:
    p: int
    r: int
    orientation: Orientation

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if not isinstance(self.orientation, Orientation):
            object.__setattr__(self, "orientation", Orientation(self.orientation))


@dataclass(frozen=True)
class PhiData:
    phi: PowerSeries
    u: PowerSeries  # (f/t)^(p-1), so that phi = t u(phi)
    phi_prime: PowerSeries


def parent_order_required(p: int, r: int, order: int) -> int:
    """Parent order needed for a one-pth array valid to ``order``.

    The index maps reach row ``p*order + r`` of the parent; the ``phi``
    construction itself loses one order to ``phi'``.
    """
    return max(p * order + r, order + 1)


def _fit(R: RiordanArray, p: int, r: int, order: int | None) -> RiordanArray:
    if order is None:
        return R
    need = parent_order_required(p, r, order)
    if R.order < need:
        raise OrderExceeded(f"(p={p}, r={r}) array to order {order} needs parent order {need}, "
                            f"have {R.order}")
    return R.truncate(need)


def compute_phi(f: PowerSeries, p: int) -> PhiData:
    """``phi = revert(t^p / f^(p-1))``, formed as ``revert(t (t/f)^(p-1))``."""
    if p < 1:
        raise ValueError("p must be >= 1")
    f_over_t = shift(f, -1)
    u = pow_int(f_over_t, p - 1)
    one = PowerSeries.constant(1, f_over_t.order)
    inner = shift(pow_int(div(one, f_over_t), p - 1), 1)
    phi = revert(inner)
    return PhiData(phi=phi, u=u, phi_prime=derive(phi))


def _common_g(R: RiordanArray, pd: PhiData, r: int) -> PowerSeries:
    # t phi' g(phi) f(phi)^r / phi^(r+1) == phi' * g(phi) * ((f/t)(phi))^r / (phi/t)
    f_over_t = shift(R.f.truncate(R.order), -1)
    g_phi = compose(R.g.truncate(R.order), pd.phi)
    ratio = pow_int(compose(f_over_t, pd.phi), r)
    return div(mul(mul(pd.phi_prime, g_phi), ratio), shift(pd.phi, -1))


def _truncated(A: RiordanArray, order: int | None) -> RiordanArray:
    return A if order is None else A.truncate(order)


def vertical_onepth(R: RiordanArray, p: int, r: int, order: int | None = None) -> RiordanArray:
    """``(t phi' g(phi) f(phi)^r / phi^(r+1), phi)``.

    With ``order`` given, the parent must reach
    :func:`parent_order_required` and the result is cut to ``order``.
    """
    OnePthSpec(p, r, Orientation.VERTICAL)
    R = _fit(R, p, r, order)
    pd = compute_phi(R.f.truncate(R.order), p)
    return _truncated(RiordanArray(_common_g(R, pd, r), pd.phi), order)


def horizontal_onepth(R: RiordanArray, p: int, r: int, order: int | None = None) -> RiordanArray:
    """``(t phi' g(phi) f(phi)^r / phi^(r+1), f(phi))``; ``order`` as above."""
    OnePthSpec(p, r, Orientation.HORIZONTAL)
    R = _fit(R, p, r, order)
    pd = compute_phi(R.f.truncate(R.order), p)
    A = RiordanArray(_common_g(R, pd, r), compose(R.f.truncate(R.order), pd.phi))
    return _truncated(A, order)


def onepth(R: RiordanArray, spec: OnePthSpec, order: int | None = None) -> RiordanArray:
    if spec.orientation is Orientation.VERTICAL:
        return vertical_onepth(R, spec.p, spec.r, order)
    return horizontal_onepth(R, spec.p, spec.r, order)


def phi_factor(f: PowerSeries, p: int) -> RiordanArray:
    """The left factor ``(t phi'/phi, phi)`` of the r = 0 decompositions."""
    pd = compute_phi(f, p)
    return RiordanArray(div(pd.phi_prime, shift(pd.phi, -1)), pd.phi)


def _check_rows(R: RiordanArray, p: int, r: int, rows: int) -> None:
    OnePthSpec(p, r, Orientation.VERTICAL)
    need = p * (rows - 1) + r
    if need > R.order:
        raise OrderExceeded(f"{rows} rows of the (p={p}, r={r}) array need parent order {need}, "
                            f"have {R.order}")


def oracle_vertical(R: RiordanArray, p: int, r: int, rows: int) -> Matrix:
    """Entries ``d[pn+r-k, (p-1)n+r]`` for ``0 <= n, k < rows``."""
    _check_rows(R, p, r, rows)
    return [[entry(R, p * n + r - k, (p - 1) * n + r) if k <= n else Fraction(0)
             for k in range(rows)] for n in range(rows)]


def oracle_horizontal(R: RiordanArray, p: int, r: int, rows: int) -> Matrix:
    """Entries ``d[pn+r, (p-1)n+r+k]`` for ``0 <= n, k < rows``."""
    _check_rows(R, p, r, rows)
    return [[entry(R, p * n + r, (p - 1) * n + r + k) for k in range(rows)]
            for n in range(rows)]


def oracle(R: RiordanArray, spec: OnePthSpec, rows: int) -> Matrix:
    if spec.orientation is Orientation.VERTICAL:
        return oracle_vertical(R, spec.p, spec.r, rows)
    return oracle_horizontal(R, spec.p, spec.r, rows)


def lif_coeff(F: PowerSeries, u: PowerSeries, n: int) -> Fraction:
    """``[t^n] F(phi)`` for ``phi = t u(phi)``, without computing ``phi``:
    ``[t^n] F u^(n-1) (u - t u')``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if u.coeffs[0] == 0:
        raise ValueError("u(0) must be nonzero")
    if F.order < n or u.order < n:
        raise OrderExceeded(f"[t^{n}] needs F and u to order {n}")
    Fn, un = F.truncate(n), u.truncate(n)
    kernel = un - shift(derive(un), 1)
    return mul(mul(Fn, pow_int(un, n - 1)), kernel).coeffs[n]


def a_seq_formula(R: RiordanArray, p: int, orientation: Orientation) -> PowerSeries:
    """Predicted A-sequence of the one-pth array: ``(f/t)^(p-1)`` (vertical)
    or ``A^p`` (horizontal)."""
    orientation = Orientation(orientation)
    if orientation is Orientation.VERTICAL:
        return pow_int(shift(R.f.truncate(R.order), -1), p - 1)
    return pow_int(a_sequence(R), p)


def first_mismatch(a: Matrix, b: Matrix):
    """``(n, k, a[n][k], b[n][k])`` of the first differing cell, else None."""
    for n, (ra, rb) in enumerate(zip(a, b)):
        for k, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return n, k, x, y
    if len(a) != len(b):
        raise ValueError("matrices differ in size")
    return None
