"""Executable binomial and Riordan-array identities, swept over grids.

Each ``check_*`` function evaluates the two sides of one identity by
independent routes and returns an :class:`IdentityCase`.  ``run_suite``
sweeps named suites over the bounds in :class:`SuiteBounds` and condenses
the outcome into :class:`IdentityReport` records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from . import catalog
from .errors import OrderExceeded
from .numbers import catalan_power_coeff, fibonacci, gbinom
from .riordan import RiordanArray, a_sequence, entry
from .series import PowerSeries, compose, pow_int, pow_rational, shift

__all__ = [
    "IdentityCase",
    "IdentityReport",
    "SuiteBounds",
    "SUITE_NAMES",
    "gbinom",
    "run_suite",
]


@dataclass(frozen=True)
class IdentityCase:
    name: str
    params: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    name: str
    grid: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: Optional[IdentityCase] = None
    cases: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.failed == 0


DEFAULT_RATIONAL_GRID = tuple(Fraction(x) for x in
                              ("-5/2", "-1", "-1/3", "0", "1/2", "1", "3/2", "2", "3"))


@dataclass(frozen=True)
class SuiteBounds:
    p_max: int = 4
    r_max: int = 3
    n_max: int = 10
    order: int = 24
    rational_grid: tuple = DEFAULT_RATIONAL_GRID
    perturb_beta: bool = False  # negative control: add 1 to beta_1


def binom(n: int, k: int) -> Fraction:
    return gbinom(n, k)


# -- checks on an arbitrary array -----------------------------------------------

def summation_betas(R: RiordanArray, p: int, perturb: bool = False) -> list[Fraction]:
    """``beta_j = [t^j] A(t)^p``, the A-sequence of the (p, r) horizontal array."""
    beta = list(pow_int(a_sequence(R), p).coeffs)
    if perturb and len(beta) > 1:
        beta[1] += 1
    return beta


def check_summation_formula(R: RiordanArray, p: int, r: int, n: int, k: int,
                            beta: Sequence[Fraction] | None = None,
                            name: str = "summation") -> IdentityCase:
    """``d[p(n+1)+r, (p-1)(n+1)+r+k+1] = sum_j beta_j d[pn+r, (p-1)n+r+k+j]``."""
    if p * (n + 1) + r > R.order:
        raise OrderExceeded(f"row {p * (n + 1) + r} beyond order {R.order}")
    if beta is None:
        beta = summation_betas(R, p)
    lhs = entry(R, p * (n + 1) + r, (p - 1) * (n + 1) + r + k + 1)
    rhs = sum((beta[j] * entry(R, p * n + r, (p - 1) * n + r + k + j) for j in range(n - k + 1)),
              Fraction(0))
    return IdentityCase(name, {"p": p, "r": r, "n": n, "k": k}, lhs, rhs)


def check_pascal_onepth(p: int, r: int, n: int, k: int, perturb: bool = False) -> IdentityCase:
    """Binomial form of the summation formula on Pascal's triangle."""
    def weight(j):
        return binom(p, j) + (1 if perturb and j == 1 else 0)

    lhs = binom(p * (n + 1) + r, (p - 1) * (n + 1) + r + k + 1)
    terms = [weight(j) * binom(p * n + r, (p - 1) * n + r + k + j) for j in range(n - k + 1)]
    rhs = sum(terms[: min(p, n - k) + 1], Fraction(0))
    # terms past min(p, n-k) vanish: binom(p, j) = 0 for j > p
    assert rhs == sum(terms, Fraction(0)) or perturb
    return IdentityCase("pascal-onepth", {"p": p, "r": r, "n": n, "k": k}, lhs, rhs)


def _fib_catalan_column(K: int, m: int) -> Fraction:
    # sum_{j=0}^{m} F_{m-j} [t^j] C^K
    return sum((fibonacci(m - j) * catalan_power_coeff(K, j) for j in range(m + 1)), Fraction(0))


def check_fibonacci_catalan(p: int, r: int, n: int, k: int, perturb: bool = False) -> IdentityCase:
    """Summation formula on ``(1/(1-t-t^2), tC)``, whose A-sequence is ``1/(1-t)``."""
    K = (p - 1) * (n + 1) + r + k + 1
    lhs = _fib_catalan_column(K, n - k)
    rhs = Fraction(0)
    for i in range(n - k + 1):
        w = binom(p + i - 1, i) + (1 if perturb and i == 1 else 0)
        rhs += w * _fib_catalan_column((p - 1) * n + r + k + i, n - k - i)
    return IdentityCase("fib-catalan", {"p": p, "r": r, "n": n, "k": k}, lhs, rhs)


def check_catalan_array(p: int, r: int, n: int, k: int, perturb: bool = False) -> IdentityCase:
    """Summation formula on ``(C, tC)`` written with closed-form entries."""
    lhs = Fraction((p - 1) * (n + 1) + r + k + 2, (p + 1) * (n + 1) + r - k) \
        * binom((p + 1) * (n + 1) + r - k, n - k)
    rhs = Fraction(0)
    for j in range(n - k + 1):
        w = binom(p + j - 1, j) + (1 if perturb and j == 1 else 0)
        rhs += Fraction((p - 1) * n + r + k + j + 1, (p + 1) * n + r - k - j + 1) * w \
            * binom((p + 1) * n + r - k - j + 1, n - k - j)
    return IdentityCase("catalan-array", {"p": p, "r": r, "n": n, "k": k}, lhs, rhs)


def check_chu_vandermonde(n: int, k: int, s: int) -> IdentityCase:
    lhs = sum((binom(n - j, k - s) * binom(j - 1, s - 1) for j in range(s, n + 1)), Fraction(0))
    return IdentityCase("chu-vandermonde", {"n": n, "k": k, "s": s}, lhs, binom(n, k))


def check_fuss_convolution(p: int, r: int, n: int, k: int, s: int) -> IdentityCase:
    lhs = sum((Fraction(s, j) * binom(p * j, j - s) * binom(p * (n - j) + r, n - j - k + s)
               for j in range(s, n + 1)), Fraction(0))
    return IdentityCase("fuss-convolution", {"p": p, "r": r, "n": n, "k": k, "s": s},
                        lhs, binom(p * n + r, n - k))


def check_fuss_convolution_s1(p: int, r: int, n: int, k: int) -> IdentityCase:
    lhs = sum((Fraction(1, p * j + 1) * binom(p * j + 1, j) * binom(p * (n - j) + r, n - j - k + 1)
               for j in range(1, n + 1)), Fraction(0))
    return IdentityCase("fuss-convolution-s1", {"p": p, "r": r, "n": n, "k": k},
                        lhs, binom(p * n + r, n - k))


def check_fuss_convolution_shifted(p: int, r: int, n: int, k: int) -> IdentityCase:
    lhs = sum((Fraction(1, p * j + 1) * binom(p * j + 1, j) * binom(p * (n - j) + r, n - j - k + 1)
               for j in range(0, n + 1)), Fraction(0))
    return IdentityCase("fuss-convolution-shifted", {"p": p, "r": r, "n": n, "k": k},
                        lhs, binom(p * n + r + 1, n - k + 1))


def check_gkp562(x, y, p, n: int) -> Optional[IdentityCase]:
    """``sum_i x/(x+pi) binom(x+pi, i) binom(y+p(n-i), n-i) = binom(x+y+pn, n)``.

    Returns None at singular points ``x + p i = 0``.
    """
    x, y, p = Fraction(x), Fraction(y), Fraction(p)
    if any(x + p * i == 0 for i in range(n + 1)):
        return None
    lhs = sum((x / (x + p * i) * gbinom(x + p * i, i) * gbinom(y + p * (n - i), n - i)
               for i in range(n + 1)), Fraction(0))
    return IdentityCase("gkp-562", {"x": x, "y": y, "p": p, "n": n}, lhs, gbinom(x + y + p * n, n))


def check_gould(r, q, pp, n: int) -> Optional[IdentityCase]:
    """``sum_i r/(r-qi) binom(r-qi, i) binom(pp+qi, n-i) = binom(r+pp, n)``.

    Returns None at singular points ``r = q i``.
    """
    r, q, pp = Fraction(r), Fraction(q), Fraction(pp)
    if any(r - q * i == 0 for i in range(n + 1)):
        return None
    lhs = sum((r / (r - q * i) * gbinom(r - q * i, i) * gbinom(pp + q * i, n - i)
               for i in range(n + 1)), Fraction(0))
    return IdentityCase("gould", {"r": r, "q": q, "pp": pp, "n": n}, lhs, gbinom(r + pp, n))


# -- suites ---------------------------------------------------------------------

Cases = Iterator[Optional[IdentityCase]]


def _suite_pascal_onepth(b: SuiteBounds) -> Cases:
    for p in range(1, b.p_max + 1):
        for r in range(b.r_max + 1):
            for n in range(b.n_max + 1):
                for k in range(n + 1):
                    yield check_pascal_onepth(p, r, n, k, perturb=b.perturb_beta)


def _suite_summation(b: SuiteBounds) -> Cases:
    for name in catalog.ARRAY_NAMES:
        R = catalog.array(name, b.order)
        for p in range(1, b.p_max + 1):
            beta = summation_betas(R, p, perturb=b.perturb_beta)
            for r in range(b.r_max + 1):
                for n in range(b.n_max + 1):
                    if p * (n + 1) + r > R.order:
                        break
                    for k in range(n + 1):
                        case = check_summation_formula(R, p, r, n, k, beta)
                        yield IdentityCase("summation", {"array": name, **case.params},
                                           case.lhs, case.rhs)


def _pr_nk(b: SuiteBounds):
    for p in range(1, b.p_max + 1):
        for r in range(b.r_max + 1):
            for n in range(b.n_max + 1):
                for k in range(n + 1):
                    yield p, r, n, k


def _suite_fib_catalan(b: SuiteBounds) -> Cases:
    for p, r, n, k in _pr_nk(b):
        yield check_fibonacci_catalan(p, r, n, k, perturb=b.perturb_beta)


def _suite_catalan_array(b: SuiteBounds) -> Cases:
    for p, r, n, k in _pr_nk(b):
        yield check_catalan_array(p, r, n, k, perturb=b.perturb_beta)


def _suite_chu_vandermonde(b: SuiteBounds) -> Cases:
    for n in range(1, b.n_max + 1):
        for k in range(1, n + 1):
            for s in range(1, k + 1):
                yield check_chu_vandermonde(n, k, s)


def _suite_fuss_convolution(b: SuiteBounds) -> Cases:
    for p in range(1, b.p_max + 1):
        for r in range(b.r_max + 1):
            for n in range(1, b.n_max + 1):
                for k in range(1, n + 1):
                    for s in range(1, k + 1):
                        yield check_fuss_convolution(p, r, n, k, s)
                    yield check_fuss_convolution_s1(p, r, n, k)
                    yield check_fuss_convolution_shifted(p, r, n, k)


def _suite_gkp562(b: SuiteBounds) -> Cases:
    for x in b.rational_grid:
        for y in b.rational_grid:
            for p in range(1, b.p_max + 1):
                for n in range(b.n_max + 1):
                    yield check_gkp562(x, y, p, n)


GOULD_Q = (-1, 1, 2, 3)


def _suite_gould(b: SuiteBounds) -> Cases:
    for r in b.rational_grid:
        for q in GOULD_Q:
            for pp in b.rational_grid:
                for n in range(b.n_max + 1):
                    yield check_gould(r, q, pp, n)


TERNARY_PREFIX = (1, 1, 3, 12, 55, 273, 1428)
LAMBERT_EXPONENTS = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2))


def _coefficient_cases(name: str, params: dict, lhs: PowerSeries, rhs: PowerSeries,
                       upto: int | None = None) -> Cases:
    n_top = min(lhs.order, rhs.order) if upto is None else upto
    for n in range(n_top + 1):
        yield IdentityCase(name, {**params, "n": n}, lhs[n], rhs[n])


def _suite_fuss_functional(b: SuiteBounds) -> Cases:
    N = b.order
    t = PowerSeries.variable(N)
    for m in range(6):
        F = catalog.fuss_catalan(m, N)
        yield from _coefficient_cases("fuss-functional", {"m": m}, F, 1 + t * pow_int(F, m))
    geometric = PowerSeries([1] * (N + 1))
    for p in range(2, 6):
        inner = t * pow_int(1 - t, p - 1)
        yield from _coefficient_cases("fuss-composition", {"p": p},
                                      compose(catalog.fuss_catalan(p, N), inner), geometric)
    for m in range(5):
        for r in LAMBERT_EXPONENTS:
            yield from _coefficient_cases(
                "fuss-lambert", {"m": m, "r": r},
                catalog.fuss_catalan_power(m, r, N), catalog.fuss_catalan_power_via_pow(m, r, N))
    for p in (2, 3):
        for r in (0, 1, 2):
            closed = PowerSeries([binom(p * n + r, n) for n in range(13)])
            yield from _coefficient_cases("pascal-horizontal-g", {"p": p, "r": r},
                                          catalog.pascal_horizontal_g(p, r, 12), closed, 12)
    T = catalog.ternary(N)
    for n, v in enumerate(TERNARY_PREFIX):
        yield IdentityCase("ternary-prefix", {"n": n}, T[n], Fraction(v))


SUITES: dict[str, Callable[[SuiteBounds], Cases]] = {
    "pascal-onepth": _suite_pascal_onepth,
    "summation": _suite_summation,
    "fib-catalan": _suite_fib_catalan,
    "catalan-array": _suite_catalan_array,
    "chu-vandermonde": _suite_chu_vandermonde,
    "fuss-convolution": _suite_fuss_convolution,
    "gkp-562": _suite_gkp562,
    "gould": _suite_gould,
    "fuss-functional": _suite_fuss_functional,
}
SUITE_NAMES = tuple(SUITES)


def _grid_description(name: str, b: SuiteBounds) -> str:
    grid = ",".join(str(x) for x in b.rational_grid)
    if name in ("gkp-562", "gould"):
        return f"n<={b.n_max}, p<={b.p_max}, rational grid [{grid}]"
    if name == "chu-vandermonde":
        return f"1<=s<=k<=n<={b.n_max}"
    if name == "fuss-functional":
        return f"order {b.order}"
    return f"p<={b.p_max}, r<={b.r_max}, n<={b.n_max}" + \
        (f", order {b.order}" if name == "summation" else "")


def run_suite(names: Sequence[str], bounds: SuiteBounds = SuiteBounds(),
              keep_cases: bool = False) -> list[IdentityReport]:
    """Sweep each named suite in order; one report per suite."""
    reports = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        rep = IdentityReport(name, _grid_description(name, bounds))
        for case in SUITES[name](bounds):
            if case is None:
                rep.skipped += 1
                continue
            rep.total += 1
            if case.passed:
                rep.passed += 1
            else:
                rep.failed += 1
                if rep.first_failure is None:
                    rep.first_failure = case
            if keep_cases:
                rep.cases.append(case)
        reports.append(rep)
    return reports
