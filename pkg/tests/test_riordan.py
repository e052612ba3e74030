from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from riordankit import catalog
from riordankit.errors import InvalidRiordanArray, OrderExceeded, UnnormalizedG
from riordankit.riordan import (
    RiordanArray,
    a_sequence,
    apply_ftra,
    arrays_agree,
    check_row_recurrences,
    classify_subgroups,
    convolution_identity,
    entry,
    identity,
    inverse,
    is_pseudo_involution,
    matmul,
    multiply,
    row_recurrence_check,
    z_sequence,
)
from riordankit.series import PowerSeries, compose, mul, shift

from conftest import admissible_f, unit_series

N = 16
t = PowerSeries.variable(N)
one = PowerSeries.constant(1, N)
PASCAL = catalog.pascal(N)
PASCAL_INV = RiordanArray(one / (1 + t), t / (1 + t))
C = catalog.catalan(N)
CTC = RiordanArray(C, shift(C, 1).truncate(N))
FIB_CAT = catalog.fibonacci_catalan_array(N)
CATALOG = {name: catalog.array(name, N) for name in catalog.ARRAY_NAMES}


def solve_sequence(m, col):
    """Coefficientwise solve of d[n+1, col] = sum_j s_j d[n, j - 1 + col] (col 0: Z, col 1: A)."""
    out = []
    for n in range(len(m) - 1):
        known = sum((out[j] * m[n][j] for j in range(n)), Fraction(0))
        out.append((m[n + 1][col] - known) / m[n][n])
    return out


class TestConstruction:
    def test_rejects_bad_g(self):
        with pytest.raises(InvalidRiordanArray):
            RiordanArray(t, t)

    def test_rejects_bad_f(self):
        with pytest.raises(InvalidRiordanArray):
            RiordanArray(one, 1 + t)
        with pytest.raises(InvalidRiordanArray):
            RiordanArray(one, t * t)


class TestEntry:
    def test_pascal_rows(self):
        assert PASCAL.matrix(4) == [[1, 0, 0, 0], [1, 1, 0, 0], [1, 2, 1, 0], [1, 3, 3, 1]]

    def test_pascal_inverse_row4(self):
        assert [entry(PASCAL_INV, 4, k) for k in range(5)] == [1, -4, 6, -4, 1]

    def test_upper_triangle_is_zero(self):
        for R in CATALOG.values():
            assert all(entry(R, n, k) == 0 for n in range(8) for k in range(n + 1, 10))

    def test_beyond_order(self):
        with pytest.raises(OrderExceeded):
            entry(PASCAL, N + 1, 0)
        with pytest.raises(OrderExceeded):
            PASCAL.matrix(N + 2)

    def test_catalog_closed_forms(self):
        for name, ce in catalog.ARRAYS.items():
            R = CATALOG[name]
            for n in range(N + 1):
                for k in range(n + 1):
                    assert entry(R, n, k) == ce.closed_form(n, k), (name, n, k)


class TestGroup:
    def test_identity_element(self):
        for R in CATALOG.values():
            assert multiply(R, identity(N)) == R
            assert multiply(identity(N), R) == R

    def test_pascal_inverse(self):
        assert inverse(PASCAL) == PASCAL_INV
        assert multiply(PASCAL, PASCAL_INV) == identity(N)

    def test_inverse_identity(self):
        assert inverse(identity(N)) == identity(N)

    def test_double_inverse(self):
        for R in CATALOG.values():
            assert inverse(inverse(R)) == R

    def test_iteration_law(self):
        # (1, g)(1, f) = (1, f o g)
        f, g = t / (1 - t), t + t * t
        lhs = multiply(RiordanArray(one, g), RiordanArray(one, f))
        assert lhs == RiordanArray(one, compose(f, g))

    def test_product_matches_matrix_product(self):
        names = list(CATALOG)
        for a in names:
            for b in names:
                R, S = CATALOG[a], CATALOG[b]
                assert multiply(R, S).matrix(N + 1) == matmul(R.matrix(N + 1), S.matrix(N + 1))

    def test_associative_inverse_two_sided(self):
        arrs = list(CATALOG.values())
        for R in arrs:
            assert multiply(R, inverse(R)) == identity(N)
            assert multiply(inverse(R), R) == identity(N)
            for S in arrs:
                for T in arrs[:2]:
                    assert multiply(multiply(R, S), T) == multiply(R, multiply(S, T))

    @settings(max_examples=25)
    @given(unit_series(order=10), admissible_f(order=10), unit_series(order=10), admissible_f(order=10))
    def test_random_group_axioms(self, g1, f1, g2, f2):
        R, S = RiordanArray(g1, f1), RiordanArray(g2, f2)
        assert multiply(R, inverse(R)) == identity(10)
        assert multiply(R, S).matrix(11) == matmul(R.matrix(11), S.matrix(11))


class TestFtra:
    def test_row_sums(self):
        got = apply_ftra(PASCAL, one / (1 - t))
        m = PASCAL.matrix(11)
        oracle = [sum(row) for row in m]
        assert list(got.coeffs[:11]) == oracle == [2 ** n for n in range(11)]

    def test_trivial(self):
        assert apply_ftra(CTC, one) == C
        d = PowerSeries(range(1, N + 2))
        assert apply_ftra(identity(N), d) == d

    @given(unit_series(order=10))
    def test_matches_matrix_vector(self, d):
        for R in CATALOG.values():
            m = R.truncate(10).matrix(11)
            h = apply_ftra(R.truncate(10), d)
            assert list(h.coeffs) == [sum(m[n][k] * d[k] for k in range(11)) for n in range(11)]


class TestSequences:
    def test_a_pascal(self):
        assert a_sequence(PASCAL) == PowerSeries([1, 1], N - 1)

    def test_a_fib_catalan(self):
        assert a_sequence(FIB_CAT) == PowerSeries([1] * N)

    def test_a_appell(self):
        assert a_sequence(RiordanArray(C, t)) == PowerSeries.constant(1, N - 1)

    def test_a_defining_equation(self):
        for R in CATALOG.values():
            A = a_sequence(R)
            assert mul(t, compose(A, R.f)).truncate(A.order) == R.f.truncate(A.order)

    def test_a_matches_coefficientwise_solve(self):
        for R in CATALOG.values():
            m = R.matrix(11)
            A = a_sequence(R)
            # d[n+1, 1] = sum_j a_j d[n, j]
            assert list(A.coeffs[:10]) == solve_sequence(m, 1)

    def test_z_pascal(self):
        Z = z_sequence(PASCAL)
        assert list(Z.coeffs[:10]) == [1] + [0] * 9
        assert solve_sequence(PASCAL.matrix(11), 0) == [1] + [0] * 9

    def test_z_lagrange(self):
        assert z_sequence(RiordanArray(one, t / (1 - t))).is_zero()

    def test_z_ctc(self):
        Z = z_sequence(CTC)
        assert list(Z.coeffs[:10]) == solve_sequence(CTC.matrix(11), 0)
        lhs = one - mul(t, compose(Z, CTC.f.truncate(Z.order)))
        assert mul(lhs.truncate(Z.order), C.truncate(Z.order)) == PowerSeries.constant(1, Z.order)

    def test_z_unnormalized(self):
        with pytest.raises(UnnormalizedG):
            z_sequence(RiordanArray(PowerSeries.constant(2, N), t))

    def test_row_recurrences(self):
        assert row_recurrence_check(PASCAL, 10)
        assert row_recurrence_check(CTC, 10)
        for R in CATALOG.values():
            assert row_recurrence_check(R, 12)

    def test_row_recurrence_unnormalized_g(self):
        assert row_recurrence_check(RiordanArray(PowerSeries.constant(3, N), t / (1 - t)), 8)

    def test_row_recurrence_too_many_rows(self):
        with pytest.raises(OrderExceeded):
            row_recurrence_check(PASCAL, N + 1)

    def test_corrupted_entry_is_located(self):
        m = PASCAL.matrix(10)
        m[6][3] += 1
        res = check_row_recurrences(m, a_sequence(PASCAL), z_sequence(PASCAL))
        assert not res
        assert res.failure == ("A", 6, 3)

    def test_corrupted_column_zero(self):
        m = CTC.matrix(10)
        m[4][0] += 1
        res = check_row_recurrences(m, a_sequence(CTC), z_sequence(CTC))
        assert res.failure == ("Z", 4, 0)


class TestClassification:
    def test_appell(self):
        assert classify_subgroups(RiordanArray(one / (1 - t), t)) == {"Appell"}

    def test_bell(self):
        assert classify_subgroups(CTC) == {"Bell(1)"}
        assert classify_subgroups(RiordanArray(C, shift(mul(C, C), 1).truncate(N))) == {"Bell(2)"}

    def test_lagrange_checkerboard(self):
        assert classify_subgroups(RiordanArray(one, t / (1 - t * t))) == {"Lagrange", "checkerboard"}

    def test_identity_labels(self):
        labels = classify_subgroups(identity(N))
        assert {"Appell", "Lagrange", "Bell(1)", "hitting-time", "derivative", "checkerboard"} >= labels
        assert {"Appell", "Lagrange", "hitting-time", "derivative", "checkerboard"} <= labels

    def test_hitting_time_and_derivative(self):
        f = t / (1 - t)
        from riordankit.series import derive, div
        assert "hitting-time" in classify_subgroups(RiordanArray(div(derive(f), shift(f, -1)), f))
        assert "derivative" in classify_subgroups(RiordanArray(derive(f), f))

    def test_pascal(self):
        # t f'/f = 1/(1-t) = g as well
        assert classify_subgroups(PASCAL) == {"Bell(1)", "hitting-time"}

    def test_pseudo_involution(self):
        assert is_pseudo_involution(PASCAL)
        assert is_pseudo_involution(PASCAL_INV)
        assert not is_pseudo_involution(RiordanArray(one, 2 * t))


class TestConvolution:
    def test_chu_vandermonde(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                for s in range(1, k + 1):
                    lhs, rhs = convolution_identity(PASCAL, n, k, s)
                    direct = sum(comb(n - j, k - s) * comb(j - 1, s - 1) for j in range(s, n + 1))
                    assert lhs == rhs == direct == comb(n, k)

    def test_catalog_all(self):
        for R in CATALOG.values():
            for n in range(1, 11):
                for k in range(1, n + 1):
                    for s in range(1, k + 1):
                        lhs, rhs = convolution_identity(R, n, k, s)
                        assert lhs == rhs

    def test_boundary(self):
        lhs, rhs = convolution_identity(CTC, 5, 5, 5)
        assert lhs == rhs == entry(CTC, 0, 0) * (CTC.f.truncate(N) ** 5)[5]

    def test_bad_s(self):
        with pytest.raises(ValueError):
            convolution_identity(PASCAL, 3, 2, 3)


def test_catalog_arrays_agree_helper():
    assert arrays_agree(PASCAL, catalog.pascal(8))
    assert not arrays_agree(PASCAL, catalog.delannoy(8))
