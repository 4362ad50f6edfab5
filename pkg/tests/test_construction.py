"""Construction tests: partial fractions (two routes), orders, degrees,
determinant law, normality, and kernel-route equivalence."""

import math
from fractions import Fraction

import pytest

from padelog.construction import (
    ConstructionParams,
    DeterminantError,
    OrderDefectError,
    build_system,
    degree_check,
    determinant,
    kernel_family,
    normality_check,
    order_check,
    partial_fractions,
    partial_fractions_local,
    proportional,
    q_polynomial,
    reconstructs_unity,
)
from padelog.series import Polynomial, log_power_series

F = Fraction


class TestPartialFractions:
    def test_m2_n0_i1(self):
        # Q = x^2 (x-1): 1/Q = -1/x - 1/x^2 + 1/(x-1)
        t = partial_fractions(ConstructionParams(2, 0), 1)
        assert t.values == ((F(-1), F(-1)), (F(1), F(0)))

    def test_m2_n0_i2(self):
        # Q = x^2 (x-1)^2
        t = partial_fractions(ConstructionParams(2, 0), 2)
        assert t.values == ((F(2), F(1)), (F(-2), F(1)))

    @pytest.mark.parametrize("m,n,i", [(2, 0, 1), (2, 1, 2), (3, 0, 2), (3, 1, 3), (4, 0, 1)])
    def test_residues_sum_to_zero(self, m, n, i):
        # coefficient of x^(deg Q - 1) in the cleared identity, deg Q >= 2
        params = ConstructionParams(m, n)
        assert q_polynomial(params, i).degree >= 2
        t = partial_fractions(params, i)
        assert sum(row[0] for row in t.values) == 0

    @pytest.mark.parametrize("m,n,i", [(2, 0, 1), (2, 2, 1), (3, 1, 2), (4, 1, 4)])
    def test_reconstruction(self, m, n, i):
        params = ConstructionParams(m, n)
        assert reconstructs_unity(params, partial_fractions(params, i))

    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_local_expansion_route_agrees(self, m, n):
        params = ConstructionParams(m, n)
        for i in range(1, m + 1):
            assert partial_fractions(params, i) == partial_fractions_local(params, i)


class TestBuildSystem:
    def test_m2_n0_polys(self):
        system = build_system(ConstructionParams(2, 0))
        assert system.poly(1, 0) == Polynomial([0, 1])
        assert system.poly(1, 1) == Polynomial([-1])
        assert system.poly(2, 0) == Polynomial([0, -2])
        assert system.poly(2, 1) == Polynomial([2, 1])

    def test_m2_n0_remainders(self):
        system = build_system(ConstructionParams(2, 0))
        r1 = system.remainder(1)
        assert r1.order() == 2
        assert r1.coefficient(2) == F(1, 2)
        assert r1.coefficient(3) == F(-1, 3)
        r2 = system.remainder(2)
        assert r2.order() == 3
        assert r2.coefficient(3) == F(1, 6)

    @pytest.mark.parametrize("m,n", [(2, 3), (3, 1), (4, 0)])
    def test_orders_and_leads(self, m, n):
        system = build_system(ConstructionParams(m, n))
        for i in range(1, m + 1):
            assert order_check(system, i)
            want = m * (n + 1) + i - 1
            assert system.remainder(i).coefficient(want) == F(1, math.factorial(want))

    def test_degree_caps(self):
        for m, n in [(2, 0), (2, 2), (3, 1)]:
            assert degree_check(build_system(ConstructionParams(m, n)))

    def test_perturbation_breaks_an_identity(self):
        params = ConstructionParams(2, 1)
        system = build_system(params, validate=False, perturb=(1, 0, 1, F(1)))
        broken_order = not all(order_check(system, i) for i in (1, 2))
        broken_det = False
        try:
            determinant(system)
        except DeterminantError:
            broken_det = True
        assert broken_order or broken_det

    def test_validate_raises_on_perturbation(self):
        with pytest.raises(OrderDefectError):
            build_system(ConstructionParams(2, 1), perturb=(1, 0, 1, F(1)))


class TestDeterminant:
    def test_m2_n0(self):
        gamma, exponent = determinant(build_system(ConstructionParams(2, 0)))
        assert (gamma, exponent) == (1, 2)

    @pytest.mark.parametrize("m,n", [(2, 0), (2, 1), (3, 0), (3, 2), (4, 1)])
    def test_monomial_law(self, m, n):
        gamma, exponent = determinant(build_system(ConstructionParams(m, n)))
        assert exponent == (n + 1) * m
        assert gamma != 0

    def test_bareiss_matches_cofactor_on_m5(self):
        # m = 5 exercises the elimination path
        gamma, exponent = determinant(build_system(ConstructionParams(5, 0)))
        assert exponent == 5
        assert gamma != 0


class TestNormality:
    def test_one_log(self):
        f = tuple(log_power_series(j, 8) for j in range(2))
        assert normality_check(f, (1, 1))

    def test_two_logs(self):
        f = tuple(log_power_series(j, 12) for j in range(3))
        assert normality_check(f, (2, 2, 2))

    def test_polynomial_dependence_fails(self):
        from padelog.series import TruncatedSeries

        one = TruncatedSeries([1], 8)
        one_plus_z = TruncatedSeries([1, 1], 8)
        assert not normality_check((one, one_plus_z), (1, 1))
        assert not normality_check((one, one_plus_z), (2, 1))
        # N = 2 is still normal for this pair
        assert normality_check((one, one_plus_z), (0, 0))


class TestKernelEquivalence:
    @pytest.mark.parametrize("m,n", [(2, 0), (2, 1), (2, 3), (3, 0), (3, 2)])
    def test_routes_proportional(self, m, n):
        params = ConstructionParams(m, n)
        system = build_system(params)
        for i in range(1, m + 1):
            explicit = [system.poly(i, j) for j in range(m)]
            assert proportional(kernel_family(params, i), explicit)
