"""High-precision root extraction, certification and root-based sums."""

from fractions import Fraction

import pytest
from mpmath import mp

import betheq.bethe as bethe
from betheq.asmcounts import asm_count
from betheq.bethe import (
    NonConvergenceError,
    component_sum_large,
    component_sum_small,
    energy,
    solve_roots,
    to_w,
    to_z,
    wavefunction_component,
)
from betheq.qfunctions import (
    Boundary,
    elem_for,
    elem_periodic,
    elem_reflecting,
    elem_twisted,
)

PREC = 192
TOL = mp.mpf(2) ** (30 - PREC)


class TestVariableChange:
    def test_round_trip(self):
        w = mp.mpc("0.7", "0.3")
        assert abs(to_w(to_z(w, 128), 128) - w) < mp.mpf(2) ** -120

    def test_fixed_point(self):
        # w = 1 maps to z = (q - 1)/(q - 1) = 1
        assert abs(to_z(mp.mpf(1), 128) - 1) < mp.mpf(2) ** -120


class TestSolveRoots:
    @pytest.mark.parametrize("boundary", list(Boundary))
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_roots_satisfy_polynomial(self, boundary, n):
        qp = elem_for(boundary, n)
        rs = solve_roots(qp, PREC)
        poly = qp.poly()
        with mp.workprec(PREC + 32):
            coeffs = [mp.mpf(c.numerator) / c.denominator for c in poly.coeffs]
            targets = rs.wt_roots if boundary is Boundary.REFLECTING else rs.roots
            for r in targets:
                val = mp.mpc(0)
                for c in reversed(coeffs):
                    val = val * r + c
                assert abs(val) < mp.mpf(2) ** (40 - PREC) * max(
                    1, abs(r) ** len(coeffs)
                )

    def test_reflecting_reciprocal_pairs(self):
        rs = solve_roots(elem_reflecting(3), PREC)
        n = rs.n
        assert len(rs.roots) == 2 * n
        with mp.workprec(PREC + 64):
            for i in range(n):
                assert abs(rs.roots[i] * rs.roots[i + n] - 1) < TOL
                assert abs(rs.roots[i]) >= 1 - mp.mpf(2) ** (10 - PREC)

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            solve_roots(elem_periodic(2), 32)

    def test_residual_certificate_attached(self):
        rs = solve_roots(elem_periodic(4), PREC)
        assert rs.residual is not None
        assert rs.residual < mp.mpf(10) ** -40

    def test_n1_periodic_root_is_one(self):
        # Q_1(w) = w - 1 for the periodic chain
        rs = solve_roots(elem_periodic(1), PREC)
        assert abs(rs.roots[0] - 1) < TOL


class TestResiduals:
    @pytest.mark.parametrize("boundary", list(Boundary))
    @pytest.mark.parametrize("n", range(1, 11))
    def test_bethe_equations_hold(self, boundary, n):
        rs = solve_roots(elem_for(boundary, n), 256)
        assert rs.residual < mp.mpf(10) ** -40


class TestEnergy:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_periodic_energy_is_minus_three_quarters_L(self, n):
        rs = solve_roots(elem_periodic(n), PREC)
        e = energy(rs)
        assert abs(e - mp.mpf(-3) * rs.L / 4) < TOL

    @pytest.mark.parametrize("n", range(1, 8))
    def test_periodic_z_sum(self, n):
        # sum (z_i + 1/z_i) = n + 1 for the periodic groundstate
        rs = solve_roots(elem_periodic(n), PREC)
        with mp.workprec(PREC):
            total = mp.mpc(0)
            for w in rs.roots:
                z = to_z(w, PREC)
                total += z + 1 / z
            assert abs(total - (n + 1)) < TOL

    @pytest.mark.parametrize("n", range(1, 8))
    def test_twisted_energy(self, n):
        rs = solve_roots(elem_twisted(n), PREC)
        assert abs(energy(rs) - mp.mpf(-3) * rs.L / 4) < TOL

    @pytest.mark.parametrize("n", range(1, 8))
    def test_reflecting_energy(self, n):
        # E = -3(L-1)/4 - sqrt(3)/2 sin(pi/3)... collapses to -3(2n-1)/4
        rs = solve_roots(elem_reflecting(n), PREC)
        assert abs(energy(rs) - mp.mpf(-3) * (rs.L - 1) / 4) < TOL


class TestComponentSums:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_small_component_sum_is_asm_count(self, n):
        rs = solve_roots(elem_periodic(n), PREC)
        val = component_sum_small(rs)
        assert abs(val - asm_count(n)) < mp.mpf(10) ** -20

    @pytest.mark.parametrize("n", range(1, 6))
    def test_large_component_sum_is_asm_count_squared(self, n):
        rs = solve_roots(elem_periodic(n), PREC)
        val = component_sum_large(rs)
        assert abs(val - asm_count(n) ** 2) < mp.mpf(10) ** -20

    def test_guard(self):
        rs = solve_roots(elem_periodic(2), PREC)
        object.__setattr__(rs, "n", bethe.PERM_SUM_MAX_N + 1)
        with pytest.raises(ValueError):
            component_sum_small(rs)


class TestWavefunction:
    def test_position_validation(self):
        rs = solve_roots(elem_periodic(2), PREC)
        with pytest.raises(ValueError):
            wavefunction_component(rs, [1])
        with pytest.raises(ValueError):
            wavefunction_component(rs, [3, 2])
        with pytest.raises(ValueError):
            wavefunction_component(rs, [0, 2])

    @pytest.mark.parametrize("n", [2, 3])
    def test_periodic_component_ratio(self, n):
        # |psi_max / psi_min| = A_n for the alternating vs packed
        # configurations on the periodic chain
        rs = solve_roots(elem_periodic(n), PREC)
        packed = list(range(1, n + 1))
        alternating = list(range(1, 2 * n + 1, 2))
        small = wavefunction_component(rs, packed)
        large = wavefunction_component(rs, alternating)
        assert abs(abs(large / small) - asm_count(n)) < mp.mpf(10) ** -20
