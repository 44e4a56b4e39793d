import cmath
import math

import numpy as np
import pytest

from wittenloc.lattice import (
    ArgumentChoice,
    Lattice,
    LatticeCharacter,
    character_value,
    dedekind_eta,
    eisenstein,
    eisenstein_auto,
    eta_log_derivative,
    g2_regularized,
    g2_via_eta,
    lattice_points,
    lattice_power_sum,
    sigma_direct,
    sigma_series,
    witten_char_series,
    witten_char_series_symbolic,
    zeta_regularized_product,
)

SQ = Lattice.square()


# ---------------------------------------------------------------- oracles

def divisor_sigma3(n):
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def zeta_even(k, terms=200000):
    # with integral tail correction so truncation stays below 1e-13
    s = sum(1.0 / m**k for m in range(1, terms))
    return s + 1.0 / ((k - 1) * terms ** (k - 1)) + 0.5 / terms**k


def g4_q_expansion(tau, terms=60):
    """Classical q-expansion: G_4 = 2 zeta(4) + (2 (2 pi i)^4 / 3!) sum sigma_3(n) q^n."""
    q = cmath.exp(2j * math.pi * tau)
    s = sum(divisor_sigma3(n) * q**n for n in range(1, terms + 1))
    return 2 * zeta_even(4) + 2 * (2j * math.pi) ** 4 / math.factorial(3) * s


def g2_eta_finite_difference(tau, h=1e-6, order=60):
    """-4 pi i eta'/eta with the derivative by central differences."""
    d = (dedekind_eta(tau + h, order) - dedekind_eta(tau - h, order)) / (2 * h)
    return -4j * math.pi * d / dedekind_eta(tau, order)


# ---------------------------------------------------------------- lattice type

class TestLattice:
    def test_orientation_enforced(self):
        with pytest.raises(ValueError):
            Lattice(1, -1j)
        with pytest.raises(ValueError):
            Lattice(0, 1j)
        with pytest.raises(ValueError):
            Lattice(1, 2)  # real tau

    def test_volume_and_tau(self):
        lat = Lattice(2, 2j)
        assert lat.volume == pytest.approx(4.0)
        assert lat.tau == pytest.approx(1j)

    def test_coords_roundtrip(self):
        lat = Lattice(1 + 0.5j, 0.3 + 2j)
        z = lat.point(3, -2)
        x, y = lat.coords(z)
        assert x == pytest.approx(3.0)
        assert y == pytest.approx(-2.0)
        assert lat.contains(z)
        assert not lat.contains(z + 0.25)

    def test_min_norm(self):
        assert SQ.min_norm() == pytest.approx(1.0)
        assert Lattice(2, 2j).min_norm() == pytest.approx(2.0)
        assert Lattice(1, 0.2 + 0.3j).min_norm() == pytest.approx(abs(0.2 + 0.3j))


class TestLatticePoints:
    def test_unit_square_radius_one(self):
        pts = lattice_points(SQ, 1.0)
        assert len(pts) == 4
        assert set(map(complex, pts)) == {1, -1, 1j, -1j}

    def test_unit_square_radius_one_and_half(self):
        pts = lattice_points(SQ, 1.5)
        assert len(pts) == 8
        assert {1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j} <= set(map(complex, pts))

    def test_scaled_lattice_empty(self):
        assert len(lattice_points(Lattice(2, 2j), 1.0)) == 0

    def test_shell_order(self):
        pts = lattice_points(SQ, 3.0)
        norms = np.abs(pts)
        assert (np.diff(norms) >= -1e-12).all()
        # within the first shell, ordered by angle
        shell = pts[np.abs(np.abs(pts) - 1.0) < 1e-12]
        angles = np.angle(shell)
        assert (np.diff(angles) > 0).all()

    def test_radius_positive_required(self):
        with pytest.raises(ValueError):
            lattice_points(SQ, 0.0)


# ---------------------------------------------------------------- eisenstein

class TestEisenstein:
    def test_g6_vanishes_on_square_lattice(self):
        assert abs(eisenstein(SQ, 6, 200.0)) < 1e-10

    def test_g4_matches_q_expansion(self):
        direct = eisenstein(SQ, 4, 200.0)
        assert abs(direct - g4_q_expansion(1j)) < 1e-8

    def test_homogeneity_matched_radius(self):
        scaled = eisenstein(Lattice(2, 2j), 4, 200.0)
        base = eisenstein(SQ, 4, 100.0)
        assert scaled == pytest.approx(base / 16, abs=1e-15)

    def test_homogeneity_same_radius(self):
        scaled = eisenstein(Lattice(2, 2j), 4, 200.0)
        base = eisenstein(SQ, 4, 200.0)
        assert abs(scaled - base / 16) < 1e-8

    def test_modularity(self):
        tau = 2j
        lhs = eisenstein(Lattice.from_tau(-1 / tau), 4, 300.0)
        rhs = tau**4 * eisenstein(Lattice.from_tau(tau), 4, 300.0)
        assert abs(lhs - rhs) < 1e-8

    def test_odd_exponent_rejected(self):
        with pytest.raises(ValueError):
            eisenstein(SQ, 3, 100.0)
        with pytest.raises(ValueError):
            eisenstein(SQ, 2, 100.0)

    def test_odd_sums_vanish_via_debug_path(self):
        for k in (3, 5, 7):
            assert abs(lattice_power_sum(SQ, k, 60.0)) < 1e-12

    def test_auto_error_estimate(self):
        value, err = eisenstein_auto(SQ, 4, tol=1e-10)
        assert err < 1e-10
        assert abs(value - g4_q_expansion(1j)) < 1e-10

    def test_auto_doubles_radius_when_needed(self):
        # starting from a radius too small for the tolerance forces a retry
        value, err = eisenstein_auto(SQ, 4, tol=1e-13, radius=30.0,
                                     max_doublings=2)
        assert abs(value - g4_q_expansion(1j)) < 1e-11

    def test_auto_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            eisenstein_auto(SQ, 2)


# ---------------------------------------------------------------- G2 and eta

class TestG2:
    def test_square_lattice_value_is_pi(self):
        assert abs(g2_regularized(SQ) - math.pi) < 1e-9

    def test_eta_formula_oracle(self):
        for tau in (1j, 2j, (1 + 3j) / 2):
            lat = Lattice.from_tau(tau)
            assert abs(g2_regularized(lat) - g2_via_eta(tau)) < 1e-8
            assert abs(g2_regularized(lat) - g2_eta_finite_difference(tau)) < 1e-8

    def test_homogeneity(self):
        assert g2_regularized(Lattice(2, 2j)) == pytest.approx(math.pi / 4, abs=1e-9)

    def test_rejects_bad_tau(self):
        with pytest.raises(ValueError):
            Lattice.from_tau(-1j)

    def test_argument_choice_must_match_basis(self):
        with pytest.raises(ValueError):
            g2_regularized(SQ, ArgumentChoice(1.0))

    def test_rotated_presentation_changes_value(self):
        # same lattice Z[i], basis rotated by i: zeta_2 flips sign
        rotated = Lattice(1j, -1)
        assert abs(g2_regularized(rotated) + math.pi) < 1e-9


class TestDedekindEta:
    def test_classical_value_at_i(self):
        expected = math.gamma(0.25) / (2 * math.pi**0.75)
        assert abs(dedekind_eta(1j, 40) - expected) < 1e-9

    def test_translation_phase(self):
        lhs = dedekind_eta(1 + 1j, 40)
        rhs = cmath.exp(1j * math.pi / 12) * dedekind_eta(1j, 40)
        assert abs(lhs - rhs) < 1e-12

    def test_large_imaginary_part(self):
        val = dedekind_eta(10j, 5)
        assert abs(val - math.exp(-2 * math.pi * 10 / 24)) < 1e-27

    def test_rejects_lower_half_plane(self):
        with pytest.raises(ValueError):
            dedekind_eta(1 - 1j)
        with pytest.raises(ValueError):
            dedekind_eta(1j, 0)

    def test_log_derivative_consistent_with_finite_differences(self):
        tau = 0.3 + 1.2j
        h = 1e-6
        fd = (dedekind_eta(tau + h) - dedekind_eta(tau - h)) / (2 * h)
        assert abs(eta_log_derivative(tau) - fd / dedekind_eta(tau)) < 1e-9


# ---------------------------------------------------------------- sigma

class TestSigma:
    def test_zero_at_origin(self):
        assert sigma_direct(0, SQ, 50.0) == 0

    def test_vanishes_on_lattice_points(self):
        assert sigma_direct(1 + 1j, SQ, 50.0) == 0
        assert sigma_direct(-2 + 0j, SQ, 50.0) == 0

    def test_oddness(self):
        z = 0.31 + 0.17j
        assert abs(sigma_direct(-z, SQ, 100.0) + sigma_direct(z, SQ, 100.0)) < 1e-10

    def test_series_normalization_and_parity(self):
        s = sigma_series(SQ, 8)
        assert s.coefficient(0) == 0
        assert s.coefficient(1) == 1
        assert abs(s.coefficient(2)) == 0
        assert abs(s.coefficient(3)) == 0
        assert abs(s.coefficient(4)) == 0

    def test_series_z5_coefficient_is_minus_g4_over_4(self):
        # expanding z exp(-G4 z^4/4 - ...) by hand: the z^5 term is -G4/4
        s = sigma_series(SQ, 6)
        g4 = eisenstein_auto(SQ, 4)[0]
        assert abs(s.coefficient(5) + g4 / 4) < 1e-12

    def test_series_z7_vanishes_on_square_lattice(self):
        s = sigma_series(SQ, 8)
        assert abs(s.coefficient(7)) < 1e-10

    def test_series_agrees_with_product(self):
        s = sigma_series(SQ, 24)
        z = 0.3 + 0.1j
        assert abs(sigma_direct(z, SQ, 100.0) - s(z)) < 1e-6


class TestWittenCharSeries:
    def test_low_coefficients(self):
        w = witten_char_series(SQ, 8)
        g4 = eisenstein_auto(SQ, 4)[0]
        g6 = eisenstein_auto(SQ, 6)[0]
        assert w.coefficient(0) == 1
        assert abs(w.coefficient(4) - g4 / 4) < 1e-12
        assert abs(w.coefficient(6) - g6 / 6) < 1e-12

    def test_reciprocal_identity(self):
        w = witten_char_series(SQ, 12)
        s_over_z = sigma_series(SQ, 13).shift_down(1)
        prod = w * s_over_z
        assert abs(prod.coefficient(0) - 1) < 1e-14
        for k in range(1, 13):
            assert abs(prod.coefficient(k)) < 1e-12

    def test_symbolic_matches_numeric(self):
        sym = witten_char_series_symbolic(8)
        values = {"G4": eisenstein_auto(SQ, 4)[0], "G6": eisenstein_auto(SQ, 6)[0],
                  "G8": eisenstein_auto(SQ, 8)[0]}
        num = witten_char_series(SQ, 8)
        for k in range(9):
            sym_k = sym.coefficient(k)
            sym_val = sym_k.evaluate(values) if hasattr(sym_k, "evaluate") else sym_k
            assert abs(complex(sym_val) - complex(num.coefficient(k))) < 1e-12


# ------------------------------------------------- zeta-regularized product

class TestZetaRegularizedProduct:
    def test_value_at_zero_is_one(self):
        assert zeta_regularized_product(0, SQ) == 1

    def test_zeta1_zero_square_lattice(self):
        # with zeta1 = 0 and zeta2 = pi the product is exp(-pi z^2/2) sigma(z)/z
        z = 0.2 + 0.1j
        expected = (
            cmath.exp(-math.pi * z * z / 2) * sigma_direct(z, SQ, 120.0) / z
        )
        got = zeta_regularized_product(z, SQ, radius=120.0)
        assert abs(got - expected) < 1e-9

    def test_zeta1_enters_linearly(self):
        z = 0.2 - 0.3j
        base = zeta_regularized_product(z, SQ)
        shifted = zeta_regularized_product(z, SQ, zeta1_value=2.0)
        assert abs(shifted - base * cmath.exp(2.0 * z)) < 1e-9

    def test_argument_choice_sensitivity(self):
        # rotated presentation flips zeta2 from pi to -pi, changing the value
        z = 0.25 + 0.05j
        a = zeta_regularized_product(z, Lattice(1, 1j))
        b = zeta_regularized_product(z, Lattice(1j, -1))
        assert abs(a - b * cmath.exp(-math.pi * z * z)) < 1e-9
        assert abs(a - b) > 1e-3

    def test_pole_signal_at_nonzero_lattice_point(self):
        with pytest.raises(ValueError, match="pole"):
            zeta_regularized_product(1 + 1j, SQ)

    def test_no_false_pole_nearby(self):
        value = zeta_regularized_product(1.01 + 1j, SQ)
        assert value != 0
        assert abs(value) < 1.0  # a genuine zero is close by


# ---------------------------------------------------------------- characters

class TestCharacters:
    def test_trivial_character(self):
        assert character_value(SQ, 0, 0.37 + 2.1j) == 1

    def test_periodicity(self):
        lam = 2 + 1j
        z = 0.3 + 0.7j
        for mu in (1, 1j, 3 - 2j):
            a = character_value(SQ, lam, z)
            b = character_value(SQ, lam, z + mu)
            assert abs(a - b) < 1e-12

    def test_unit_modulus(self):
        for z in (0.1, 1.3 - 0.4j, -2 + 0.9j):
            assert abs(abs(character_value(SQ, 1 + 2j, z)) - 1) < 1e-12

    def test_half_period_value(self):
        # lam = 1, z = i/2 on the square lattice gives exp(-i pi) = -1
        assert character_value(SQ, 1, 0.5j) == pytest.approx(-1)

    def test_rejects_non_lattice_weight(self):
        with pytest.raises(ValueError):
            character_value(SQ, 0.5, 0)

    def test_character_object(self):
        chi = LatticeCharacter(SQ, 1 + 1j)
        assert abs(chi(0.2) - character_value(SQ, 1 + 1j, 0.2)) == 0
        with pytest.raises(ValueError):
            LatticeCharacter(SQ, 0.3)


class TestThetaFunctionOracles:
    """Cross-checks against mpmath's Jacobi theta functions: a code path
    sharing nothing with the lattice sums (nome q = exp(i pi tau))."""

    mp = pytest.importorskip("mpmath")

    def _nome(self, tau):
        return self.mp.exp(1j * self.mp.pi * self.mp.mpc(tau))

    def test_g2_against_theta_derivatives(self):
        # G_2(tau) = -pi^2 theta1'''(0, q) / (3 theta1'(0, q))
        for tau in (1j, 2j, (1 + 3j) / 2, 0.3 + 0.8j):
            q = self._nome(tau)
            ratio = self.mp.jtheta(1, 0, q, 3) / self.mp.jtheta(1, 0, q, 1)
            reference = complex(-self.mp.pi**2 * ratio / 3)
            assert abs(g2_regularized(Lattice.from_tau(tau)) - reference) < 1e-12

    def test_g4_against_theta_constants(self):
        # E_4 = (th2^8 + th3^8 + th4^8)/2 and G_4 = 2 zeta(4) E_4
        for tau in (1j, 2j, 0.5 + 1.5j):
            q = self._nome(tau)
            e4 = (
                self.mp.jtheta(2, 0, q) ** 8
                + self.mp.jtheta(3, 0, q) ** 8
                + self.mp.jtheta(4, 0, q) ** 8
            ) / 2
            reference = complex(2 * self.mp.zeta(4) * e4)
            assert abs(eisenstein(Lattice.from_tau(tau), 4, 200.0) - reference) < 1e-12

    def test_eta_against_q_pochhammer(self):
        for tau in (1j, 2j, (1 + 3j) / 2, 0.3 + 0.8j):
            t = self.mp.mpc(tau)
            reference = complex(
                self.mp.exp(1j * self.mp.pi * t / 12)
                * self.mp.qp(self.mp.exp(2j * self.mp.pi * t))
            )
            assert abs(dedekind_eta(tau, 60) - reference) < 1e-14

    def test_sigma_against_theta_quotient(self):
        # sigma(z) = exp(eta1 z^2) theta1(pi z, q) / (pi theta1'(0, q)),
        # with eta1 = G_2/2 taken from the theta route above
        for tau in (1j, 0.3 + 1.1j):
            q = self._nome(tau)
            th1p = self.mp.jtheta(1, 0, q, 1)
            eta1 = -self.mp.pi**2 * self.mp.jtheta(1, 0, q, 3) / (6 * th1p)
            lat = Lattice.from_tau(tau)
            for z in (0.3 + 0.1j, 0.45, -0.2 + 0.25j):
                zz = self.mp.mpc(z)
                reference = complex(
                    self.mp.exp(eta1 * zz**2)
                    * self.mp.jtheta(1, self.mp.pi * zz, q)
                    / (self.mp.pi * th1p)
                )
                assert abs(sigma_direct(z, lat, 150.0) - reference) < 1e-8


class TestArgumentChoice:
    def test_window(self):
        ac = ArgumentChoice(0.0)
        assert ac.arg(1) == 0.0
        assert ac.arg(-1) == pytest.approx(-math.pi)
        assert ac.arg(1j) == pytest.approx(math.pi / 2)

    def test_shifted_window(self):
        # window [-pi/2, 3pi/2): -1 maps up to pi, -i stays at -pi/2
        ac = ArgumentChoice(math.pi / 2)
        assert ac.arg(-1) == pytest.approx(math.pi)
        assert ac.arg(-1j) == pytest.approx(-math.pi / 2)

    def test_sqrt_branch(self):
        ac = ArgumentChoice(0.0)
        lam = 2 + 1j
        # arg(-lam) = arg(lam) - pi, so the pair of roots multiplies to -i lam
        prod = ac.sqrt(lam) * ac.sqrt(-lam)
        assert abs(prod - (-1j) * lam) < 1e-12

    def test_is_upper_partition(self):
        ac = ArgumentChoice(0.0)
        for lam in (1, 1j, 2 + 1j, -3 + 4j, -2 - 5j, 1 - 1j):
            assert ac.is_upper(lam) != ac.is_upper(-lam)

    def test_base_angle_range(self):
        with pytest.raises(ValueError):
            ArgumentChoice(math.pi)

    def test_canonical_for_lattice(self):
        assert ArgumentChoice.for_lattice(Lattice(1j, -1)).base_angle == (
            pytest.approx(math.pi / 2)
        )
