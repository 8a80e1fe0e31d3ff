import math

import numpy as np
import pytest

from oracles import central_difference, lattice_energy, printed_low_t, separation_for_tau
from thermal_casimir import (
    CONSTANTS,
    DomainError,
    QueryPoint,
    casimir_energy,
    casimir_pressure,
    exact_energy,
    exact_pressure,
    high_t_energy,
    high_t_pressure,
    low_t_energy,
    low_t_pressure,
    low_t_terms,
    term_ratios,
)
from thermal_casimir.results import Model

CASIMIR_300NM = -1.6050935462317946e-8
CASIMIR_P_300NM = -0.16050935462317947


class TestCasimir:
    def test_values(self):
        assert casimir_energy(300e-9) == pytest.approx(CASIMIR_300NM, rel=1e-15)
        assert float(f"{casimir_energy(300e-9):.5g}") == -1.6051e-8
        assert casimir_pressure(300e-9) == pytest.approx(CASIMIR_P_300NM, rel=1e-15)
        assert float(f"{casimir_pressure(300e-9):.5g}") == -0.16051

    def test_scaling(self):
        assert casimir_energy(600e-9) == pytest.approx(casimir_energy(300e-9) / 8, rel=1e-15)
        assert casimir_pressure(600e-9) == pytest.approx(casimir_pressure(300e-9) / 16, rel=1e-15)

    def test_vanishes_at_large_separation(self):
        values = [casimir_energy(l) for l in (1e-6, 1e-3, 1.0, 1e3)]
        assert all(v < 0 for v in values)
        assert values == sorted(values)
        assert -values[-1] < 1e-35

    @pytest.mark.parametrize("l", [1e-8, 3e-7, 1e-5])
    def test_pressure_is_derivative(self, l):
        assert casimir_pressure(l) == pytest.approx(-central_difference(casimir_energy, l), rel=1e-8)


class TestLowT:
    def test_zero_temperature(self):
        e = low_t_energy(QueryPoint(400e-9, 0.0))
        assert e.value == casimir_energy(400e-9)
        t = e.terms
        assert (t.pair_term, t.blackbody_term, t.exponential_term) == (0.0, 0.0, 0.0)
        assert low_t_pressure(QueryPoint(400e-9, 0.0)).value == casimir_pressure(400e-9)
        assert term_ratios(QueryPoint(400e-9, 0.0)) == (0.0, 0.0, 0.0)

    def test_terms_300nm(self):
        p = QueryPoint(300e-9, 300.0)
        t = low_t_terms(p)
        ref = printed_low_t(300e-9, 300.0)
        got = [t.casimir_term, t.pair_term, t.blackbody_term, t.exponential_term]
        assert got[:3] == pytest.approx(ref[:3], rel=1e-14)
        assert got[3] == pytest.approx(ref[3], rel=1e-10)
        assert [float(f"{x:.5g}") for x in got[:2]] == [-1.6051e-8, -1.3601e-11]
        assert float(f"{got[2]:.3g}") == 6.13e-13
        assert -1e-30 < got[3] < 0.0
        assert float(f"{low_t_energy(p).value:.4g}") == -1.606e-8

    def test_term_signs(self):
        t = low_t_terms(QueryPoint(700e-9, 77.0))
        assert t.casimir_term < 0 and t.pair_term < 0 and t.blackbody_term > 0 and t.exponential_term <= 0

    def test_exponential_underflows_to_zero(self):
        t = low_t_terms(QueryPoint(10e-9, 1.0))
        assert t.exponential_term == 0.0
        assert low_t_energy(QueryPoint(10e-9, 1.0)).truncation_error == 0.0

    def test_ratio_800nm(self):
        r2, r3, r4 = term_ratios(QueryPoint(800e-9, 300.0))
        assert r2 == pytest.approx(0.0161, abs=5e-4)
        assert r3 == pytest.approx(1.93e-3, abs=5e-5)
        assert r4 < r3 < r2

    @pytest.mark.parametrize("l, T", [(800e-9, 300.0), (300e-9, 77.0), (2e-6, 600.0)])
    def test_ratios_agree_with_breakdown(self, l, T):
        p = QueryPoint(l, T)
        t = low_t_energy(p).terms
        r2, r3, r4 = term_ratios(p)
        assert r2 == pytest.approx(t.ratio_2_to_1, rel=1e-12)
        assert r3 == pytest.approx(t.ratio_3_to_1, rel=1e-12)
        assert r4 == pytest.approx(t.ratio_4_to_1, rel=1e-12)

    def test_ratio_grows_as_cube(self):
        ls = np.geomspace(100e-9, 10e-6, 30)
        r2 = [term_ratios(QueryPoint(l, 300.0))[0] for l in ls]
        assert all(np.diff(r2) > 0)
        for l in (100e-9, 800e-9, 3e-6):
            assert term_ratios(QueryPoint(2 * l, 300.0))[0] == pytest.approx(
                8 * term_ratios(QueryPoint(l, 300.0))[0], rel=1e-12
            )

    @pytest.mark.parametrize("l", np.arange(300, 900, 100) * 1e-9)
    def test_matches_lattice_sum(self, l):
        assert low_t_energy(QueryPoint(l, 300.0)).value == pytest.approx(lattice_energy(l, 300.0), rel=1e-8)


class TestHighT:
    def test_20um(self):
        e = high_t_energy(QueryPoint(20e-6, 300.0))
        assert e.model is Model.HIGH_T
        assert float(f"{e.value:.4g}") == -4.953e-13

    def test_zero_temperature_rejected(self):
        with pytest.raises(DomainError):
            high_t_energy(QueryPoint(1e-6, 0.0))
        with pytest.raises(DomainError):
            high_t_pressure(QueryPoint(1e-6, 0.0))

    def test_linear_in_temperature(self):
        l = 50e-6
        a, b = high_t_energy(QueryPoint(l, 300.0)), high_t_energy(QueryPoint(l, 600.0))
        assert b.value == pytest.approx(2 * a.value, rel=a.truncation_error / abs(a.value) + 1e-12)

    def test_leading_pressure_term(self):
        l, T = 30e-6, 300.0
        leading = -CONSTANTS.boltzmann * T * CONSTANTS.zeta3 / (4 * math.pi * l**3)
        assert high_t_pressure(QueryPoint(l, T)).value == pytest.approx(leading, rel=1e-14)

    def test_tau_two(self):
        l = separation_for_tau(2.0, 300.0)
        p = QueryPoint(l, 300.0)
        ex, hi = exact_energy(p).value, high_t_energy(p).value
        assert abs(hi - ex) / abs(ex) < 1e-9
        # the pressure remainder carries larger coefficients: 7.8e-9 here
        exp_p, hi_p = exact_pressure(p).value, high_t_pressure(p)
        dev = abs(hi_p.value - exp_p)
        assert dev / abs(exp_p) == pytest.approx(7.78e-9, rel=1e-2)
        assert dev <= hi_p.truncation_error

    def test_tau_one_deviation(self):
        # the omitted e^{-4 pi tau} terms carry a prefactor of ~9 pi tau
        l = separation_for_tau(1.0, 300.0)
        p = QueryPoint(l, 300.0)
        ex, hi = exact_energy(p).value, high_t_energy(p)
        assert abs(hi.value - ex) / abs(ex) == pytest.approx(8.6807e-5, rel=1e-4)
        assert abs(hi.value - ex) <= hi.truncation_error


def _random_points(rng, n, tau_lo, tau_hi):
    for _ in range(n):
        l = 10 ** rng.uniform(-8, -3)
        t = 10 ** rng.uniform(math.log10(tau_lo), math.log10(tau_hi))
        yield QueryPoint(l, t * CONSTANTS.hbar_c / (2 * CONSTANTS.boltzmann * l))


@pytest.mark.parametrize(
    "energy, pressure, tau_range",
    [(low_t_energy, low_t_pressure, (1e-3, 2.0)), (high_t_energy, high_t_pressure, (0.5, 1e3))],
    ids=["low_t", "high_t"],
)
def test_remainder_bounds_hold(energy, pressure, tau_range):
    rng = np.random.default_rng(7)
    slack = 8 * np.finfo(float).eps
    for p in _random_points(rng, 100, *tau_range):
        ex, ep = exact_energy(p), exact_pressure(p)
        e, q = energy(p), pressure(p)
        assert abs(e.value - ex.value) <= e.truncation_error + ex.truncation_error + slack * abs(ex.value)
        assert abs(q.value - ep.value) <= q.truncation_error + ep.truncation_error + slack * abs(ep.value)


LOG_GRID = np.geomspace(100e-9, 10e-6, 9)


@pytest.mark.parametrize("T", [77.0, 300.0, 600.0])
@pytest.mark.parametrize(
    "energy, pressure",
    [(low_t_energy, low_t_pressure), (high_t_energy, high_t_pressure)],
    ids=["low_t", "high_t"],
)
def test_pressure_is_derivative(energy, pressure, T):
    for l in LOG_GRID:
        fd = -central_difference(lambda x: energy(QueryPoint(x, T)).value, l)
        assert pressure(QueryPoint(l, T)).value == pytest.approx(fd, rel=1e-6)


def test_pair_term_carries_no_pressure():
    # removing the l-independent pair term leaves the pressure unchanged
    p = QueryPoint(600e-9, 300.0)
    t = low_t_terms(p)
    f = lambda x: (lambda b: b.casimir_term + b.blackbody_term + b.exponential_term)(low_t_terms(QueryPoint(x, 300.0)))
    assert low_t_pressure(p).value == pytest.approx(-central_difference(f, 600e-9), rel=1e-8)
    assert t.pair_term == low_t_terms(QueryPoint(900e-9, 300.0)).pair_term
