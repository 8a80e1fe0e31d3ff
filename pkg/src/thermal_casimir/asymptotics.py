"""Low- and high-temperature expansions of the ideal-conductor free energy.

Low temperature / small distance (tau = 2kTl/(hbar c) << 1)::

    E = -pi^2 hbar c/(720 l^3) - zeta(3)(kT)^3/(2 pi (hbar c)^2)
        + (kT)^4 pi^2 l/(45 (hbar c)^3)
        - (kT)^2/(hbar c l) (1 + kTl/(pi hbar c)) exp(-pi hbar c/(kTl))

High temperature / large distance (tau >> 1), with the overall minus sign that
makes it the same attractive free energy as the low-T form::

    E = -kT/(8 pi l^2) [zeta(3) + (8 pi kTl/(hbar c) + 2) exp(-4 pi kTl/(hbar c))]

Remainder bounds
----------------
Resumming the Matsubara sum over n gives the lattice form

    E = -(kT tau^3/(4 pi^2 l^2)) sum_{m>=1, j in Z} (tau^2 m^2 + j^2)^-2.

Doing the m-sum in closed form yields the low-T series whose omitted part is
(hbar c/(8 pi^2 l^3)) sum_{jk>=2} (pi tau^3/j^3 + 2 pi^2 tau^2 k/j^2) p^(jk),
p = exp(-2 pi/tau). The high-T remainder is
(kT/(8 pi l^2)) sum_{nm>=2} (4 pi n tau/m^2 + 2/m^3) q^(nm), q = exp(-2 pi tau).
Grouping by N = jk (at most N factor pairs, each coefficient bounded by its
N-dependent maximum) gives the closed-form majorants used below.
"""
from __future__ import annotations

import math

from .constants import CONSTANTS, QueryPoint, tau
from .errors import DomainError, InputError
from .results import EnergyResult, Model, PressureResult, TermBreakdown

__all__ = [
    "casimir_energy",
    "casimir_pressure",
    "low_t_terms",
    "low_t_energy",
    "low_t_pressure",
    "high_t_energy",
    "high_t_pressure",
    "term_ratios",
]

_PI = math.pi
_PI2 = math.pi**2
_EXP_FLOOR = -700.0  # exp(x) flushed to exactly 0 below this


def _exp(x):
    return 0.0 if x < _EXP_FLOOR else math.exp(x)


def _moment_tail(x, power):
    """sum_{N>=2} N**power x**N for 0 <= x < 1, with the x^2 factored out."""
    d = 1.0 - x
    if power == 1:
        return x * x * (2.0 - x) / d**2
    if power == 2:
        return x * x * (4.0 - 3.0 * x + x * x) / d**3
    if power == 3:
        return x * x * (8.0 - 5.0 * x + 4.0 * x * x - x**3) / d**4
    raise ValueError(f"unsupported power {power}")


def _check_length(l):
    if not (l > 0.0 and math.isfinite(l)):
        raise InputError(f"separation must be positive and finite, got {l}")


def casimir_energy(l: float) -> float:
    """Zero-temperature ideal-conductor energy -pi^2 hbar c/(720 l^3), J/m^2."""
    _check_length(l)
    return -_PI2 * CONSTANTS.hbar_c / (720.0 * l**3)


def casimir_pressure(l: float) -> float:
    """Zero-temperature ideal-conductor pressure -pi^2 hbar c/(240 l^4), Pa."""
    _check_length(l)
    return -_PI2 * CONSTANTS.hbar_c / (240.0 * l**4)


def low_t_terms(point: QueryPoint) -> TermBreakdown:
    """The four printed low-temperature terms, each in J/m^2."""
    l, T = point.separation, point.temperature
    hc = CONSTANTS.hbar_c
    casimir = casimir_energy(l)
    if T == 0.0:
        return TermBreakdown(casimir, 0.0, 0.0, 0.0)
    kT = CONSTANTS.boltzmann * T
    pair = -CONSTANTS.zeta3 * kT**3 / (2.0 * _PI * hc**2)
    blackbody = kT**4 * _PI2 * l / (45.0 * hc**3)
    exponential = -(kT**2 / (hc * l)) * (1.0 + kT * l / (_PI * hc)) * _exp(-_PI * hc / (kT * l))
    return TermBreakdown(casimir, pair, blackbody, exponential)


def _low_t_energy_bound(l, t):
    if t == 0.0:
        return 0.0
    p = _exp(-2.0 * _PI / t)
    tail = _PI * t**3 * _moment_tail(p, 1) + 2.0 * _PI2 * t**2 * _moment_tail(p, 2)
    return CONSTANTS.hbar_c / (8.0 * _PI2 * l**3) * tail


def _low_t_pressure_bound(l, t):
    if t == 0.0:
        return 0.0
    p = _exp(-2.0 * _PI / t)
    tail = 4.0 * _PI2 * t**2 * _moment_tail(p, 2) + 4.0 * _PI**3 * t * _moment_tail(p, 3)
    return CONSTANTS.hbar_c / (8.0 * _PI2 * l**4) * tail


def low_t_energy(point: QueryPoint) -> EnergyResult:
    """Sum of the four low-temperature terms, with the term breakdown attached.

    Valid for any T >= 0; at T = 0 it collapses to :func:`casimir_energy`.
    """
    terms = low_t_terms(point)
    bound = _low_t_energy_bound(point.separation, tau(point))
    return EnergyResult(terms.total, Model.LOW_T, bound, terms)


def low_t_pressure(point: QueryPoint) -> PressureResult:
    """-dE/dl of the low-temperature expansion.

    The pair term does not depend on l and drops out.
    """
    l, T = point.separation, point.temperature
    if T == 0.0:
        return PressureResult(casimir_pressure(l), Model.LOW_T, 0.0)
    hc = CONSTANTS.hbar_c
    kT = CONSTANTS.boltzmann * T
    blackbody = -kT**4 * _PI2 / (45.0 * hc**3)
    # derivative of the exponential term, written in tau = 2kTl/(hbar c)
    t = tau(point)
    exponential = _PI * hc * t / (2.0 * l**4) * _exp(-2.0 * _PI / t)
    value = casimir_pressure(l) + blackbody + exponential
    return PressureResult(value, Model.LOW_T, _low_t_pressure_bound(l, t))


def _require_temperature(point):
    if point.temperature <= 0.0:
        raise DomainError("the high-temperature expansion is undefined at T = 0")


def high_t_energy(point: QueryPoint) -> EnergyResult:
    """High-temperature expansion (sign-normalised so the result is attractive).

    Raises
    ------
    DomainError
        At T = 0.
    """
    _require_temperature(point)
    l, T = point.separation, point.temperature
    kT = CONSTANTS.boltzmann * T
    x = kT * l / CONSTANTS.hbar_c
    prefactor = kT / (8.0 * _PI * l**2)
    value = -prefactor * (CONSTANTS.zeta3 + (8.0 * _PI * x + 2.0) * _exp(-4.0 * _PI * x))
    t = 2.0 * x
    q = _exp(-2.0 * _PI * t)
    bound = prefactor * (4.0 * _PI * t * _moment_tail(q, 2) + 2.0 * _moment_tail(q, 1))
    return EnergyResult(value, Model.HIGH_T, bound)


def high_t_pressure(point: QueryPoint) -> PressureResult:
    """-dE/dl of the high-temperature expansion.

    Leading term -kT zeta(3)/(4 pi l^3).
    """
    _require_temperature(point)
    l, T = point.separation, point.temperature
    kT = CONSTANTS.boltzmann * T
    t = tau(point)
    q = _exp(-2.0 * _PI * t)
    prefactor = kT / (4.0 * _PI * l**3)
    value = -prefactor * (CONSTANTS.zeta3 + (4.0 * _PI2 * t * t + 4.0 * _PI * t + 2.0) * q)
    bound = prefactor * (
        4.0 * _PI2 * t * t * _moment_tail(q, 3) + 4.0 * _PI * t * _moment_tail(q, 2) + 2.0 * _moment_tail(q, 1)
    )
    return PressureResult(value, Model.HIGH_T, bound)


def term_ratios(point: QueryPoint) -> tuple[float, float, float]:
    """Magnitudes of terms 2, 3 and 4 of the low-T expansion relative to term 1.

    The first two have closed forms, (360 zeta(3)/pi^3) x^3 and 16 x^4 with
    x = kTl/(hbar c); the exponential ratio is taken from the terms directly.
    """
    x = CONSTANTS.boltzmann * point.temperature * point.separation / CONSTANTS.hbar_c
    r2 = 360.0 * CONSTANTS.zeta3 / _PI**3 * x**3
    r3 = 16.0 * x**4
    return r2, r3, low_t_terms(point).ratio_4_to_1
