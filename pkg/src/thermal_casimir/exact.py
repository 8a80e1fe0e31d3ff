"""Exact free energy and pressure of ideal-conductor plates at temperature T.

Summing the two polarisations over the Matsubara spectrum x_n = 2 pi n kT/(hbar c)
(n = 0 with weight 1/2) gives

    E = (kT/pi) sum'_n  int_{x_n}^inf q ln(1 - exp(-2 q l)) dq.

Expanding the logarithm, sum_m exp(-2 m l q)/m, and integrating term by term,

    int_x^inf q ln(1 - e^{-2ql}) dq = -[x/(2l) Li2(e^{-2lx}) + Li3(e^{-2lx})/(4l^2)],

so with tau = 2 kT l/(hbar c), 2 l x_n = 2 pi n tau and

    E = -(kT / (8 pi l^2)) [zeta(3) + sum_{n>=1} (4 pi n tau Li2(q^n) + 2 Li3(q^n))],

q = exp(-2 pi tau). The n = 0 term alone is -kT zeta(3)/(8 pi l^2). The same
manipulation applied to -dE/dl gives

    P = -(kT / (4 pi l^3)) [zeta(3) + sum_{n>=1} (4 (pi n tau)^2 Li1 + 4 pi n tau Li2 + 2 Li3)].

Since Li_s(z)/z increases with z, Li_s(q^(n+1)) <= q Li_s(q^n), so the n-th
summand is bounded by q^k ((N+k)/N)^p times the N-th one (p = 1 for the energy,
p = 2 for the pressure). Summing that majorant gives a certified tail.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .asymptotics import casimir_energy, casimir_pressure
from .constants import CONSTANTS, QueryPoint, tau
from .errors import ConvergenceError, DomainError, InputError
from .polylog import polylog_exp
from .results import EnergyResult, Model, PressureResult

__all__ = [
    "SummationPolicy",
    "DEFAULT_POLICY",
    "exact_energy",
    "exact_pressure",
    "energy_series",
    "pressure_series",
]


@dataclass(frozen=True)
class SummationPolicy:
    """Stopping rules for the Matsubara sum.

    Below ``tau_floor`` the Li arguments approach 1 and the number of terms
    grows like 1/tau, while the low-temperature expansion is already exact to
    far beyond double precision; callers are expected to switch there.
    """

    relative_tolerance: float = 1e-12
    max_matsubara_terms: int = 1_000_000
    tau_floor: float = 1e-3

    def __post_init__(self):
        if not 0.0 < self.relative_tolerance < 1.0:
            raise InputError(f"relative_tolerance must lie in (0, 1), got {self.relative_tolerance}")
        if self.max_matsubara_terms < 1:
            raise InputError(f"max_matsubara_terms must be >= 1, got {self.max_matsubara_terms}")
        if not self.tau_floor > 0.0:
            raise InputError(f"tau_floor must be positive, got {self.tau_floor}")


DEFAULT_POLICY = SummationPolicy()


def _energy_summand(n, t):
    mu = 2.0 * math.pi * n * t
    return 4.0 * math.pi * n * t * polylog_exp(2, mu) + 2.0 * polylog_exp(3, mu)


def _pressure_summand(n, t):
    mu = 2.0 * math.pi * n * t
    x = math.pi * n * t
    return 4.0 * x * x * polylog_exp(1, mu) + 4.0 * x * polylog_exp(2, mu) + 2.0 * polylog_exp(3, mu)


def _tail_factor(t, n, power):
    """Majorant of sum_{k>=1} q^k ((n+k)/n)^power, q = exp(-2 pi tau)."""
    q = math.exp(-2.0 * math.pi * t)
    if q == 0.0:
        return 0.0
    one_minus_q = -math.expm1(-2.0 * math.pi * t)
    s0 = q / one_minus_q
    s1 = q / one_minus_q**2
    if power == 1:
        return s0 + s1 / n
    s2 = q * (1.0 + q) / one_minus_q**3
    return s0 + 2.0 * s1 / n + s2 / n**2


def _series(t, summand, power, policy, n_terms):
    # the n = 0 summand is 2 zeta(3) with Matsubara weight 1/2
    total = CONSTANTS.zeta3
    compensation = 0.0  # Neumaier summation; thousands of terms near tau_floor
    limit = n_terms if n_terms is not None else policy.max_matsubara_terms
    tail = math.inf
    for n in range(1, limit + 1):
        term = summand(n, t)
        s = total + term
        if abs(total) >= abs(term):
            compensation += (total - s) + term
        else:
            compensation += (term - s) + total
        total = s
        tail = term * _tail_factor(t, n, power)
        if n_terms is None and tail <= policy.relative_tolerance * total:
            return total + compensation, tail, n
    if n_terms is not None:
        return total + compensation, tail, n_terms
    raise ConvergenceError(
        f"Matsubara sum not converged after {limit} terms at tau={t:.6g} "
        f"(tail bound {tail:.3g}, partial sum {total:.6g})"
    )


def energy_series(t: float, policy: SummationPolicy = DEFAULT_POLICY, n_terms: int | None = None):
    """Dimensionless bracket of the energy sum.

    Returns ``(sum, tail_bound, terms_used)``. With ``n_terms`` given exactly
    that many n >= 1 terms are summed and the tolerance is ignored.
    """
    if n_terms is not None and n_terms < 1:
        raise InputError(f"n_terms must be >= 1, got {n_terms}")
    return _series(t, _energy_summand, 1, policy, n_terms)


def pressure_series(t: float, policy: SummationPolicy = DEFAULT_POLICY, n_terms: int | None = None):
    """Pressure counterpart of :func:`energy_series`."""
    return _series(t, _pressure_summand, 2, policy, n_terms)


def _check_domain(point, policy):
    t = tau(point)
    if t < policy.tau_floor:
        raise DomainError(
            f"tau={t:.4g} is below the summation floor {policy.tau_floor:g}; "
            "use low_t_energy / low_t_pressure there"
        )
    return t


def exact_energy(point: QueryPoint, policy: SummationPolicy = DEFAULT_POLICY) -> EnergyResult:
    """Free energy per unit area from the full Matsubara sum.

    At T = 0 the analytic limit (the Casimir term) is returned exactly.

    Raises
    ------
    DomainError
        If 0 < tau < ``policy.tau_floor``.
    ConvergenceError
        If the tail bound does not drop below tolerance within the term budget.
    """
    if point.temperature == 0.0:
        return EnergyResult(casimir_energy(point.separation), Model.EXACT, 0.0)
    t = _check_domain(point, policy)
    total, tail, _ = energy_series(t, policy)
    prefactor = CONSTANTS.boltzmann * point.temperature / (8.0 * math.pi * point.separation**2)
    return EnergyResult(-prefactor * total, Model.EXACT, prefactor * tail)


def exact_pressure(point: QueryPoint, policy: SummationPolicy = DEFAULT_POLICY) -> PressureResult:
    """Pressure -dE/dl from the term-wise differentiated Matsubara sum."""
    if point.temperature == 0.0:
        return PressureResult(casimir_pressure(point.separation), Model.EXACT, 0.0)
    t = _check_domain(point, policy)
    total, tail, _ = pressure_series(t, policy)
    prefactor = CONSTANTS.boltzmann * point.temperature / (4.0 * math.pi * point.separation**3)
    return PressureResult(-prefactor * total, Model.EXACT, prefactor * tail)
