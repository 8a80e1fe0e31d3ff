"""Polylogarithms Li_1, Li_2, Li_3 on [0, 1).

Two evaluation routes:

* direct power series sum z**m / m**s for z <= 1/2, stopped with the tail
  bound z**(K+1) / ((K+1)**s (1 - z));
* for z > 1/2 the expansion in w = ln z around z = 1,

      Li_s(e^w) = w^(s-1)/(s-1)! (H_(s-1) - ln(-w)) + sum_{k != s-1} zeta(s-k) w^k / k!

  which converges like (|w| / 2 pi)^k, so a handful of terms suffice.

Li_1 is always -ln(1 - z).

The Matsubara sums call :func:`polylog_exp` with the exponent directly so no
precision is lost forming z = exp(-mu) near z = 1.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

__all__ = ["polylog", "polylog_exp"]

_LN2 = math.log(2.0)
_ZETA2 = math.pi**2 / 6.0
_ZETA3 = 1.2020569031595942854
_EPS = 1e-17
_MAX_LOG_TERMS = 60


@lru_cache(maxsize=None)
def _bernoulli(n: int) -> Fraction:
    # B_1 = -1/2 convention; only even indices are used here
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(math.comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b[n]


def _zeta_nonpositive(n: int) -> float:
    """zeta(-n) for n >= 0."""
    if n == 0:
        return -0.5
    if n % 2 == 0:
        return 0.0
    return float(-_bernoulli(n + 1) / (n + 1))


@lru_cache(maxsize=None)
def _log_series_coefficients(order: int) -> tuple:
    """zeta(order - k) / k! for k = 0.. with the k = order - 1 slot zeroed."""
    coeffs = []
    for k in range(_MAX_LOG_TERMS):
        arg = order - k
        if k == order - 1:
            coeffs.append(0.0)
        elif arg == 3:
            coeffs.append(_ZETA3 / math.factorial(k))
        elif arg == 2:
            coeffs.append(_ZETA2 / math.factorial(k))
        else:
            coeffs.append(_zeta_nonpositive(-arg) / math.factorial(k))
    return tuple(coeffs)


def _direct_series(order, z):
    total = 0.0
    power = 1.0
    m = 0
    while True:
        m += 1
        power *= z
        total += power / m**order
        tail = power * z / ((m + 1) ** order * (1.0 - z))
        if tail <= _EPS * total:
            return total


def _log_series(order, mu):
    # Li_order(e^w), w = -mu, 0 < mu < ln 2
    w = -mu
    harmonic = sum(1.0 / j for j in range(1, order))
    total = w ** (order - 1) / math.factorial(order - 1) * (harmonic - math.log(mu))
    power = 1.0
    for k, coeff in enumerate(_log_series_coefficients(order)):
        if k:
            power *= w
        if coeff == 0.0:
            continue
        term = coeff * power
        total += term
        if k > order and abs(term) <= _EPS * abs(total):
            break
    return total


def polylog_exp(order: int, mu: float) -> float:
    """Li_order(exp(-mu)) for mu > 0 (mu = inf gives 0)."""
    if order not in (1, 2, 3):
        raise DomainError(f"polylog order must be 1, 2 or 3, got {order}")
    if not mu > 0.0:
        raise DomainError(f"polylog_exp needs mu > 0, got {mu}")
    if order == 1:
        if mu >= _LN2:
            return -math.log1p(-math.exp(-mu))
        return -math.log(-math.expm1(-mu))
    if mu >= _LN2:
        return _direct_series(order, math.exp(-mu))
    return _log_series(order, mu)


def polylog(order: int, z: float) -> float:
    """Polylogarithm Li_order(z) = sum_{m>=1} z**m / m**order for 0 <= z < 1.

    Parameters
    ----------
    order : {1, 2, 3}
    z : float
        Argument in [0, 1).

    Raises
    ------
    DomainError
        For z outside [0, 1) or an unsupported order.
    """
    if order not in (1, 2, 3):
        raise DomainError(f"polylog order must be 1, 2 or 3, got {order}")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"polylog argument must lie in [0, 1), got {z}")
    if z == 0.0:
        return 0.0
    if order == 1:
        return -math.log1p(-z)
    if z <= 0.5:
        return _direct_series(order, z)
    return _log_series(order, -math.log(z))
