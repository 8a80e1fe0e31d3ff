"""Correction factors for real gold surfaces relative to ideal conductors.

Twelve digitised values (six separations, 0 K and 300 K) multiplying the
zero-temperature Casimir term. Between rows the factor is interpolated
linearly in separation, then linearly in temperature between the two
columns. Nothing is extrapolated.
"""
from __future__ import annotations

from dataclasses import dataclass

from .asymptotics import casimir_energy, casimir_pressure
from .errors import InputError, TableRangeError
from .results import EnergyResult, Model, PressureResult

__all__ = ["CorrectionTable", "table_rows", "correction_factor", "corrected_casimir_energy", "corrected_casimir_pressure"]

# (separation nm, factor at 0 K, factor at 300 K)
_ROWS = (
    (300, 0.74, 0.69),
    (400, 0.79, 0.73),
    (500, 0.82, 0.74),
    (600, 0.85, 0.75),
    (700, 0.87, 0.75),
    (800, 0.88, 0.75),
)
_T_LOW, _T_HIGH = 0.0, 300.0
# inputs this close to a knot are treated as the knot (e.g. linspace output)
_SNAP = 1e-12
# half a unit in the last tabulated digit
_FACTOR_RESOLUTION = 0.005


@dataclass(frozen=True)
class CorrectionTable:
    rows: tuple

    @property
    def separations_m(self) -> tuple:
        return tuple(r[0] / 1e9 for r in self.rows)

    def column(self, temperature: float) -> tuple:
        if temperature == _T_LOW:
            return tuple(r[1] for r in self.rows)
        if temperature == _T_HIGH:
            return tuple(r[2] for r in self.rows)
        raise InputError(f"the table has columns at 0 K and 300 K only, not {temperature} K")


_TABLE = CorrectionTable(_ROWS)


def table_rows() -> CorrectionTable:
    """The embedded table, rows ordered by separation."""
    return _TABLE


def _lerp(a, b, w):
    # exact at both ends and monotone in w
    if w == 0.0 or a == b:
        return a
    if w == 1.0:
        return b
    return a + (b - a) * w


def _snap(x, knots):
    for k in knots:
        if abs(x - k) <= _SNAP * k:
            return k
    return x


def _interp_separation(l, knots, values):
    for i in range(len(knots) - 1):
        lo, hi = knots[i], knots[i + 1]
        if lo <= l <= hi:
            return _lerp(values[i], values[i + 1], (l - lo) / (hi - lo))
    raise AssertionError("unreachable: range already checked")


def correction_factor(l: float, T: float) -> float:
    """Gold/ideal-conductor ratio at separation ``l`` (m) and temperature ``T`` (K).

    Raises
    ------
    TableRangeError
        If l is outside [300 nm, 800 nm] or T outside [0 K, 300 K].
    """
    knots = _TABLE.separations_m
    l = _snap(l, knots)
    if not knots[0] <= l <= knots[-1]:
        raise TableRangeError(
            f"separation {l * 1e9:.6g} nm is outside the tabulated range 300-800 nm"
        )
    if not _T_LOW <= T <= _T_HIGH:
        raise TableRangeError(f"temperature {T:.6g} K is outside the tabulated range 0-300 K")
    cold = _interp_separation(l, knots, _TABLE.column(_T_LOW))
    warm = _interp_separation(l, knots, _TABLE.column(_T_HIGH))
    return _lerp(cold, warm, (T - _T_LOW) / (_T_HIGH - _T_LOW))


def corrected_casimir_energy(l: float, T: float) -> EnergyResult:
    """Gold-corrected energy: the factor times the zero-temperature Casimir term.

    Only the Casimir term is corrected; the thermal terms of the low-T
    expansion are not. ``truncation_error`` reflects the two-digit precision
    of the tabulated factors.
    """
    factor = correction_factor(l, T)
    casimir = casimir_energy(l)
    return EnergyResult(factor * casimir, Model.GOLD_CORRECTED, _FACTOR_RESOLUTION * abs(casimir))


def corrected_casimir_pressure(l: float, T: float) -> PressureResult:
    """The same factor applied to the Casimir pressure.

    The table gives energy ratios; using them for the force ignores the slow
    variation of the factor with separation.
    """
    factor = correction_factor(l, T)
    casimir = casimir_pressure(l)
    return PressureResult(factor * casimir, Model.GOLD_CORRECTED, _FACTOR_RESOLUTION * abs(casimir))
