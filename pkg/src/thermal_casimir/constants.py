"""Physical constants, unit-aware quantities and the regime parameter.

Everything in the numerical core is strict SI: metres, kelvin, J/m^2, Pa.
Conversion from human units ("300nm", "0.8um") happens here and only at the
CLI boundary.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "PhysicalConstants",
    "CONSTANTS",
    "QueryPoint",
    "Quantity",
    "parse_quantity",
    "format_quantity",
    "tau",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """SI-exact (CODATA 2018) values used throughout the package."""

    boltzmann: float = 1.380649e-23  # J/K, exact
    hbar: float = 1.054571817e-34  # J s
    light_speed: float = 299792458.0  # m/s, exact
    zeta3: float = 1.2020569031595942854  # Apery's constant

    @property
    def hbar_c(self) -> float:
        """hbar * c in J m."""
        return self.hbar * self.light_speed


CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class QueryPoint:
    """A plate separation (m) and temperature (K)."""

    separation: float
    temperature: float

    def __post_init__(self):
        l, T = self.separation, self.temperature
        if not (math.isfinite(l) and math.isfinite(T)):
            raise InputError(f"separation and temperature must be finite, got ({l}, {T})")
        if l <= 0.0:
            raise InputError(f"separation must be positive, got {l} m")
        if T < 0.0:
            raise InputError(f"temperature must be non-negative, got {T} K")


# unit -> (dimension, divisor converting magnitude to SI)
_UNITS = {
    "m": ("length", 1.0),
    "nm": ("length", 1e9),
    "µm": ("length", 1e6),
    "K": ("temperature", 1.0),
}
_UNIT_ALIASES = {"um": "µm", "μm": "µm"}  # ASCII and Greek-mu spellings

_QUANTITY_RE = re.compile(
    r"^\s*(?P<num>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)(?P<unit>[^\s\d.+-]*)\s*$"
)


@dataclass(frozen=True)
class Quantity:
    """A magnitude tagged with one of the units m, nm, µm or K."""

    magnitude: float
    unit: str

    def __post_init__(self):
        if self.unit not in _UNITS:
            raise InputError(f"unknown unit {self.unit!r}")
        if not math.isfinite(self.magnitude):
            raise InputError(f"magnitude must be finite, got {self.magnitude}")

    @property
    def dimension(self) -> str:
        return _UNITS[self.unit][0]

    def to_si(self) -> float:
        """Value in metres or kelvin.

        Division (not multiplication by 1e-9) keeps e.g. ``300nm`` bitwise
        equal to the literal ``300e-9``.
        """
        return self.magnitude / _UNITS[self.unit][1]

    def meters(self) -> float:
        if self.dimension != "length":
            raise InputError(f"{format_quantity(self)} is not a length")
        return self.to_si()

    def kelvin(self) -> float:
        if self.dimension != "temperature":
            raise InputError(f"{format_quantity(self)} is not a temperature")
        return self.to_si()


def parse_quantity(text: str, default_unit: str | None = None) -> Quantity:
    """Parse a number immediately followed by an optional unit suffix.

    Parameters
    ----------
    text : str
        E.g. ``"300nm"``, ``"0.8um"``, ``"300K"``, ``"3e-7m"``.
    default_unit : str, optional
        Unit assumed when the suffix is missing. Without it a bare number is
        rejected.

    Returns
    -------
    Quantity

    Raises
    ------
    InputError
        Malformed number, unknown or missing unit, or a non-positive length.
    """
    match = _QUANTITY_RE.match(text)
    if match is None:
        raise InputError(f"cannot parse quantity {text!r}")
    unit = match.group("unit")
    unit = _UNIT_ALIASES.get(unit, unit)
    if not unit:
        if default_unit is None:
            raise InputError(f"quantity {text!r} has no unit")
        unit = default_unit
    if unit not in _UNITS:
        raise InputError(f"unknown unit {match.group('unit')!r} in {text!r}")
    q = Quantity(float(match.group("num")), unit)
    if q.dimension == "length" and q.magnitude <= 0.0:
        raise InputError(f"length must be positive, got {text!r}")
    return q


def format_quantity(q: Quantity) -> str:
    """Inverse of :func:`parse_quantity` (shortest round-tripping repr)."""
    return f"{q.magnitude!r}{q.unit}"


def tau(point: QueryPoint) -> float:
    """Regime parameter 2 k T l / (hbar c); zero at T = 0."""
    c = CONSTANTS
    return 2.0 * c.boltzmann * point.temperature * point.separation / c.hbar_c
