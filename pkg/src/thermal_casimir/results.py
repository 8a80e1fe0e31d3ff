"""Result containers shared by the exact and asymptotic evaluators."""
from __future__ import annotations

import enum
from dataclasses import dataclass


class Model(str, enum.Enum):
    """Which expression produced a number."""

    EXACT = "exact"
    LOW_T = "low_t"
    HIGH_T = "high_t"
    CASIMIR_ZERO_T = "casimir_zero_t"
    GOLD_CORRECTED = "gold_corrected"


@dataclass(frozen=True)
class TermBreakdown:
    """The four printed terms of the low-temperature expansion (J/m^2)."""

    casimir_term: float
    pair_term: float
    blackbody_term: float
    exponential_term: float

    @property
    def ratio_2_to_1(self) -> float:
        return abs(self.pair_term) / abs(self.casimir_term)

    @property
    def ratio_3_to_1(self) -> float:
        return abs(self.blackbody_term) / abs(self.casimir_term)

    @property
    def ratio_4_to_1(self) -> float:
        return abs(self.exponential_term) / abs(self.casimir_term)

    @property
    def total(self) -> float:
        return self.casimir_term + self.pair_term + self.blackbody_term + self.exponential_term


@dataclass(frozen=True)
class EnergyResult:
    """Free energy per unit area in J/m^2 (negative means attraction).

    ``truncation_error`` bounds ``|value - true value|`` for the mathematical
    truncation of the model's series; floating-point rounding is not included.
    """

    value: float
    model: Model
    truncation_error: float = 0.0
    terms: TermBreakdown | None = None


@dataclass(frozen=True)
class PressureResult:
    """Force per unit area in Pa, P = -dE/dl (negative means attraction)."""

    value: float
    model: Model
    truncation_error: float = 0.0
