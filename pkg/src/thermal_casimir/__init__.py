"""Finite-temperature Casimir-Lifshitz free energy between ideal-conductor plates.

Exact Matsubara summation, the low- and high-temperature expansions checked
against it, and tabulated corrections for real gold surfaces.
"""
from .analysis import (
    ModelComparison,
    RegimeClass,
    SweepRow,
    SweepSpec,
    classify_regime,
    compare_models,
    crossover_separation,
    evaluate,
    iter_sweep,
    sweep,
)
from .asymptotics import (
    casimir_energy,
    casimir_pressure,
    high_t_energy,
    high_t_pressure,
    low_t_energy,
    low_t_pressure,
    low_t_terms,
    term_ratios,
)
from .constants import CONSTANTS, PhysicalConstants, Quantity, QueryPoint, format_quantity, parse_quantity, tau
from .errors import CasimirError, ConvergenceError, DomainError, InputError, SolverError, TableRangeError
from .exact import DEFAULT_POLICY, SummationPolicy, exact_energy, exact_pressure
from .gold import CorrectionTable, corrected_casimir_energy, correction_factor, table_rows
from .polylog import polylog
from .results import EnergyResult, Model, PressureResult, TermBreakdown

__version__ = "0.1.0"
