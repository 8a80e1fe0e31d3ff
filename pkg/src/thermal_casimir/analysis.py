"""Regime classification, model-vs-oracle comparison, crossover and sweeps."""
from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterator

import numpy as np
from scipy.optimize import bisect

from .asymptotics import (
    casimir_energy,
    casimir_pressure,
    high_t_energy,
    high_t_pressure,
    low_t_energy,
    low_t_pressure,
)
from .constants import CONSTANTS, QueryPoint, tau
from .errors import CasimirError, DomainError, InputError, SolverError
from .exact import DEFAULT_POLICY, SummationPolicy, exact_energy, exact_pressure
from .gold import corrected_casimir_energy, corrected_casimir_pressure, correction_factor
from .results import EnergyResult, Model, PressureResult

__all__ = [
    "Regime",
    "RegimeClass",
    "ModelComparison",
    "SweepSpec",
    "SweepRow",
    "LOW_T_THRESHOLD",
    "HIGH_T_THRESHOLD",
    "classify_regime",
    "evaluate",
    "compare_models",
    "crossover_separation",
    "sweep_grid",
    "iter_sweep",
    "sweep",
]

LOW_T_THRESHOLD = 0.5
HIGH_T_THRESHOLD = 2.0
CROSSOVER_TAU_BRACKET = (0.3, 3.0)


class Regime(str, enum.Enum):
    LOW_T_VALID = "low_t_valid"
    CROSSOVER = "crossover"
    HIGH_T_VALID = "high_t_valid"


@dataclass(frozen=True)
class RegimeClass:
    tau_value: float
    label: Regime


def classify_regime(point: QueryPoint) -> RegimeClass:
    """Label a point by which expansion is trustworthy there.

    tau <= 0.5 is low_t_valid, tau >= 2 is high_t_valid, anything between is
    crossover. Both expansions stay within 1e-5 of the exact sum inside their
    labelled regions.
    """
    t = tau(point)
    if t <= LOW_T_THRESHOLD:
        label = Regime.LOW_T_VALID
    elif t >= HIGH_T_THRESHOLD:
        label = Regime.HIGH_T_VALID
    else:
        label = Regime.CROSSOVER
    return RegimeClass(t, label)


def evaluate(model: Model, point: QueryPoint, policy: SummationPolicy = DEFAULT_POLICY) -> tuple[EnergyResult, PressureResult]:
    """Energy and pressure of a single model at one point."""
    model = Model(model)
    l, T = point.separation, point.temperature
    if model is Model.EXACT:
        return exact_energy(point, policy), exact_pressure(point, policy)
    if model is Model.LOW_T:
        return low_t_energy(point), low_t_pressure(point)
    if model is Model.HIGH_T:
        return high_t_energy(point), high_t_pressure(point)
    if model is Model.CASIMIR_ZERO_T:
        return (
            EnergyResult(casimir_energy(l), Model.CASIMIR_ZERO_T),
            PressureResult(casimir_pressure(l), Model.CASIMIR_ZERO_T),
        )
    return corrected_casimir_energy(l, T), corrected_casimir_pressure(l, T)


@dataclass(frozen=True)
class ModelComparison:
    point: QueryPoint
    exact: float
    low_t: float
    high_t: float
    casimir: float
    rel_dev_low_t: float
    rel_dev_high_t: float
    rel_dev_casimir: float


def compare_models(point: QueryPoint, policy: SummationPolicy = DEFAULT_POLICY) -> ModelComparison:
    """Evaluate every ideal-conductor model and its deviation from the exact sum."""
    t = tau(point)
    if t < policy.tau_floor:
        raise DomainError(f"tau={t:.4g} is below the summation floor {policy.tau_floor:g}")
    exact = exact_energy(point, policy).value
    low = low_t_energy(point).value
    high = high_t_energy(point).value
    cas = casimir_energy(point.separation)

    def dev(v):
        return abs(v - exact) / abs(exact)

    return ModelComparison(point, exact, low, high, cas, dev(low), dev(high), dev(cas))


def _deviation_gap(log_l, temperature, policy):
    c = compare_models(QueryPoint(math.exp(log_l), temperature), policy)
    return c.rel_dev_low_t - c.rel_dev_high_t


def crossover_separation(temperature: float, policy: SummationPolicy = DEFAULT_POLICY) -> float:
    """Separation (m) where both expansions are equally far from the exact sum.

    Bisection in log l over the bracket tau in [0.3, 3].

    Raises
    ------
    SolverError
        If the deviation difference has no sign change in the bracket.
    """
    if not temperature > 0.0:
        raise DomainError("crossover_separation needs T > 0")
    scale = CONSTANTS.hbar_c / (2.0 * CONSTANTS.boltzmann * temperature)
    lo, hi = (math.log(t * scale) for t in CROSSOVER_TAU_BRACKET)
    f = partial(_deviation_gap, temperature=temperature, policy=policy)
    f_lo, f_hi = f(lo), f(hi)
    if f_lo * f_hi > 0.0:
        raise SolverError(
            f"no sign change of rel_dev_low_t - rel_dev_high_t in tau {CROSSOVER_TAU_BRACKET} "
            f"({f_lo:.3g}, {f_hi:.3g})"
        )
    try:
        root = bisect(f, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
    except (RuntimeError, ValueError) as exc:
        raise SolverError(str(exc)) from exc
    return math.exp(root)


@dataclass(frozen=True)
class SweepSpec:
    l_start: float
    l_stop: float
    l_steps: int
    temperature: float
    scale: str = "linear"
    models: tuple = (Model.EXACT,)
    include_correction: bool = False

    def __post_init__(self):
        if not 0.0 < self.l_start < self.l_stop:
            raise InputError(f"need 0 < l_start < l_stop, got {self.l_start}, {self.l_stop}")
        if self.l_steps < 2:
            raise InputError(f"l_steps must be >= 2, got {self.l_steps}")
        if self.scale not in ("linear", "log"):
            raise InputError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if not (self.temperature >= 0.0 and math.isfinite(self.temperature)):
            raise InputError(f"temperature must be finite and >= 0, got {self.temperature}")
        object.__setattr__(self, "models", tuple(Model(m) for m in self.models))


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep.

    Failures are captured in ``errors`` (keyed by what failed) so that one bad
    point never aborts the sweep.
    """

    index: int
    point: QueryPoint
    tau: float
    evaluations: dict = field(default_factory=dict)  # Model -> (EnergyResult, PressureResult)
    comparison: ModelComparison | None = None
    correction_factor: float | None = None
    errors: dict = field(default_factory=dict)  # what failed -> message


def sweep_grid(spec: SweepSpec) -> np.ndarray:
    if spec.scale == "log":
        return np.geomspace(spec.l_start, spec.l_stop, spec.l_steps)
    return np.linspace(spec.l_start, spec.l_stop, spec.l_steps)


def _sweep_row(index, separation, spec, policy):
    point = QueryPoint(float(separation), spec.temperature)
    evaluations, errors = {}, {}
    for model in spec.models:
        try:
            evaluations[model] = evaluate(model, point, policy)
        except CasimirError as exc:
            errors[model.value] = str(exc)
    comparison = None
    try:
        comparison = compare_models(point, policy)
    except CasimirError as exc:
        errors["comparison"] = str(exc)
    factor = None
    if spec.include_correction:
        try:
            factor = correction_factor(point.separation, point.temperature)
        except CasimirError as exc:
            errors["correction"] = str(exc)
    return SweepRow(index, point, tau(point), evaluations, comparison, factor, errors)


def iter_sweep(spec: SweepSpec, policy: SummationPolicy = DEFAULT_POLICY) -> Iterator[SweepRow]:
    """Lazily evaluate the sweep grid in order."""
    for i, l in enumerate(sweep_grid(spec)):
        yield _sweep_row(i, l, spec, policy)


def sweep(spec: SweepSpec, policy: SummationPolicy = DEFAULT_POLICY, max_workers: int | None = None) -> list[SweepRow]:
    """Evaluate the whole grid.

    With ``max_workers`` > 1 rows are computed in worker processes; the
    result is still ordered by grid index and identical to the serial run.
    """
    if not max_workers or max_workers <= 1:
        return list(iter_sweep(spec, policy))
    grid = sweep_grid(spec)
    worker = partial(_sweep_row, spec=spec, policy=policy)
    with ProcessPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(worker, range(len(grid)), grid))
