"""Command-line interface.

Examples
--------
    thermal-casimir energy --separation 300nm --temperature 300K --model exact
    thermal-casimir terms --separation 800nm --temperature 300K
    thermal-casimir sweep --l-start 300nm --l-stop 800nm --steps 6 \\
        --temperature 300K --with-correction --format json

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 2 invalid
input or units, 3 gold correction outside the table, 4 convergence or solver
failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields

from .analysis import SweepSpec, classify_regime, compare_models, evaluate, iter_sweep
from .asymptotics import low_t_terms
from .constants import QueryPoint, parse_quantity, tau
from .errors import ConvergenceError, DomainError, InputError, SolverError, TableRangeError
from .exact import SummationPolicy
from .gold import correction_factor
from .results import Model

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RANGE = 3
EXIT_NUMERIC = 4

MODEL_NAMES = {
    "exact": Model.EXACT,
    "low-t": Model.LOW_T,
    "high-t": Model.HIGH_T,
    "casimir": Model.CASIMIR_ZERO_T,
    "gold": Model.GOLD_CORRECTED,
}


@dataclass(frozen=True)
class OutputRecord:
    separation_m: float
    temperature_K: float
    tau: float
    model: str
    energy_J_per_m2: float
    pressure_Pa: float
    correction_factor: float | None
    truncation_error: float


OUTPUT_FIELDS = tuple(f.name for f in fields(OutputRecord))


def format_real(x: float) -> str:
    return format(x, ".17g")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return format_real(value)
    return str(value)


def _json_object(row: dict) -> str:
    # reals written with the same 17-digit text as the CSV; None keys omitted
    parts = []
    for key, value in row.items():
        if value is None:
            continue
        text = format_real(value) if isinstance(value, float) else json.dumps(value)
        parts.append(f"{json.dumps(key)}: {text}")
    return "{" + ", ".join(parts) + "}"


class _Writer:
    """Streams rows as CSV (header first) or as a JSON array."""

    def __init__(self, stream, fmt, header):
        self.stream, self.fmt, self.header = stream, fmt, header
        self.count = 0

    def write(self, row: dict):
        if self.fmt == "csv":
            if self.count == 0:
                self.stream.write(",".join(self.header) + "\n")
            self.stream.write(",".join(_cell(row[k]) for k in self.header) + "\n")
        else:
            self.stream.write(("[\n" if self.count == 0 else ",\n") + _json_object(row))
        self.count += 1

    def close(self):
        if self.fmt == "csv":
            if self.count == 0:
                self.stream.write(",".join(self.header) + "\n")
        else:
            self.stream.write("[\n]\n" if self.count == 0 else "\n]\n")
        self.stream.flush()


def _length(text):
    try:
        return parse_quantity(text, default_unit="m").meters()
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _temperature(text):
    try:
        value = parse_quantity(text, default_unit="K").kelvin()
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value < 0.0:
        raise argparse.ArgumentTypeError(f"temperature must be >= 0 K, got {text!r}")
    return value


def _model_list(text):
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [n for n in names if n not in MODEL_NAMES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown model(s) {unknown or text!r}; choose from {', '.join(MODEL_NAMES)}"
        )
    return tuple(MODEL_NAMES[n] for n in names)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--rtol", type=float, default=1e-12, help="relative tolerance of the Matsubara sum")
    common.add_argument("--max-terms", type=int, default=1_000_000, help="Matsubara term budget")

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--separation", type=_length, required=True, help="e.g. 300nm, 0.8um, 3e-7m")
    point.add_argument("--temperature", type=_temperature, required=True, help="e.g. 300K")

    parser = argparse.ArgumentParser(
        prog="thermal-casimir",
        description="Finite-temperature Casimir free energy and pressure between ideal-conductor plates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("energy", "pressure"):
        p = sub.add_parser(name, parents=[common, point], help=f"{name} of one model at one point")
        p.add_argument("--model", choices=tuple(MODEL_NAMES), default="exact")
    sub.add_parser("terms", parents=[common, point], help="low-temperature term breakdown and ratios")
    sub.add_parser("regime", parents=[common, point], help="tau and regime label")
    sub.add_parser("correction", parents=[common, point], help="gold correction factor")
    sub.add_parser("compare", parents=[common, point], help="all models against the exact sum")

    p = sub.add_parser("sweep", parents=[common], help="evaluate models over a separation grid")
    p.add_argument("--l-start", type=_length, required=True)
    p.add_argument("--l-stop", type=_length, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--scale", choices=("linear", "log"), default="linear")
    p.add_argument("--temperature", type=_temperature, required=True)
    p.add_argument("--models", type=_model_list, default=(Model.EXACT,), help="comma-separated, default exact")
    p.add_argument("--with-correction", action="store_true", help="fill the correction_factor column")
    return parser


def _record(point, model, energy, pressure, factor, error_of="energy"):
    truncation = pressure.truncation_error if error_of == "pressure" else energy.truncation_error
    return OutputRecord(
        separation_m=point.separation,
        temperature_K=point.temperature,
        tau=tau(point),
        model=model.value,
        energy_J_per_m2=energy.value,
        pressure_Pa=pressure.value,
        correction_factor=factor,
        truncation_error=truncation,
    )


def _single(args, policy):
    """Rows for the one-point subcommands."""
    point = QueryPoint(args.separation, args.temperature)
    if args.command in ("energy", "pressure"):
        model = MODEL_NAMES[args.model]
        energy, pressure = evaluate(model, point, policy)
        factor = correction_factor(point.separation, point.temperature) if model is Model.GOLD_CORRECTED else None
        return OUTPUT_FIELDS, [vars(_record(point, model, energy, pressure, factor, args.command))]
    base = {"separation_m": point.separation, "temperature_K": point.temperature}
    if args.command == "terms":
        t = low_t_terms(point)
        row = dict(
            base,
            tau=tau(point),
            casimir_term=t.casimir_term,
            pair_term=t.pair_term,
            blackbody_term=t.blackbody_term,
            exponential_term=t.exponential_term,
            ratio_2_to_1=t.ratio_2_to_1,
            ratio_3_to_1=t.ratio_3_to_1,
            ratio_4_to_1=t.ratio_4_to_1,
        )
    elif args.command == "regime":
        r = classify_regime(point)
        row = dict(base, tau=r.tau_value, label=r.label.value)
    elif args.command == "correction":
        row = dict(base, correction_factor=correction_factor(point.separation, point.temperature))
    else:
        c = compare_models(point, policy)
        row = dict(base, tau=tau(point))
        row.update({f.name: getattr(c, f.name) for f in fields(c) if f.name != "point"})
    return tuple(row), [row]


def _run_sweep(args, policy, out, err):
    spec = SweepSpec(
        l_start=args.l_start,
        l_stop=args.l_stop,
        l_steps=args.steps,
        temperature=args.temperature,
        scale=args.scale,
        models=args.models,
        include_correction=args.with_correction,
    )
    writer = _Writer(out, args.format, OUTPUT_FIELDS)
    for row in iter_sweep(spec, policy):
        for key, message in row.errors.items():
            if key != "comparison":
                err.write(f"warning: row {row.index} ({key}): {message}\n")
        for model in spec.models:
            if model not in row.evaluations:
                continue
            energy, pressure = row.evaluations[model]
            factor = row.correction_factor
            if model is Model.GOLD_CORRECTED and factor is None:
                factor = correction_factor(row.point.separation, row.point.temperature)
            writer.write(vars(_record(row.point, model, energy, pressure, factor)))
    writer.close()


def run(argv=None, out=None, err=None) -> int:
    """Entry point; returns the process exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        policy = SummationPolicy(relative_tolerance=args.rtol, max_matsubara_terms=args.max_terms)
        if args.command == "sweep":
            _run_sweep(args, policy, out, err)
        else:
            header, rows = _single(args, policy)
            writer = _Writer(out, args.format, header)
            for row in rows:
                writer.write(row)
            writer.close()
    except TableRangeError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_RANGE
    except (InputError, DomainError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (ConvergenceError, SolverError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERIC
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
