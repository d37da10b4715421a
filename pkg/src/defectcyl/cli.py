"""Command-line front end emitting deterministic CSV or JSON tables.

Subcommands: bound-states, bessel-zero, spectrum, critical-radius,
compare-approx, eval-bessel. Options can also come from a flat JSON config
file (keys matching the long flag names); explicit flags win. Exit status is
0 on success, 1 on a computational failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .model import EnergyLevel, PhysicalParams, QuantumNumbers, validate
from .specfun import ZeroApproxMode, bessel_j, bessel_zero, zero_approx_table
from .spectrum import (
    ReferenceState,
    classify,
    critical_radius,
    level_state,
    spectrum_table,
)
from .wells import excited_state, ground_state

COMMANDS = (
    "bound-states",
    "bessel-zero",
    "spectrum",
    "critical-radius",
    "compare-approx",
    "eval-bessel",
)

_PARAM_KEYS = ("mass", "coupling", "z0", "deficit", "radius", "hbar")

# Option keys accepted per command, used both for flag registration and for
# rejecting unknown config-file keys.
_COMMAND_KEYS = {
    "bound-states": (),
    "bessel-zero": ("nu", "m", "mode"),
    "spectrum": ("n-max", "m-max", "mode", "ref-n", "ref-m"),
    "critical-radius": ("n", "m", "level"),
    "compare-approx": ("nu-max", "m-max", "nu-step"),
    "eval-bessel": ("nu", "q"),
}

_OUTPUT_KEYS = ("output", "out")

_DEFAULTS: dict[str, Any] = {
    "mass": 0.5,
    "coupling": 1.0,
    "z0": 1.0,
    "deficit": 1.0,
    "radius": 5.0,
    "hbar": 1.0,
    "mode": "exact",
    "level": "ground",
    "nu-max": 6.0,
    "nu-step": 0.5,
    "m-max": 10,  # compare-approx only; spectrum requires m-max explicitly
    "output": "csv",
    "out": None,
}

_REQUIRED = {
    "bessel-zero": ("nu", "m"),
    "eval-bessel": ("nu", "q"),
    "critical-radius": ("n", "m"),
    "spectrum": ("n-max", "m-max"),
}

_INT_KEYS = {"n", "m", "n-max", "m-max", "ref-n", "ref-m"}
_FLOAT_KEYS = {"mass", "coupling", "z0", "deficit", "radius", "hbar", "nu", "q", "nu-max", "nu-step"}


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved invocation: command, physics parameters and options."""

    command: str
    params: PhysicalParams
    output_format: str
    output_path: Optional[str]
    mode: ZeroApproxMode
    level: EnergyLevel
    n: Optional[int] = None
    m: Optional[int] = None
    n_max: Optional[int] = None
    m_max: Optional[int] = None
    nu: Optional[float] = None
    q: Optional[float] = None
    nu_max: Optional[float] = None
    nu_step: Optional[float] = None
    ref_n: Optional[int] = None
    ref_m: Optional[int] = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="defectcyl",
        description=(
            "Discrete spectrum of a particle trapped in a cylinder with a "
            "conical defect and twin attractive delta wells."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    help_by_command = {
        "bound-states": "solve the two axial delta-well levels",
        "bessel-zero": "one zero of J_nu, exact or closed-form",
        "spectrum": "joint (n, m, level) energy table",
        "critical-radius": "radius at which a state's total energy vanishes",
        "compare-approx": "closed-form zero estimate audited against exact zeros",
        "eval-bessel": "evaluate J_nu(q)",
    }

    for command in COMMANDS:
        sp = sub.add_parser(command, help=help_by_command[command])
        for key in _PARAM_KEYS:
            sp.add_argument(f"--{key}", type=float, default=None)
        sp.add_argument("--config", default=None, help="flat JSON config file")
        sp.add_argument("--output", choices=("csv", "json"), default=None)
        sp.add_argument("--out", default=None, help="output file (default: stdout)")
        for key in _COMMAND_KEYS[command]:
            if key in _INT_KEYS:
                sp.add_argument(f"--{key}", type=int, default=None)
            elif key == "mode":
                sp.add_argument("--mode", choices=[m.value for m in ZeroApproxMode], default=None)
            elif key == "level":
                sp.add_argument("--level", choices=[l.value for l in EnergyLevel], default=None)
            else:
                sp.add_argument(f"--{key}", type=float, default=None)
    return parser


def _load_config_file(parser: argparse.ArgumentParser, path: str, command: str) -> dict[str, Any]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read config file {path}: {exc}")
    if not isinstance(raw, dict):
        parser.error(f"config file {path} must hold a flat JSON object")
    allowed = set(_PARAM_KEYS) | set(_COMMAND_KEYS[command]) | set(_OUTPUT_KEYS)
    for key in raw:
        if key not in allowed:
            parser.error(f"unknown config key '{key}' for command {command}")
    return raw


def _coerce(parser: argparse.ArgumentParser, key: str, value: Any) -> Any:
    if value is None:
        return None
    try:
        if key in _INT_KEYS:
            if isinstance(value, float) and not value.is_integer():
                raise ValueError
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
    except (TypeError, ValueError):
        parser.error(f"{key} must be a number")
    return value


def parse_config(argv: list[str]) -> RunConfig:
    """Resolve argv plus optional config file into a validated RunConfig.

    Precedence: explicit flags, then config-file values, then defaults.
    Any violation exits with usage status 2.
    """
    parser = _build_parser()
    ns = parser.parse_args(argv)
    command = ns.command

    file_values: dict[str, Any] = {}
    if ns.config is not None:
        file_values = _load_config_file(parser, ns.config, command)

    keys = set(_PARAM_KEYS) | set(_COMMAND_KEYS[command]) | set(_OUTPUT_KEYS)
    merged: dict[str, Any] = {}
    for key in keys:
        flag_value = getattr(ns, key.replace("-", "_"))
        if flag_value is not None:
            merged[key] = flag_value
        elif key in file_values:
            merged[key] = _coerce(parser, key, file_values[key])
        else:
            merged[key] = _DEFAULTS.get(key)

    for key in _REQUIRED.get(command, ()):
        if merged.get(key) is None:
            parser.error(f"--{key} is required for {command}")

    params = PhysicalParams(
        mass=merged["mass"],
        coupling=merged["coupling"],
        half_separation=merged["z0"],
        deficit=merged["deficit"],
        radius=merged["radius"],
        hbar=merged["hbar"],
    )
    try:
        validate(params)
    except ValueError as exc:
        parser.error(str(exc))

    def _nonneg_int(key: str) -> Optional[int]:
        value = merged.get(key)
        if value is None:
            return None
        if not isinstance(value, int) or value < 0:
            parser.error(f"{key} must be a non-negative integer")
        return value

    def _nonneg_float(key: str) -> Optional[float]:
        value = merged.get(key)
        if value is None:
            return None
        if not (value >= 0) or not math.isfinite(value):
            parser.error(f"{key} must be >= 0")
        return value

    nu_step = merged.get("nu-step")
    if nu_step is not None and not (nu_step > 0):
        parser.error("nu-step must be > 0")

    mode_value = merged.get("mode") or _DEFAULTS["mode"]
    try:
        mode = ZeroApproxMode(mode_value)
    except ValueError:
        parser.error(f"mode must be one of {[m.value for m in ZeroApproxMode]}")
    level_value = merged.get("level") or _DEFAULTS["level"]
    try:
        level = EnergyLevel(level_value)
    except ValueError:
        parser.error(f"level must be one of {[l.value for l in EnergyLevel]}")

    output_format = merged.get("output") or _DEFAULTS["output"]
    if output_format not in ("csv", "json"):
        parser.error("output must be csv or json")

    ref_n = _nonneg_int("ref-n")
    ref_m = _nonneg_int("ref-m")
    if (ref_n is None) != (ref_m is None):
        parser.error("ref-n and ref-m must be given together")

    return RunConfig(
        command=command,
        params=params,
        output_format=output_format,
        output_path=merged.get("out"),
        mode=mode,
        level=level,
        n=_nonneg_int("n"),
        m=_nonneg_int("m"),
        n_max=_nonneg_int("n-max"),
        m_max=_nonneg_int("m-max"),
        nu=_nonneg_float("nu"),
        q=_nonneg_float("q"),
        nu_max=_nonneg_float("nu-max"),
        nu_step=nu_step,
        ref_n=ref_n,
        ref_m=ref_m,
    )


def _config_echo(config: RunConfig) -> dict[str, Any]:
    echo: dict[str, Any] = {
        "command": config.command,
        "mass": config.params.mass,
        "coupling": config.params.coupling,
        "z0": config.params.half_separation,
        "deficit": config.params.deficit,
        "radius": config.params.radius,
        "hbar": config.params.hbar,
        "output": config.output_format,
    }
    for key in ("n", "m", "n_max", "m_max", "nu", "q", "nu_max", "nu_step", "ref_n", "ref_m"):
        value = getattr(config, key)
        if value is not None:
            echo[key.replace("_", "-")] = value
    if config.command in ("bessel-zero", "spectrum"):
        echo["mode"] = config.mode.value
    if config.command == "critical-radius":
        echo["level"] = config.level.value
    return echo


def _state_row(state) -> dict[str, Any]:
    return {
        "level": state.level.value,
        "energy": state.energy,
        "xi": state.xi,
        "h_factor": state.h_factor,
    }


def _command_output(config: RunConfig) -> tuple[list[str], list[dict[str, Any]], Optional[dict[str, Any]]]:
    """Returns (columns, rows, json_extra). json_extra replaces "rows" if set."""
    p = config.params
    if config.command == "bound-states":
        ground = _state_row(ground_state(p))
        excited = excited_state(p)
        rows = [ground]
        extra: dict[str, Any] = {"ground": ground, "excited": None}
        if excited is not None:
            row = _state_row(excited)
            rows.append(row)
            extra["excited"] = row
        return ["level", "energy", "xi", "h_factor"], rows, extra

    if config.command == "bessel-zero":
        zero = bessel_zero(config.nu, config.m, config.mode)
        row = {"nu": config.nu, "m": config.m, "mode": config.mode.value, "zero": zero}
        return ["nu", "m", "mode", "zero"], [row], None

    if config.command == "eval-bessel":
        ev = bessel_j(config.nu, config.q)
        row = {
            "nu": config.nu,
            "q": config.q,
            "value": ev.value,
            "method": ev.method.value,
            "term_count": ev.term_count,
        }
        return ["nu", "q", "value", "method", "term_count"], [row], None

    if config.command == "critical-radius":
        qn = QuantumNumbers(config.n, config.m)
        state = level_state(p, config.level)
        row = {
            "n": qn.n,
            "m": qn.m,
            "level": config.level.value,
            "h_factor": state.h_factor,
            "critical_radius": critical_radius(p, qn, config.level),
        }
        return ["n", "m", "level", "h_factor", "critical_radius"], [row], None

    if config.command == "compare-approx":
        table = zero_approx_table(config.nu_max, config.m_max, config.nu_step)
        rows = [
            {"nu": nu, "m": m, "exact": exact, "mcmahon": approx, "rel_error": rel}
            for nu, m, exact, approx, rel in table
        ]
        return ["nu", "m", "exact", "mcmahon", "rel_error"], rows, None

    # spectrum
    reference = None
    if config.ref_n is not None:
        reference = ReferenceState(QuantumNumbers(config.ref_n, config.ref_m))
    columns = ["n", "m", "level", "nu", "radial_energy", "z_energy", "total_energy", "classification", "mode"]
    if reference is not None:
        columns.append("reference_class")
    rows = []
    for entry in spectrum_table(p, config.n_max, config.m_max, config.mode):
        row = {
            "n": entry.qn.n,
            "m": entry.qn.m,
            "level": entry.level.value,
            "nu": entry.nu,
            "radial_energy": entry.radial_energy,
            "z_energy": entry.z_energy,
            "total_energy": entry.total_energy,
            "classification": entry.classification.value,
            "mode": entry.mode.value,
        }
        if reference is not None:
            row["reference_class"] = classify(p, reference, entry.qn, entry.level).value
        rows.append(row)
    return columns, rows, None


def _render_csv(columns: list[str], rows: list[dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])
    return buffer.getvalue()


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_json(config: RunConfig, rows: list[dict[str, Any]], extra: Optional[dict[str, Any]]) -> str:
    payload: dict[str, Any] = {"config": _config_echo(config)}
    if extra is not None:
        payload.update(extra)
    else:
        payload["rows"] = rows
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def run(config: RunConfig) -> int:
    """Execute one resolved invocation and write its table or record."""
    columns, rows, extra = _command_output(config)
    if config.output_format == "csv":
        text = _render_csv(columns, rows)
    else:
        text = _render_json(config, rows, extra)
    if config.output_path is not None:
        Path(config.output_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    config = parse_config(sys.argv[1:] if argv is None else argv)
    try:
        return run(config)
    except (ValueError, RuntimeError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
