"""Command-line front end.

Subcommands
    sweep        evaluate E_N / discord along one swept variable
    preset       run one of the bundled figure presets (fig2..fig8)
    thresholds   print the analytic separability boundaries
    validate     seeded cross-validation of every internal invariant

All data output is CSV (stdout by default, ``--out`` for a file) and is
byte-stable for identical inputs.  ``--plot DIR`` additionally renders
the rows as PNG figures next to the delimited output.  Exit codes:
0 success, 1 usage error, 2 validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constants import DEFAULT_OMEGA_M
from .covariance import Subsystem
from .sweep import (
    CSV_HEADER,
    FIGURE_PRESETS,
    MEASURES,
    THRESHOLD_HEADER,
    VALIDATE_HEADER,
    SweepSpec,
    preset_specs,
    run_preset,
    run_sweep,
    threshold_table,
    validate,
    write_csv,
)

#: CLI spellings of the swept variable -> SweepSpec.var
_SWEEP_NAMES = {"temp": "T", "nth": "n_th", "beta": "beta", "r": "r"}

_FIXED_DEFAULTS = {"alpha": 0.05, "beta": 34.0, "r": 0.0, "nth": 0.0}


class _Parser(argparse.ArgumentParser):
    """argparse, but with usage errors mapped to exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"invalid boolean {text!r}")


def _parse_subsystems(text: str) -> tuple[Subsystem, ...]:
    return tuple(Subsystem.from_name(part) for part in text.split(","))


def _parse_measures(text: str) -> tuple[str, ...]:
    parts = tuple(part.strip() for part in text.split(","))
    for part in parts:
        if part not in MEASURES:
            raise ValueError(
                f"unknown measure {part!r}; expected one of {', '.join(MEASURES)}"
            )
    return parts


#: Every config-file key with its parser; flags override config values.
_CONFIG_PARSERS = {
    "sweep": str,
    "start": float,
    "stop": float,
    "grid": int,
    "log": _parse_bool,
    "alpha": float,
    "beta": float,
    "r": float,
    "nth": float,
    "temp_kelvin": float,
    "omega_m": float,
    "subsystems": _parse_subsystems,
    "measures": _parse_measures,
    "out": str,
    "plot": str,
    "seed": int,
    "trials": int,
    "inject_corruption": float,
}


def _load_config(path: str) -> dict:
    """Parse a ``key = value`` config file (hash comments, blank lines ok)."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, text = line.partition("=")
        key = key.strip().replace("-", "_")
        if key not in _CONFIG_PARSERS:
            raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = _CONFIG_PARSERS[key](text.strip())
    return values


def _add_common(parser: argparse.ArgumentParser, *, thermal: bool = True) -> None:
    parser.add_argument("--alpha", type=float, help="damping ratio gamma/kappa")
    parser.add_argument("--beta", type=float, help="optomechanical cooperativity")
    parser.add_argument("--r", type=float, help="squeezing parameter of the input light")
    if thermal:
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--nth", type=float, help="mean thermal phonon number")
        group.add_argument("--temp-kelvin", type=float,
                           help="bath temperature in K (alternative to --nth)")
    parser.add_argument("--omega-m", type=float,
                        help=f"mechanical frequency in rad/s for T <-> n_th "
                             f"(default {DEFAULT_OMEGA_M:.6g})")
    parser.add_argument("--out", help="output CSV path (default: stdout)")
    parser.add_argument("--config", help="key = value file; flags take precedence")


def build_parser() -> _Parser:
    parser = _Parser(prog="optocorr",
                     description="steady-state quantum correlations of two "
                                 "squeezed-light-driven optomechanical cavities")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_sweep = sub.add_parser("sweep", help="sweep one variable, emit CSV rows")
    p_sweep.add_argument("--sweep", choices=sorted(_SWEEP_NAMES), required=True,
                         help="variable to sweep")
    p_sweep.add_argument("--start", type=float, help="first grid value")
    p_sweep.add_argument("--stop", type=float, help="last grid value")
    p_sweep.add_argument("--grid", type=int, help="number of grid points (default 101)")
    scale = p_sweep.add_mutually_exclusive_group()
    scale.add_argument("--log", dest="log_scale", action="store_const", const=True,
                       help="logarithmic grid")
    scale.add_argument("--linear", dest="log_scale", action="store_const", const=False,
                       help="linear grid (default)")
    p_sweep.add_argument("--subsystems", type=_parse_subsystems,
                         help="comma list from mm,oo,hl,hc (default: all)")
    p_sweep.add_argument("--measures", type=_parse_measures,
                         help="comma list from en,discord (default: both)")
    p_sweep.add_argument("--plot", help="directory for rendered PNG figures")
    _add_common(p_sweep)

    p_preset = sub.add_parser("preset", help="run a bundled figure preset")
    p_preset.add_argument("name", choices=sorted(FIGURE_PRESETS),
                          help="preset to reproduce")
    p_preset.add_argument("--grid", type=int, help="override the preset grid size")
    p_preset.add_argument("--plot", help="directory for rendered PNG figures")
    p_preset.add_argument("--out", help="output CSV path (default: stdout)")
    p_preset.add_argument("--config", help="key = value file; flags take precedence")

    p_thresh = sub.add_parser("thresholds", help="analytic separability boundaries")
    _add_common(p_thresh)

    p_val = sub.add_parser("validate", help="seeded oracle and invariant checks")
    p_val.add_argument("--trials", type=int, help="number of random draws (default 50)")
    p_val.add_argument("--seed", type=int, help="RNG seed (default 42)")
    p_val.add_argument("--inject-corruption", type=float,
                       help="testing hook: offset one covariance entry on trial 0 "
                            "(a nonzero value must make the run fail)")
    p_val.add_argument("--out", help="output CSV path (default: stdout)")
    p_val.add_argument("--config", help="key = value file; flags take precedence")
    return parser


def _resolve(args: argparse.Namespace, defaults: dict) -> None:
    """Fill unset flags from the config file, then from hard defaults."""
    config = _load_config(args.config) if getattr(args, "config", None) else {}
    for key, value in config.items():
        if getattr(args, key, None) is None and hasattr(args, key):
            setattr(args, key, value)
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _emit(rows: list[dict], header: tuple[str, ...], out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as stream:
            write_csv(rows, header, stream)
    else:
        write_csv(rows, header, sys.stdout)


def _cmd_sweep(args: argparse.Namespace) -> int:
    _resolve(args, {
        "start": 0.0, "stop": 0.0, "grid": 101, "log_scale": False,
        "omega_m": DEFAULT_OMEGA_M, "measures": MEASURES,
        "subsystems": tuple(Subsystem), **_FIXED_DEFAULTS,
    })
    spec = SweepSpec(
        var=_SWEEP_NAMES[args.sweep],
        start=args.start,
        stop=args.stop,
        num=args.grid,
        log=args.log_scale,
        alpha=args.alpha,
        beta=args.beta,
        r=args.r,
        n_th=args.nth,
        temp_kelvin=args.temp_kelvin,
        omega_m=args.omega_m,
        subsystems=args.subsystems,
        measures=args.measures,
    )
    rows = run_sweep(spec)
    _emit(rows, CSV_HEADER, args.out)
    if args.plot:
        from . import plots

        plots.save_sweep_figure(rows, Path(args.plot), log_x=spec.log)
    return 0


def _cmd_preset(args: argparse.Namespace) -> int:
    _resolve(args, {})
    rows = run_preset(args.name, num=args.grid)
    _emit(rows, CSV_HEADER, args.out)
    if args.plot:
        from . import plots

        preset = preset_specs(args.name, num=args.grid)
        plots.save_preset_figure(
            args.name, rows, Path(args.plot),
            measure=preset.plot_measure,
            series_param=preset.series_param,
            log_x=preset.specs[0].log,
        )
    return 0


def _cmd_thresholds(args: argparse.Namespace) -> int:
    _resolve(args, {"omega_m": DEFAULT_OMEGA_M, "r": 1.0,
                    "alpha": _FIXED_DEFAULTS["alpha"],
                    "beta": _FIXED_DEFAULTS["beta"],
                    "nth": _FIXED_DEFAULTS["nth"]})
    if args.temp_kelvin is not None:
        from .reduction import mean_thermal_occupation

        args.nth = mean_thermal_occupation(args.omega_m, args.temp_kelvin)
    rows = threshold_table(args.alpha, args.beta, args.r, args.nth, args.omega_m)
    _emit(rows, THRESHOLD_HEADER, args.out)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    _resolve(args, {"trials": 50, "seed": 42, "inject_corruption": 0.0})
    rows, ok = validate(args.trials, args.seed, corrupt=args.inject_corruption)
    _emit(rows, VALIDATE_HEADER, args.out)
    failed = sum(1 for row in rows if row["status"] == "fail")
    print(
        f"validate: {args.trials} trials, {len(rows)} checks, "
        f"{failed} failed (seed={args.seed})",
        file=sys.stderr,
    )
    return 0 if ok else 2


_COMMANDS = {
    "sweep": _cmd_sweep,
    "preset": _cmd_preset,
    "thresholds": _cmd_thresholds,
    "validate": _cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"optocorr: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
