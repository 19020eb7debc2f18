"""Parameter sweeps, figure presets, threshold tables and validation runs.

Everything here produces lists of plain row dicts in a fixed long-format
CSV schema, so the same machinery feeds files, stdout and the optional
figure rendering.  Output is byte-stable for identical inputs: rows are
emitted in grid order and all numbers are formatted with 12 significant
digits.

The ``T_kelvin`` column is only populated when temperature was an input
(a temperature sweep or an explicit fixed temperature); when the thermal
state is specified through ``n_th`` directly, the column stays empty
rather than echoing a conversion the caller never asked for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, TextIO

import numpy as np

from .constants import DEFAULT_OMEGA_M
from .covariance import (
    Subsystem,
    extract_subsystem,
    global_covariance,
    symplectic_eigenvalues,
)
from .lyapunov import (
    OFF_PATTERN_LIMIT,
    REL_DEV_LIMIT,
    RESIDUAL_LIMIT,
    oracle_compare,
)
from .measures import (
    closed_form_eta_mm,
    closed_form_eta_oo,
    gaussian_discord,
    log_negativity,
    pt_min_symplectic,
)
from .reduction import ReducedParams, mean_thermal_occupation
from .thresholds import beta0_mechanical, beta0_optical, t0_mechanical, t0_optical

CSV_HEADER = (
    "preset", "subsystem", "sweep_name", "sweep_value",
    "alpha", "beta", "r", "n_th", "T_kelvin", "E_N", "D",
)
THRESHOLD_HEADER = (
    "quantity", "subsystem", "alpha", "beta", "r", "n_th", "omega_m",
    "value", "attainable",
)
VALIDATE_HEADER = (
    "check", "trial", "subsystem", "alpha", "beta", "r", "n_th",
    "value", "bound", "status",
)

#: Swept variable -> name recorded in the sweep_name column.
SWEEP_VARS = {"T": "T_kelvin", "n_th": "n_th", "beta": "beta", "r": "r"}

MEASURES = ("en", "discord")

ALL_SUBSYSTEMS = (
    Subsystem.MM, Subsystem.OO, Subsystem.HYBRID_LOCAL, Subsystem.HYBRID_CROSS,
)

#: Parameter ranges of the randomized validation grid.
GRID_RANGES = {"alpha": (1e-3, 1.0), "beta": (0.0, 100.0),
               "r": (0.0, 3.0), "n_th": (0.0, 100.0)}

PHYSICALITY_FLOOR = 0.5 - 1e-9
ETA_AGREEMENT_LIMIT = 1e-10
DISCORD_FLOOR = -1e-9
SEPARABLE_DISCORD_CEIL = 1.0 + 1e-9


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a variable, its grid, and the frozen remaining knobs."""

    var: str                 # one of SWEEP_VARS
    start: float
    stop: float
    num: int = 101
    log: bool = False
    alpha: float = 0.05
    beta: float = 34.0
    r: float = 0.0
    n_th: float = 0.0
    temp_kelvin: float | None = None
    omega_m: float = DEFAULT_OMEGA_M
    subsystems: tuple[Subsystem, ...] = ALL_SUBSYSTEMS
    measures: tuple[str, ...] = MEASURES

    def __post_init__(self):
        if self.var not in SWEEP_VARS:
            raise ValueError(
                f"unknown sweep variable {self.var!r}; expected one of "
                f"{', '.join(SWEEP_VARS)}"
            )
        if self.num < 1:
            raise ValueError("grid size must be >= 1")
        if self.log and (self.start <= 0 or self.stop <= 0):
            raise ValueError("log grids need strictly positive bounds")
        if self.start < 0 or self.stop < 0:
            raise ValueError("sweep bounds must be >= 0")
        if self.temp_kelvin is not None and self.var in ("T", "n_th"):
            raise ValueError("fixed temp_kelvin conflicts with sweeping the thermal axis")
        if not self.subsystems:
            raise ValueError("at least one subsystem must be selected")
        for m in self.measures:
            if m not in MEASURES:
                raise ValueError(
                    f"unknown measure {m!r}; expected one of {', '.join(MEASURES)}"
                )
        for s in self.subsystems:
            if not isinstance(s, Subsystem):
                raise ValueError(f"invalid subsystem {s!r}")


def grid_values(spec: SweepSpec) -> np.ndarray:
    if spec.log:
        return np.geomspace(spec.start, spec.stop, spec.num)
    return np.linspace(spec.start, spec.stop, spec.num)


def _point(spec: SweepSpec, value: float) -> tuple[ReducedParams, float | None]:
    """Resolve the reduced knobs and the reported temperature at one grid point."""
    alpha, beta, r = spec.alpha, spec.beta, spec.r
    temp = spec.temp_kelvin
    n_th = (
        mean_thermal_occupation(spec.omega_m, temp) if temp is not None else spec.n_th
    )
    if spec.var == "T":
        temp = value
        n_th = mean_thermal_occupation(spec.omega_m, value)
    elif spec.var == "n_th":
        n_th = value
    elif spec.var == "beta":
        beta = value
    else:
        r = value
    return ReducedParams(alpha=alpha, beta=beta, r=r, n_th=n_th), temp


def run_sweep(spec: SweepSpec, preset: str = "") -> list[dict]:
    """Evaluate the requested measures on every (grid point, subsystem) pair."""
    sweep_name = SWEEP_VARS[spec.var]
    want_en = "en" in spec.measures
    want_d = "discord" in spec.measures
    rows = []
    for value in grid_values(spec):
        params, temp = _point(spec, float(value))
        sigma = global_covariance(params)
        for sub in spec.subsystems:
            cm = extract_subsystem(sigma, sub)
            if want_d:
                metrics = gaussian_discord(cm)
                en = metrics.log_negativity if want_en else None
                d = metrics.discord
            else:
                en = log_negativity(cm) if want_en else None
                d = None
            rows.append({
                "preset": preset,
                "subsystem": sub.value,
                "sweep_name": sweep_name,
                "sweep_value": float(value),
                "alpha": params.alpha,
                "beta": params.beta,
                "r": params.r,
                "n_th": params.n_th,
                "T_kelvin": temp,
                "E_N": en,
                "D": d,
            })
    return rows


@dataclass(frozen=True)
class FigurePreset:
    """A bundle of sweeps reproducing one of the standard parameter regimes."""

    name: str
    specs: tuple[SweepSpec, ...]
    series_param: str    # the knob that distinguishes the bundled sweeps
    plot_measure: str    # column a rendered figure of this preset shows

    def with_grid(self, num: int | None) -> "FigurePreset":
        if num is None:
            return self
        return replace(self, specs=tuple(replace(s, num=num) for s in self.specs))


def _temperature_bundle() -> tuple[SweepSpec, ...]:
    return tuple(
        SweepSpec(var="T", start=1e-6, stop=1e-3, num=121, log=True,
                  alpha=0.05, beta=34.0, r=r,
                  subsystems=(Subsystem.MM, Subsystem.OO))
        for r in (0.0, 0.5, 1.0, 1.5)
    )


def _cooperativity_bundle() -> tuple[SweepSpec, ...]:
    return tuple(
        SweepSpec(var="beta", start=0.0, stop=100.0, num=101,
                  alpha=0.01, r=2.0, n_th=n,
                  subsystems=(Subsystem.MM, Subsystem.OO))
        for n in (1.0, 10.0, 25.0, 60.0)
    )


def _squeezing_bundle() -> tuple[SweepSpec, ...]:
    # The damping-ratio family {0.5, 1, 2} is a documented default choice.
    return tuple(
        SweepSpec(var="r", start=0.0, stop=1.0, num=101,
                  alpha=alpha, beta=1.0, n_th=0.01,
                  subsystems=(Subsystem.HYBRID_CROSS,))
        for alpha in (0.5, 1.0, 2.0)
    )


def _occupation_bundle() -> tuple[SweepSpec, ...]:
    return tuple(
        SweepSpec(var="n_th", start=1e-2, stop=1e6, num=161, log=True,
                  alpha=0.5, beta=10.0, r=r,
                  subsystems=(Subsystem.HYBRID_LOCAL,))
        for r in (0.5, 1.0, 2.0)
    )


FIGURE_PRESETS = {
    "fig2": FigurePreset("fig2", _temperature_bundle(), "r", "E_N"),
    "fig3": FigurePreset("fig3", _cooperativity_bundle(), "n_th", "E_N"),
    "fig4": FigurePreset("fig4", _squeezing_bundle(), "alpha", "E_N"),
    "fig5": FigurePreset("fig5", _temperature_bundle(), "r", "D"),
    "fig6": FigurePreset("fig6", _cooperativity_bundle(), "n_th", "D"),
    "fig7": FigurePreset("fig7", _occupation_bundle(), "r", "D"),
    "fig8": FigurePreset("fig8", _squeezing_bundle(), "alpha", "D"),
}


def preset_specs(name: str, num: int | None = None) -> FigurePreset:
    try:
        preset = FIGURE_PRESETS[name]
    except KeyError:
        valid = ", ".join(sorted(FIGURE_PRESETS))
        raise ValueError(f"unknown preset {name!r}; expected one of {valid}")
    return preset.with_grid(num)


def run_preset(name: str, num: int | None = None) -> list[dict]:
    """Rows of one figure preset: the bundled sweeps, concatenated in order."""
    preset = preset_specs(name, num)
    rows = []
    for spec in preset.specs:
        rows.extend(run_sweep(spec, preset=preset.name))
    return rows


def threshold_table(alpha: float, beta: float, r: float, n_th: float,
                    omega_m: float = DEFAULT_OMEGA_M) -> list[dict]:
    """The four analytic separability boundaries at fixed knobs."""
    entries = (
        ("T0_kelvin", "mm", t0_mechanical(alpha, beta, r, omega_m)),
        ("T0_kelvin", "oo", t0_optical(alpha, beta, r, omega_m)),
        ("beta0", "mm", beta0_mechanical(alpha, r, n_th)),
        ("beta0", "oo", beta0_optical(alpha, r, n_th)),
    )
    return [
        {
            "quantity": quantity,
            "subsystem": sub,
            "alpha": alpha,
            "beta": beta,
            "r": r,
            "n_th": n_th,
            "omega_m": omega_m,
            "value": result.value,
            "attainable": result.attainable,
        }
        for quantity, sub, result in entries
    ]


def _draw_params(rng: np.random.Generator) -> ReducedParams:
    lo_a, hi_a = GRID_RANGES["alpha"]
    lo_b, hi_b = GRID_RANGES["beta"]
    lo_r, hi_r = GRID_RANGES["r"]
    lo_n, hi_n = GRID_RANGES["n_th"]
    return ReducedParams(
        alpha=rng.uniform(lo_a, hi_a),
        beta=rng.uniform(lo_b, hi_b),
        r=rng.uniform(lo_r, hi_r),
        n_th=rng.uniform(lo_n, hi_n),
    )


def validate(trials: int, seed: int, corrupt: float = 0.0) -> tuple[list[dict], bool]:
    """Cross-validation run: oracle agreement plus every structural invariant.

    Draws ``trials`` parameter points from the validation grid with a
    seeded generator, so the run is fully deterministic.  ``corrupt`` is
    a fault-injection hook for negative-control testing: it offsets one
    closed-form covariance entry on trial 0, which must make the run
    fail.  Returns the per-check report rows and the overall verdict.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    rows: list[dict] = []
    all_ok = True

    def record(check, trial, sub, p, value, bound, ok):
        nonlocal all_ok
        all_ok = all_ok and ok
        rows.append({
            "check": check, "trial": trial, "subsystem": sub,
            "alpha": p.alpha, "beta": p.beta, "r": p.r, "n_th": p.n_th,
            "value": value, "bound": bound,
            "status": "pass" if ok else "fail",
        })

    for trial in range(trials):
        p = _draw_params(rng)
        hook = corrupt if trial == 0 else 0.0
        report = oracle_compare(p, corrupt_entry=hook)
        record("oracle_match", trial, "", p,
               report.max_rel_dev, REL_DEV_LIMIT,
               report.max_rel_dev < REL_DEV_LIMIT)
        record("oracle_off_pattern", trial, "", p,
               report.max_off_pattern, OFF_PATTERN_LIMIT,
               report.max_off_pattern < OFF_PATTERN_LIMIT)
        record("lyapunov_residual", trial, "", p,
               report.residual, RESIDUAL_LIMIT, report.residual < RESIDUAL_LIMIT)

        sigma = global_covariance(p)
        min_nu = float(symplectic_eigenvalues(sigma).min())
        record("global_physical", trial, "", p,
               min_nu, PHYSICALITY_FLOOR, min_nu >= PHYSICALITY_FLOOR)

        generic_eta = {}
        for sub in ALL_SUBSYSTEMS:
            cm = extract_subsystem(sigma, sub)
            metrics = gaussian_discord(cm)
            generic_eta[sub] = metrics.eta_minus
            record("subsystem_physical", trial, sub.value, p,
                   metrics.nu_minus, PHYSICALITY_FLOOR,
                   metrics.nu_minus >= PHYSICALITY_FLOOR)
            record("discord_nonnegative", trial, sub.value, p,
                   metrics.discord, DISCORD_FLOOR,
                   metrics.discord >= DISCORD_FLOOR)
            if metrics.log_negativity == 0.0:
                record("separable_discord_below_1", trial, sub.value, p,
                       metrics.discord, SEPARABLE_DISCORD_CEIL,
                       metrics.discord < SEPARABLE_DISCORD_CEIL)
            if sub is Subsystem.HYBRID_LOCAL:
                record("simon_separable", trial, sub.value, p,
                       metrics.log_negativity, 0.0,
                       metrics.log_negativity == 0.0)

        for sub, closed in (
            (Subsystem.MM, closed_form_eta_mm(p)),
            (Subsystem.OO, closed_form_eta_oo(p)),
        ):
            dev = abs(closed / generic_eta[sub] - 1.0)
            record("closed_form_eta", trial, sub.value, p,
                   dev, ETA_AGREEMENT_LIMIT, dev <= ETA_AGREEMENT_LIMIT)

    return rows, all_ok


def brute_force_beta0(alpha: float, r: float, n_th: float, sub: Subsystem,
                      beta_max: float = 200.0, scan: int = 400,
                      bisections: int = 60) -> float | None:
    """Locate the separability boundary in beta by scanning and bisecting E_N.

    Independent of the analytic threshold formulas: works directly on the
    generic partial-transpose eigenvalue of the extracted bipartition.
    Returns None when no sign change exists in (0, beta_max].
    """

    def eta(beta: float) -> float:
        p = ReducedParams(alpha=alpha, beta=beta, r=r, n_th=n_th)
        return pt_min_symplectic(extract_subsystem(global_covariance(p), sub))

    grid = np.linspace(0.0, beta_max, scan)
    signs = np.array([eta(b) < 0.5 for b in grid])
    flips = np.nonzero(signs[1:] != signs[:-1])[0]
    if flips.size == 0:
        return None
    lo, hi = grid[flips[0]], grid[flips[0] + 1]
    lo_entangled = signs[flips[0]]
    for _ in range(bisections):
        mid = 0.5 * (lo + hi)
        if (eta(mid) < 0.5) == lo_entangled:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def brute_force_t0(alpha: float, beta: float, r: float, sub: Subsystem,
                   omega_m: float = DEFAULT_OMEGA_M,
                   t_low: float = 1e-7, t_high: float = 1e-2,
                   bisections: int = 80) -> float | None:
    """Bisect the temperature at which E_N of a bipartition dies.

    Requires entanglement at ``t_low`` and separability at ``t_high``;
    returns None otherwise.
    """

    def entangled(temp: float) -> bool:
        n = mean_thermal_occupation(omega_m, temp)
        p = ReducedParams(alpha=alpha, beta=beta, r=r, n_th=n)
        return pt_min_symplectic(extract_subsystem(global_covariance(p), sub)) < 0.5

    if not entangled(t_low) or entangled(t_high):
        return None
    lo, hi = t_low, t_high
    for _ in range(bisections):
        mid = math.sqrt(lo * hi)
        if entangled(mid):
            lo = mid
        else:
            hi = mid
    return math.sqrt(lo * hi)


def format_field(value) -> str:
    """Fixed CSV field formatting: 12 significant digits, empty for missing."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def write_csv(rows: Iterable[dict], header: tuple[str, ...], stream: TextIO) -> None:
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(format_field(row.get(col)) for col in header) + "\n")
