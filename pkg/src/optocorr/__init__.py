"""Steady-state quantum correlations of two squeezed-light-driven
optomechanical cavities: covariance matrices, logarithmic negativity,
Gaussian quantum discord, analytic separability thresholds, and an
independent Lyapunov cross-validation, with a sweep CLI on top."""

from .constants import DEFAULT_OMEGA_M, HBAR, K_B
from .covariance import (
    CovarianceEntries,
    Subsystem,
    TwoModeCovariance,
    assemble_global,
    cm_entries,
    extract_subsystem,
    global_covariance,
    symplectic_eigenvalues,
    symplectic_form,
)
from .lyapunov import (
    OracleReport,
    build_diffusion,
    build_drift,
    lyapunov_residual,
    oracle_compare,
    solve_lyapunov,
    steady_covariance,
)
from .measures import (
    CorrelationMetrics,
    closed_form_eta_mm,
    closed_form_eta_oo,
    conditional_epsilon,
    gaussian_discord,
    log_negativity,
    mirror_f,
    pt_min_symplectic,
    symplectic_pair,
)
from .reduction import (
    NoiseMoments,
    PhysicalSetup,
    ReducedParams,
    mean_thermal_occupation,
    optomech_coupling,
    reduce_setup,
    squeeze_moments,
    temperature_from_occupation,
)
from .sweep import (
    FIGURE_PRESETS,
    SweepSpec,
    run_preset,
    run_sweep,
    threshold_table,
    validate,
)
from .thresholds import (
    ThresholdResult,
    beta0_mechanical,
    beta0_optical,
    simon_precondition,
    t0_mechanical,
    t0_optical,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_OMEGA_M", "HBAR", "K_B",
    "CovarianceEntries", "Subsystem", "TwoModeCovariance",
    "assemble_global", "cm_entries", "extract_subsystem", "global_covariance",
    "symplectic_eigenvalues", "symplectic_form",
    "OracleReport", "build_diffusion", "build_drift", "lyapunov_residual",
    "oracle_compare", "solve_lyapunov", "steady_covariance",
    "CorrelationMetrics", "closed_form_eta_mm", "closed_form_eta_oo",
    "conditional_epsilon", "gaussian_discord", "log_negativity", "mirror_f",
    "pt_min_symplectic", "symplectic_pair",
    "NoiseMoments", "PhysicalSetup", "ReducedParams",
    "mean_thermal_occupation", "optomech_coupling", "reduce_setup",
    "squeeze_moments", "temperature_from_occupation",
    "FIGURE_PRESETS", "SweepSpec", "run_preset", "run_sweep",
    "threshold_table", "validate",
    "ThresholdResult", "beta0_mechanical", "beta0_optical",
    "simon_precondition", "t0_mechanical", "t0_optical",
]
