"""Independent steady-state reconstruction via the Lyapunov equation.

The linearized rotating-frame dynamics of the eight quadratures is
du/dt = A u + n(t) with white noise of symmetrized strength D, so the
stationary covariance solves A sigma + sigma A^T + D = 0.  Solving that
equation numerically reconstructs the covariance matrix with no input
from the closed-form entries; comparing the two paths end to end is the
package's internal cross-validation ("the oracle").

Only rate ratios matter in steady state, so the oracle pins kappa = 1
and derives gamma = alpha, G = sqrt(alpha beta)/2 from the reduced
knobs; a rate-unit invariance test backs this up.

Noise strengths, derived from the symmetrized input correlators (the
rotating frame cancels the 2 omega_m shift of the squeezed cross
terms, leaving stationary white noise):

* mechanical quadratures: gamma (n_th + 1/2) each;
* optical quadratures: kappa (N + 1/2) each;
* optical cross correlations: +kappa M between the two X quadratures,
  -kappa M between the two Y quadratures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .covariance import cm_entries, assemble_global
from .reduction import ReducedParams, squeeze_moments

#: Acceptance bounds of the cross-validation run.
REL_DEV_LIMIT = 1e-8        # entrywise closed-form agreement
OFF_PATTERN_LIMIT = 1e-10   # structural zeros of the closed form
RESIDUAL_LIMIT = 1e-10      # Lyapunov residual, relative to ||D||


def build_drift(coupling: float, kappa: float, gamma: float) -> np.ndarray:
    """Drift matrix of the linearized rotating-frame dynamics.

    Per cavity i:  dXm_i/dt = -(gamma/2) Xm_i + G Xo_i,
                   dXo_i/dt = -(kappa/2) Xo_i - G Xm_i,
    and identically for the Y quadratures.  Stable (all eigenvalues in
    the open left half plane) for any G once kappa, gamma > 0.
    """
    if not (kappa > 0 and gamma > 0):
        raise ValueError("kappa and gamma must be strictly positive")
    if coupling < 0:
        raise ValueError("coupling must be >= 0")
    a = np.zeros((8, 8))
    for i in (0, 1):
        for q in (0, 1):                    # X and Y rows of cavity i
            mech, opt = 2 * i + q, 4 + 2 * i + q
            a[mech, mech] = -gamma / 2.0
            a[mech, opt] = coupling
            a[opt, opt] = -kappa / 2.0
            a[opt, mech] = -coupling
    return a


def build_diffusion(kappa: float, gamma: float, n_th: float,
                    big_n: float, big_m: float) -> np.ndarray:
    """Symmetrized white-noise strength matrix (see module docstring)."""
    if not (kappa > 0 and gamma > 0):
        raise ValueError("kappa and gamma must be strictly positive")
    if min(n_th, big_n, big_m) < 0:
        raise ValueError("noise occupations must be >= 0")
    d = np.zeros((8, 8))
    d[0, 0] = d[1, 1] = d[2, 2] = d[3, 3] = gamma * (n_th + 0.5)
    d[4, 4] = d[5, 5] = d[6, 6] = d[7, 7] = kappa * (big_n + 0.5)
    d[4, 6] = d[6, 4] = kappa * big_m
    d[5, 7] = d[7, 5] = -kappa * big_m
    return d


def solve_lyapunov(drift: np.ndarray, diffusion: np.ndarray) -> np.ndarray:
    """Solve A sigma + sigma A^T + D = 0 for the stationary covariance.

    Vectorizes into the dense 64-unknown system
    (I (x) A + A (x) I) vec(sigma) = -vec(D); at this size nothing
    smarter is warranted.  Raises if the drift is not stable, in which
    case no stationary state exists.
    """
    if np.linalg.eigvals(drift).real.max() >= 0.0:
        raise ValueError("unstable drift matrix: no stationary covariance")
    n = drift.shape[0]
    eye = np.eye(n)
    system = np.kron(eye, drift) + np.kron(drift, eye)
    vec = np.linalg.solve(system, -diffusion.flatten(order="F"))
    sigma = vec.reshape((n, n), order="F")
    return 0.5 * (sigma + sigma.T)   # exact solution is symmetric


def lyapunov_residual(drift: np.ndarray, sigma: np.ndarray,
                      diffusion: np.ndarray) -> float:
    """Max-entry residual of the Lyapunov equation, relative to ||D||."""
    res = drift @ sigma + sigma @ drift.T + diffusion
    return np.abs(res).max() / np.abs(diffusion).max()


def rates_from_reduced(p: ReducedParams, kappa: float = 1.0) -> tuple[float, float, float]:
    """Map the reduced knobs onto (G, kappa, gamma) at the chosen rate unit."""
    gamma = p.alpha * kappa
    coupling = np.sqrt(p.beta * kappa * gamma) / 2.0
    return coupling, kappa, gamma


def steady_covariance(p: ReducedParams, kappa: float = 1.0) -> np.ndarray:
    """Stationary covariance reconstructed from the dynamics alone."""
    coupling, kappa, gamma = rates_from_reduced(p, kappa)
    moments = squeeze_moments(p.r)
    drift = build_drift(coupling, kappa, gamma)
    diffusion = build_diffusion(kappa, gamma, p.n_th, moments.N, moments.M)
    return solve_lyapunov(drift, diffusion)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one closed-form vs Lyapunov comparison."""

    params: ReducedParams
    max_rel_dev: float        # worst entrywise deviation on the nonzero pattern
    max_off_pattern: float    # worst |entry| where the closed form is zero, / scale
    residual: float           # Lyapunov residual, relative to ||D||
    passed: bool


def oracle_compare(p: ReducedParams,
                   rel_limit: float = REL_DEV_LIMIT,
                   off_limit: float = OFF_PATTERN_LIMIT,
                   residual_limit: float = RESIDUAL_LIMIT,
                   corrupt_entry: float = 0.0) -> OracleReport:
    """Compare the closed-form covariance with the Lyapunov reconstruction.

    Entries that are structurally nonzero in the closed form are compared
    relatively; structural zeros (and entries outside the sparsity
    pattern) must stay below ``off_limit`` times the matrix scale.

    ``corrupt_entry`` is a fault-injection hook for negative-control
    tests: the offset is added to one closed-form entry, which any
    nonzero value large enough to matter must turn into a failed report.
    """
    closed = assemble_global(cm_entries(p))
    closed[0, 0] += corrupt_entry
    coupling, kappa, gamma = rates_from_reduced(p)
    moments = squeeze_moments(p.r)
    drift = build_drift(coupling, kappa, gamma)
    diffusion = build_diffusion(kappa, gamma, p.n_th, moments.N, moments.M)
    numeric = solve_lyapunov(drift, diffusion)

    scale = np.abs(closed).max()
    on_pattern = np.abs(closed) > 1e-12 * scale
    deviation = np.abs(numeric - closed)
    max_rel = float((deviation[on_pattern] / np.abs(closed[on_pattern])).max())
    max_off = float(deviation[~on_pattern].max() / scale) if (~on_pattern).any() else 0.0
    residual = lyapunov_residual(drift, numeric, diffusion)
    passed = max_rel < rel_limit and max_off < off_limit and residual < residual_limit
    return OracleReport(
        params=p,
        max_rel_dev=max_rel,
        max_off_pattern=max_off,
        residual=residual,
        passed=passed,
    )
