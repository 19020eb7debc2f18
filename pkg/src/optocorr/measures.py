"""Entanglement and discord of a two-mode Gaussian state.

All quantities derive from the four symplectic invariants of the block
covariance matrix [[A, C], [C^T, B]]: det A, det B, det C and det sigma.
Conventions, documented once:

* logarithmic negativity uses the natural log, E_N = max(0, -ln 2 eta-);
* the entropic function f inside the discord uses log base 2;
* vacuum variance is 1/2, so every symplectic value is bounded below
  by 1/2 for physical states.

Negative radicands and symplectic values slightly below 1/2 are treated
as rounding when within 1e-12 relative (clamped); anything larger is a
genuinely non-physical input and raises ``ValueError``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .covariance import TwoModeCovariance
from .reduction import ReducedParams

#: Relative slack distinguishing rounding noise from non-physical input.
RADICAND_TOL = 1e-12
SYMPLECTIC_TOL = 1e-9


@dataclass(frozen=True)
class CorrelationMetrics:
    """All per-bipartition outputs in one record."""

    eta_minus: float        # minimum symplectic eigenvalue after partial transpose
    log_negativity: float   # max(0, -ln 2 eta_minus)
    nu_plus: float          # symplectic eigenvalues of the state itself
    nu_minus: float
    epsilon: float          # conditional symplectic value after the optimal measurement
    discord: float


def _clamped_sqrt(radicand: float, scale: float) -> float:
    """sqrt with the documented clamping policy for tiny negative radicands."""
    if radicand < 0.0:
        if radicand < -RADICAND_TOL * max(scale, 1.0):
            raise ValueError(
                f"non-physical covariance input: radicand {radicand:.3e} "
                f"at scale {scale:.3e}"
            )
        return 0.0
    return math.sqrt(radicand)


def _root_pair(delta: float, det_sigma: float) -> tuple[float, float]:
    """Both roots of nu^4 - delta nu^2 + det_sigma = 0, largest first.

    The small root is evaluated in product form,
    nu-^2 = 2 det_sigma / (delta + sqrt(delta^2 - 4 det_sigma)),
    which stays accurate when the subtraction in the textbook form would
    cancel (strongly entangled or strongly mixed states).
    """
    scale = max(delta * delta, abs(4.0 * det_sigma))
    s = _clamped_sqrt(delta * delta - 4.0 * det_sigma, scale)
    big_sq = 0.5 * (delta + s)
    if big_sq <= 0.0:
        raise ValueError("non-physical covariance input: no positive symplectic root")
    big = math.sqrt(big_sq)
    # degenerate spectra can invert the pair by one ulp; keep the ordering
    small = min(math.sqrt(max(det_sigma / big_sq, 0.0)), big)
    return big, small


def pt_min_symplectic(cm: TwoModeCovariance) -> float:
    """Minimum symplectic eigenvalue of the partially transposed state.

    Partial transposition flips the sign of det C, so the invariant
    becomes ``det A + det B - 2 det C``; eta- < 1/2 certifies entanglement.
    """
    delta_pt = cm.det_a + cm.det_b - 2.0 * cm.det_c
    _, small = _root_pair(delta_pt, cm.det_sigma)
    return small


def log_negativity(cm: TwoModeCovariance) -> float:
    """Logarithmic negativity E_N = max(0, -ln 2 eta-)."""
    eta = pt_min_symplectic(cm)
    if eta >= 0.5:
        return 0.0
    return -math.log(2.0 * eta)


def symplectic_pair(cm: TwoModeCovariance) -> tuple[float, float]:
    """Symplectic eigenvalues (nu+, nu-) of the state itself."""
    delta = cm.det_a + cm.det_b + 2.0 * cm.det_c
    return _root_pair(delta, cm.det_sigma)


def closed_form_eta_mm(p: ReducedParams) -> float:
    """eta- of the mechanical-mechanical bipartition, in closed form.

    For the symmetric blocks of that bipartition the generic formula
    collapses to eta- = a1 - c1; written out in the reduced knobs:

        2 eta- = (1 + 2 n_th)/(1 + alpha) (1/(1 + beta) + alpha)
                 + beta e^{-2r} / ((1 + alpha)(1 + beta)).
    """
    two_eta = (
        (1.0 + 2.0 * p.n_th) / (1.0 + p.alpha) * (1.0 / (1.0 + p.beta) + p.alpha)
        + p.beta * math.exp(-2.0 * p.r) / ((1.0 + p.alpha) * (1.0 + p.beta))
    )
    return 0.5 * two_eta


def closed_form_eta_oo(p: ReducedParams) -> float:
    """eta- of the optical-optical bipartition (eta- = a2 - c2):

        2 eta- = (1 + 2 n_th)/(1 + alpha) alpha beta/(1 + beta)
                 + e^{-2r}/(1 + alpha) (alpha/(1 + beta) + 1).
    """
    two_eta = (
        (1.0 + 2.0 * p.n_th) / (1.0 + p.alpha) * p.alpha * p.beta / (1.0 + p.beta)
        + math.exp(-2.0 * p.r) / (1.0 + p.alpha) * (p.alpha / (1.0 + p.beta) + 1.0)
    )
    return 0.5 * two_eta


def mirror_f(x: float) -> float:
    """Entropic function f(x) = (x+1/2) log2(x+1/2) - (x-1/2) log2(x-1/2).

    Defined for x >= 1/2 with f(1/2) = 0 by limit (never evaluates
    log(0)).  For large x the difference form cancels, so a log1p-based
    rewrite is used from x >= 2 on.
    """
    if x < 0.5:
        if x < 0.5 - SYMPLECTIC_TOL:
            raise ValueError(f"non-physical symplectic value {x!r} < 1/2")
        x = 0.5
    if x == 0.5:
        return 0.0
    if x < 2.0:
        return (x + 0.5) * math.log2(x + 0.5) - (x - 0.5) * math.log2(x - 0.5)
    return x * math.log1p(1.0 / (x - 0.5)) / math.log(2.0) + 0.5 * math.log2(x * x - 0.25)


def _scalar_blocks(cm: TwoModeCovariance) -> bool:
    return (
        cm.blocks_diagonal
        and cm.a_block[0, 0] == cm.a_block[1, 1]
        and cm.b_block[0, 0] == cm.b_block[1, 1]
    )


def _require_diagonal_c(cm: TwoModeCovariance) -> tuple[float, float]:
    c = cm.c_block
    if c[0, 1] != 0.0 or c[1, 0] != 0.0:
        raise ValueError(
            "unsupported cross-correlation block: only diagonal C arises "
            "for the four bipartitions of this system"
        )
    return c[0, 0], c[1, 1]


def conditional_epsilon(cm: TwoModeCovariance) -> float:
    """Conditional symplectic value after the optimal Gaussian measurement.

    Branch selection follows the sign pattern of the diagonal C block:

    * opposite signs, C = diag(c, -c)  (both homogeneous bipartitions and
      the crossed hybrid one):
      epsilon = (sqrt(det A) + 2 sqrt(det A det B) + 2 det C)
                / (1 + 2 sqrt(det B));
    * equal signs, C = diag(c, +c) (the local hybrid bipartition):
      epsilon = (2 |det C| + sqrt(4 det C^2 + (4 det B - 1)(4 det sigma - det A)))
                / (4 det B - 1).

    The two expressions agree wherever both apply.  The second one turns
    0/0 as det B -> 1/4 (second mode approaching vacuum level, e.g. on
    the beta -> 0 boundary), losing roughly half the mantissa before
    that; for the scalar-block states this system produces, the first
    form with -2 |det C| is algebraically identical and stays exact, so
    it takes over once 4 det B - 1 drops below 1e-4.
    """
    c_x, c_y = _require_diagonal_c(cm)
    det_a, det_b, det_c, det_s = cm.det_a, cm.det_b, cm.det_c, cm.det_sigma
    root_a, root_b = math.sqrt(det_a), math.sqrt(det_b)
    if c_x * c_y > 0.0:
        denom = 4.0 * det_b - 1.0
        if abs(denom) < 1e-4 and _scalar_blocks(cm):
            return (root_a + 2.0 * root_a * root_b - 2.0 * abs(det_c)) / (1.0 + 2.0 * root_b)
        if abs(denom) < 1e-9:
            raise ValueError(
                "unsupported covariance: degenerate measurement denominator "
                "for non-scalar blocks"
            )
        radicand = 4.0 * det_c * det_c + denom * (4.0 * det_s - det_a)
        scale = max(4.0 * det_c * det_c, abs(denom) * (4.0 * det_s + det_a))
        return (2.0 * abs(det_c) + _clamped_sqrt(radicand, scale)) / denom
    return (root_a + 2.0 * root_a * root_b + 2.0 * det_c) / (1.0 + 2.0 * root_b)


def gaussian_discord(cm: TwoModeCovariance) -> CorrelationMetrics:
    """Gaussian quantum discord and every intermediate quantity.

    D = f(sqrt(det B)) - f(nu+) - f(nu-) + f(epsilon).
    """
    eta = pt_min_symplectic(cm)
    nu_plus, nu_minus = symplectic_pair(cm)
    eps = conditional_epsilon(cm)
    discord = (
        mirror_f(math.sqrt(cm.det_b))
        - mirror_f(nu_plus)
        - mirror_f(nu_minus)
        + mirror_f(eps)
    )
    return CorrelationMetrics(
        eta_minus=eta,
        log_negativity=0.0 if eta >= 0.5 else -math.log(2.0 * eta),
        nu_plus=nu_plus,
        nu_minus=nu_minus,
        epsilon=eps,
        discord=discord,
    )
