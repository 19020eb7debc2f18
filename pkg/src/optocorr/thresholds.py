"""Analytic separability boundaries of the homogeneous bipartitions.

Setting the closed-form 2 eta- expressions equal to 1 and solving for the
bath temperature or the cooperativity gives four exact level sets of the
logarithmic negativity.  A boundary may not exist: without squeezing
(r = 0) neither homogeneous bipartition ever entangles, and for some
parameter corners one side of the boundary is empty.  These are ordinary
physics, reported through the ``attainable`` flag rather than as errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import DEFAULT_OMEGA_M, HBAR, K_B
from .covariance import TwoModeCovariance


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of one separability-boundary evaluation.

    ``attainable`` states whether entanglement occurs anywhere on the
    swept axis.  When it does, ``value`` is the boundary: entanglement
    lives at T < value (temperature thresholds), beta > value (mechanical
    cooperativity threshold) or beta < value (optical one); ``math.inf``
    means the entangled side is unbounded.  When ``attainable`` is False
    the boundary is meaningless and ``value`` is None.
    """

    value: float | None
    attainable: bool


def _check_common(alpha: float, r: float) -> None:
    if not alpha > 0:
        raise ValueError("alpha must be strictly positive")
    if r < 0:
        raise ValueError("squeezing parameter must be >= 0")


def t0_mechanical(alpha: float, beta: float, r: float,
                  omega_m: float = DEFAULT_OMEGA_M) -> ThresholdResult:
    """Bath temperature above which the two mechanical modes separate.

    1/T0 = (k_B / hbar omega_m) ln(2 (1 + alpha + alpha beta)
                                   / (beta (1 - e^{-2r})) + 1)

    Without pump (beta = 0) or squeezing (r = 0) the modes never
    entangle and no threshold exists.
    """
    _check_common(alpha, r)
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if r == 0 or beta == 0:
        return ThresholdResult(value=None, attainable=False)
    arg = 2.0 * (1.0 + alpha + alpha * beta) / (beta * -math.expm1(-2.0 * r))
    return ThresholdResult(
        value=HBAR * omega_m / (K_B * math.log1p(arg)), attainable=True
    )


def t0_optical(alpha: float, beta: float, r: float,
               omega_m: float = DEFAULT_OMEGA_M) -> ThresholdResult:
    """Bath temperature above which the two optical modes separate.

    1/T0 = (k_B / hbar omega_m) ln(2 alpha beta
                                   / ((1 + alpha + beta)(1 - e^{-2r})) + 1)

    For beta = 0 (and r > 0) the squeezing reaches the cavities
    undisturbed and they stay entangled at every temperature; the
    boundary is +inf.
    """
    _check_common(alpha, r)
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if r == 0:
        return ThresholdResult(value=None, attainable=False)
    if beta == 0:
        return ThresholdResult(value=math.inf, attainable=True)
    arg = 2.0 * alpha * beta / ((1.0 + alpha + beta) * -math.expm1(-2.0 * r))
    return ThresholdResult(
        value=HBAR * omega_m / (K_B * math.log1p(arg)), attainable=True
    )


def beta0_mechanical(alpha: float, r: float, n_th: float) -> ThresholdResult:
    """Cooperativity above which the two mechanical modes entangle.

    beta0 = 2 n_th (1 + alpha) / (1 - 2 alpha n_th - e^{-2r})

    A negative or vanishing denominator means the thermal load cannot be
    overcome at any pump strength: never entangled.
    """
    _check_common(alpha, r)
    if n_th < 0:
        raise ValueError("n_th must be >= 0")
    den = 1.0 - 2.0 * alpha * n_th - math.exp(-2.0 * r)
    if den <= 0.0:
        return ThresholdResult(value=None, attainable=False)
    return ThresholdResult(value=2.0 * n_th * (1.0 + alpha) / den, attainable=True)


def beta0_optical(alpha: float, r: float, n_th: float) -> ThresholdResult:
    """Cooperativity above which the two optical modes lose entanglement.

    beta0 = (e^{-2r} - 1)(1 + alpha) / (1 - 2 alpha n_th - e^{-2r})

    The boundary only exists when the denominator is negative; otherwise
    the modes stay entangled at every cooperativity (value +inf).  With
    r = 0 entanglement never occurs at all.
    """
    _check_common(alpha, r)
    if n_th < 0:
        raise ValueError("n_th must be >= 0")
    if r == 0:
        return ThresholdResult(value=None, attainable=False)
    den = 1.0 - 2.0 * alpha * n_th - math.exp(-2.0 * r)
    if den >= 0.0:
        return ThresholdResult(value=math.inf, attainable=True)
    value = math.expm1(-2.0 * r) * (1.0 + alpha) / den
    return ThresholdResult(value=value, attainable=True)


def simon_precondition(cm: TwoModeCovariance) -> bool:
    """det C < 0, the necessary condition for two-mode Gaussian entanglement.

    False guarantees E_N = 0 on the same covariance matrix.
    """
    return cm.det_c < 0.0
