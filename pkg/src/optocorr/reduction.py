"""Reduction of laboratory parameters to the dimensionless model knobs.

Every steady-state formula downstream depends only on four dimensionless
numbers: the damping ratio ``alpha = gamma/kappa``, the optomechanical
cooperativity ``beta = 4 G^2 / (kappa gamma)``, the squeezing parameter
``r`` of the injected light, and the mean thermal phonon number ``n_th``
of the mechanical baths.  This module converts a physical cavity/laser/
mirror description into those knobs and provides the temperature <->
occupation conversions used by sweeps and thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constants import C_LIGHT, HBAR, K_B


@dataclass(frozen=True)
class PhysicalSetup:
    """Laboratory description of one of the two identical cavities (SI units).

    The two cavities are identical by assumption, so a single setup
    describes the whole system.  ``laser_frequency`` may be omitted; it is
    then derived from the wavelength as ``2 pi c / laser_wavelength``.
    The effective cavity detuning is pinned to ``-mechanical_frequency``
    (the state-transfer operating point); it is not user-adjustable
    because all steady-state formulas assume it.
    """

    cavity_length: float          # L, m
    laser_wavelength: float       # lambda, m
    cavity_frequency: float       # omega_c, rad/s
    laser_power: float            # P, W
    mirror_mass: float            # mu, kg
    mechanical_frequency: float   # omega_mu, rad/s
    mechanical_damping: float     # gamma, rad/s
    cavity_decay: float           # kappa, rad/s
    bath_temperature: float       # T, K
    laser_frequency: float | None = None   # omega_L, rad/s; None -> 2 pi c / lambda
    effective_detuning: float = field(init=False)

    def __post_init__(self):
        positive = {
            "cavity_length": self.cavity_length,
            "laser_wavelength": self.laser_wavelength,
            "cavity_frequency": self.cavity_frequency,
            "laser_power": self.laser_power,
            "mirror_mass": self.mirror_mass,
            "mechanical_frequency": self.mechanical_frequency,
            "mechanical_damping": self.mechanical_damping,
            "cavity_decay": self.cavity_decay,
        }
        for name, value in positive.items():
            if not value > 0:
                raise ValueError(f"{name} must be strictly positive, got {value!r}")
        if self.bath_temperature < 0:
            raise ValueError("bath_temperature must be >= 0")
        if self.laser_frequency is None:
            object.__setattr__(
                self, "laser_frequency", 2 * math.pi * C_LIGHT / self.laser_wavelength
            )
        elif not self.laser_frequency > 0:
            raise ValueError("laser_frequency must be strictly positive")
        object.__setattr__(self, "effective_detuning", -self.mechanical_frequency)


@dataclass(frozen=True)
class ReducedParams:
    """The four dimensionless knobs driving every steady-state formula."""

    alpha: float   # gamma / kappa
    beta: float    # 4 G^2 / (kappa gamma)
    r: float       # squeezing parameter of the injected light
    n_th: float    # mean thermal phonon number

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("alpha must be strictly positive")
        for name in ("beta", "r", "n_th"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


@dataclass(frozen=True)
class NoiseMoments:
    """Second moments (N, M) of the two-mode squeezed input light."""

    N: float
    M: float

    def __post_init__(self):
        if self.N < 0 or self.M < 0:
            raise ValueError("noise moments must be non-negative")
        # M^2 = N (N + 1) holds for any pure two-mode squeezed input.
        ideal = self.N * (self.N + 1.0)
        if abs(self.M**2 - ideal) > 1e-12 * max(ideal, 1.0):
            raise ValueError("inconsistent moments: M^2 != N (N + 1)")


def mean_thermal_occupation(omega_m: float, temp_kelvin: float) -> float:
    """Bose occupation ``1 / (exp(hbar omega / k_B T) - 1)``.

    ``T = 0`` returns 0 (the zero-temperature limit, not an error).
    """
    if not omega_m > 0:
        raise ValueError("omega_m must be strictly positive")
    if temp_kelvin < 0:
        raise ValueError("temperature must be >= 0")
    if temp_kelvin == 0:
        return 0.0
    return 1.0 / math.expm1(HBAR * omega_m / (K_B * temp_kelvin))


def temperature_from_occupation(omega_m: float, n_th: float) -> float:
    """Invert the Bose occupation: ``T = hbar omega / (k_B ln(1/n_th + 1))``."""
    if not omega_m > 0:
        raise ValueError("omega_m must be strictly positive")
    if not n_th > 0:
        raise ValueError("zero-temperature unreachable: n_th must be > 0")
    return HBAR * omega_m / (K_B * math.log1p(1.0 / n_th))


def squeeze_moments(r: float) -> NoiseMoments:
    """Moments ``N = sinh^2 r`` and ``M = sinh r cosh r`` of the squeezed input."""
    if r < 0:
        raise ValueError("squeezing parameter must be >= 0")
    return NoiseMoments(N=math.sinh(r) ** 2, M=math.sinh(r) * math.cosh(r))


def optomech_coupling(setup: PhysicalSetup) -> float:
    """Single-photon radiation-pressure coupling ``g = (omega_c/L) sqrt(hbar/(mu omega_mu))``."""
    return (setup.cavity_frequency / setup.cavity_length) * math.sqrt(
        HBAR / (setup.mirror_mass * setup.mechanical_frequency)
    )


def pump_amplitude(setup: PhysicalSetup) -> float:
    """Pump amplitude ``epsilon = sqrt(2 kappa P / (hbar omega_L))``."""
    return math.sqrt(
        2.0 * setup.cavity_decay * setup.laser_power / (HBAR * setup.laser_frequency)
    )


def steady_photon_amplitude(setup: PhysicalSetup) -> float:
    """Magnitude of the steady intracavity field at the pinned detuning.

    ``|c_s| = epsilon / sqrt(kappa^2/4 + omega_mu^2)`` since the effective
    detuning equals ``-omega_mu``.
    """
    eps = pump_amplitude(setup)
    return eps / math.hypot(setup.cavity_decay / 2.0, setup.mechanical_frequency)


def reduce_setup(setup: PhysicalSetup, squeezing: float = 0.0) -> ReducedParams:
    """Collapse a physical setup into the dimensionless knobs.

    ``squeezing`` is the parameter of the injected light and is passed
    through untouched; it is not a property of the cavity hardware.
    """
    g = optomech_coupling(setup)
    coupling = g * steady_photon_amplitude(setup)   # many-photon coupling G
    alpha = setup.mechanical_damping / setup.cavity_decay
    beta = 4.0 * coupling**2 / (setup.cavity_decay * setup.mechanical_damping)
    n_th = mean_thermal_occupation(setup.mechanical_frequency, setup.bath_temperature)
    return ReducedParams(alpha=alpha, beta=beta, r=squeezing, n_th=n_th)
