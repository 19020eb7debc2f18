"""Physical constants (SI). Single source for every formula in the package."""

import math

# CODATA 2018; k_B and c are exact by definition in the 2019 SI.
HBAR = 1.054571817e-34    # reduced Planck constant, J s
K_B = 1.380649e-23        # Boltzmann constant, J/K
C_LIGHT = 299792458.0     # speed of light, m/s

# Default mechanical resonance used for temperature <-> occupation
# conversions whenever a sweep or threshold is specified in Kelvin.
DEFAULT_OMEGA_M = 2 * math.pi * 947e3   # rad/s
