"""Physical constants (SI, CODATA 2018 exact values where defined)."""

import math

PLANCK_H = 6.62607015e-34       # J s (exact)
SPEED_OF_LIGHT = 299792458.0    # m/s (exact)
HBAR = 1.054571817e-34          # J s


def photon_energy(wavelength: float) -> float:
    """Energy of one photon at the given vacuum wavelength, h*c/lambda [J]."""
    return PLANCK_H * SPEED_OF_LIGHT / wavelength


def wavenumber(wavelength: float) -> float:
    """Angular wavenumber k = 2*pi/lambda [rad/m]."""
    return 2.0 * math.pi / wavelength
