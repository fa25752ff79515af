"""Physical constants (CODATA 2018) and elementary conversions.

All values in SI. The rest of the package works in dimensionless units
(frequencies in units of the surface-plasmon resonance, lengths in c over
that frequency, forces in the normalization returned by
:func:`dispersia.units.normalization_f0`); these constants enter only at
the SI boundary.
"""

import math

HBAR = 1.054571817e-34      # J s
C = 299792458.0             # m / s
EPS0 = 8.8541878128e-12     # F / m
E_CHARGE = 1.602176634e-19  # C

# 1 eV as an angular frequency, ~1.519e15 rad/s
EV_TO_RAD_PER_S = E_CHARGE / HBAR

TWO_PI = 2.0 * math.pi


def ev_to_rad_per_s(energy_ev):
    """Angular frequency (rad/s) of a photon of the given energy in eV."""
    return energy_ev * EV_TO_RAD_PER_S


def rad_per_s_to_ev(omega):
    """Inverse of :func:`ev_to_rad_per_s`."""
    return omega / EV_TO_RAD_PER_S
