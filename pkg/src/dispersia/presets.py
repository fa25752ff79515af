"""Built-in figure scenarios.

The four presets encode the dataset parameters verbatim: a gold half-space
(omega_p = 9 eV, Gamma/omega_p = 5e-3) throughout; distance scans of the
exact vs regression-theorem force for three atom-field couplings; the
normalized power spectra at gamma_a/omega_tilde = 1e-2; and the velocity
scans of the second-order and windowed friction forces at
omega_a/omega_sp = 0.2, z omega_sp/c = 0.05.
"""

from __future__ import annotations

import math

import numpy as np

from . import constants as const
from .material import SurfaceModel
from .polarizability import DipoleModel
from .units import UnitSystem

OMEGA_P_EV = 9.0
GAMMA_OVER_OMEGA_P = 5e-3
RB_OMEGA_A = 2.414e15          # rad/s, D2 line
RB_ALPHA0 = 5.26e-39           # F m^2
RB_MASS = 1.44e-25             # kg

#: surface relaxation in omega_sp units (Gamma/omega_p = 5e-3)
GOLD = SurfaceModel(gamma=GAMMA_OVER_OMEGA_P * math.sqrt(2.0))


def gold_units(alpha0=RB_ALPHA0):
    return UnitSystem.from_drude(OMEGA_P_EV, alpha0)


def rb_omega_bar():
    """Rb transition frequency in omega_sp units over the gold surface."""
    omega_sp = const.ev_to_rad_per_s(OMEGA_P_EV) / math.sqrt(2.0)
    return RB_OMEGA_A / omega_sp


def fig2_atoms():
    """The three distance-scan atom configs: Rb (coupling from its static
    polarizability), and hypothetical two-level systems with
    gamma_free/omega_a = 1e-6 and 1/3, all sharing Rb's frequency."""
    wa = rb_omega_bar()
    units = gold_units()
    rb = DipoleModel.two_level(omega_a=wa, coupling=units.coupling)
    weak = DipoleModel.two_level(omega_a=wa, gamma_free=1e-6 * wa)
    strong = DipoleModel.two_level(omega_a=wa, gamma_free=wa / 3.0)
    return {"rb": rb, "gamma-1e-06": weak, "gamma-1over3": strong}


def fig2_grid(n=24):
    """Distances in plasma-wavelength units, and the matching z values in
    c/omega_sp units (lambda_p = 2 pi / sqrt(2) there)."""
    z_over_lp = np.geomspace(0.05, 10.0, n)
    lam_p = 2.0 * np.pi / math.sqrt(2.0)
    return z_over_lp, z_over_lp * lam_p


FIG3_GAMMA_RATIO = 1e-2


def fig3_grid(n=441):
    return np.linspace(-0.2, 2.0, n)


FIG45_OMEGA_A = 0.2
FIG45_Z = 0.05
FIG4_GAMMAS = (0.0, 1e-3, 1e-1)
FIG5_SURFACE_GAMMA = 1e-1
FIG5_INTRINSIC = (1e-1, 1e-3, 0.0)


def fig4_grid(n=36):
    return np.geomspace(2e-3, 0.04, n)


def fig5_grid(n=36):
    return np.geomspace(5e-4, 0.04, n)
