"""Dimensionless unit system and SI conversions.

Every physics module in this package computes with pure numbers:
frequencies and rates in units of the surface-plasmon resonance
``omega_sp``, in-plane wavevectors in ``omega_sp/c``, distances in
``c/omega_sp``, velocities in ``c`` and forces in the normalization force
``F0 = 3 hbar omega_sp^5 alpha0 / (2 pi eps0 c^4)``.  ``UnitSystem``
carries the reference scales and converts back and forth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import constants as const


def normalization_f0(alpha0, omega_sp):
    """Force scale ``F0 = 3 hbar omega_sp^5 alpha0 / (2 pi eps0 c^4)``.

    Parameters
    ----------
    alpha0 : float
        Static isotropic polarizability in SI units (F m^2).
    omega_sp : float
        Surface-plasmon resonance frequency (rad/s).

    Returns
    -------
    float
        Positive force scale in newtons.  Drag and attractive forces are
        reported negative in units of this scale.
    """
    if omega_sp <= 0.0:
        raise ValueError(f"omega_sp must be positive, got {omega_sp}")
    if alpha0 < 0.0:
        raise ValueError(f"alpha0 must be non-negative, got {alpha0}")
    return 3.0 * const.HBAR * omega_sp**5 * alpha0 / (const.TWO_PI * const.EPS0 * const.C**4)


def radiative_rate(alpha0, omega_a):
    """Free-space radiative decay rate of a two-level dipole (rad/s).

    Wigner-Weisskopf rate ``omega_a^3 |d|^2 / (3 pi eps0 hbar c^3)`` with
    ``|d|^2 = (3/2) hbar omega_a alpha0``.
    """
    return omega_a**4 * alpha0 / (const.TWO_PI * const.EPS0 * const.C**3)


def alpha0_from_rate(gamma_free, omega_a):
    """Static polarizability implied by a free-space decay rate (SI)."""
    return const.TWO_PI * const.EPS0 * const.C**3 * gamma_free / omega_a**4


def coupling_constant(alpha0, omega_sp):
    """Dimensionless atom-field coupling ``alpha0 omega_sp^3 / (eps0 c^3)``.

    This single number scales every Green-tensor dressing and surface
    modification of the decay rate.
    """
    return alpha0 * omega_sp**3 / (const.EPS0 * const.C**3)


@dataclass(frozen=True)
class UnitSystem:
    """Reference scales tying the dimensionless numbers to SI.

    Attributes
    ----------
    omega_ref : float
        Reference angular frequency (rad/s); chosen as omega_sp.
    alpha0 : float
        Static polarizability entering the force scale (F m^2).
    """

    omega_ref: float
    alpha0: float
    length_ref: float = field(init=False)
    force_ref: float = field(init=False)

    def __post_init__(self):
        if self.omega_ref <= 0.0:
            raise ValueError("omega_ref must be positive")
        object.__setattr__(self, "length_ref", const.C / self.omega_ref)
        object.__setattr__(self, "force_ref", normalization_f0(self.alpha0, self.omega_ref))

    @classmethod
    def from_drude(cls, omega_p_ev, alpha0):
        """Build from a Drude plasma frequency in eV; omega_ref = omega_p/sqrt(2)."""
        omega_sp = const.ev_to_rad_per_s(omega_p_ev) / math.sqrt(2.0)
        return cls(omega_ref=omega_sp, alpha0=alpha0)

    # -- plain scale conversions ------------------------------------------
    def frequency_si(self, wbar):
        return wbar * self.omega_ref

    def frequency_bar(self, omega):
        return omega / self.omega_ref

    def length_si(self, zbar):
        return zbar * self.length_ref

    def length_bar(self, z):
        return z / self.length_ref

    def force_si(self, fbar):
        return fbar * self.force_ref

    def force_bar(self, f):
        return f / self.force_ref

    @property
    def coupling(self):
        """Dimensionless atom-field coupling constant."""
        return coupling_constant(self.alpha0, self.omega_ref)

    @property
    def plasma_wavelength(self):
        """lambda_p = 2 pi c / omega_p with omega_p = sqrt(2) omega_ref (m)."""
        return const.TWO_PI * const.C / (math.sqrt(2.0) * self.omega_ref)
