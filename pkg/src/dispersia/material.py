"""Dielectric and reflection response of the half-space.

Everything is expressed in surface-plasmon units: frequencies in
``omega_sp = omega_p/sqrt(2)`` (so the Drude plasma frequency is
``sqrt(2)`` by construction), wavevectors in ``omega_sp/c``.

Branch convention for every normal-wavevector square root: ``Re >= 0``,
and on the real frequency axis ``Im kappa < 0`` for ``omega > 0`` (the
retarded sheet, ``omega -> omega + i0``); on the positive imaginary axis
kappa is real positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

OMEGA_P = math.sqrt(2.0)   # plasma frequency in omega_sp units


class SingularEvaluationError(ZeroDivisionError):
    """Evaluation requested exactly at a pole of the response."""


@dataclass(frozen=True)
class SurfaceModel:
    """Half-space response parameters.

    kind "drude": full Drude permittivity with relaxation rate ``gamma``
    (in omega_sp units).  kind "ohmic": surrogate with a purely Ohmic
    imaginary reflection ``r_I = slope * omega`` for asymptotic
    cross-checks; it has no real part and cannot feed the Casimir-Polder
    engines.
    """

    gamma: float = 0.0
    kind: str = "drude"
    ohmic_slope: float | None = None

    def __post_init__(self):
        if self.gamma < 0.0:
            raise ValueError("relaxation rate must be non-negative")
        if self.kind not in ("drude", "ohmic"):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.kind == "ohmic" and self.ohmic_slope is None:
            object.__setattr__(self, "ohmic_slope", self.gamma)

    @property
    def omega_sp(self):
        """Surface-plasmon resonance in its own units (= 1)."""
        return 1.0

    @property
    def ohmic_r_slope(self):
        """Low-frequency slope of Im r: r_I ~ (Gamma/omega_sp^2) omega."""
        if self.kind == "ohmic":
            return self.ohmic_slope
        return self.gamma


def drude_permittivity(omega, surface=None, gamma=None):
    """Drude permittivity ``1 - omega_p^2 / (omega (omega + i Gamma))``.

    Accepts real or complex frequency (in omega_sp units); on the positive
    imaginary axis ``omega = i xi`` the value is real, above 1 and
    monotonically decreasing in xi.
    """
    gam = surface.gamma if surface is not None else gamma
    w = np.asarray(omega, dtype=complex)
    den = w * (w + 1j * gam)
    if np.any(den == 0.0):
        raise SingularEvaluationError("permittivity pole at omega = 0 or -i*Gamma")
    eps = 1.0 - OMEGA_P**2 / den
    return eps if eps.ndim else complex(eps)


def quasistatic_reflection(omega, surface):
    """Quasi-static TM reflection ``(eps - 1)/(eps + 1)``.

    For the Drude model this reduces to the rational form
    ``-1 / (omega (omega + i Gamma) - 1)``, regular at omega = 0 for
    Gamma > 0 with Ohmic slope Im r ~ Gamma * omega.
    """
    if surface.kind != "drude":
        raise ValueError("quasistatic_reflection needs a Drude surface")
    w = np.asarray(omega, dtype=complex)
    den = w * (w + 1j * surface.gamma) - 1.0
    if np.any(den == 0.0):
        raise SingularEvaluationError(
            "surface-plasmon pole hit; the Gamma -> 0 resonance carries the "
            "analytic weight pi*omega_sp/2 instead of a numeric value")
    r = -1.0 / den
    return r if r.ndim else complex(r)


def quasistatic_reflection_imag(omega, surface):
    """Im of the quasi-static TM reflection for real frequency (vectorized)."""
    w = np.asarray(omega, dtype=float)
    if surface.kind == "ohmic":
        return surface.ohmic_slope * w
    g = surface.gamma
    return g * w / ((w * w - 1.0) ** 2 + (g * w) ** 2)


def quasistatic_reflection_imag_deriv(omega, surface):
    """d/d omega of Im r at real frequency (analytic, for the
    integration-by-parts route of the friction cancellation check)."""
    w = np.asarray(omega, dtype=float)
    if surface.kind == "ohmic":
        return surface.ohmic_slope * np.ones_like(w)
    g = surface.gamma
    num = g * w
    den = (w * w - 1.0) ** 2 + (g * w) ** 2
    dden = 4.0 * w * (w * w - 1.0) + 2.0 * g * g * w
    return (g * den - num * dden) / den**2


def _retarded_sqrt(s, omega):
    # principal sqrt (Re >= 0); on the negative real axis of s, where the
    # two conventions meet, take Im < 0 for Re(omega) > 0 (retarded sheet)
    kap = np.sqrt(np.asarray(s, dtype=complex))
    neg = (np.imag(s) == 0.0) & (np.real(s) < 0.0)
    if np.any(neg):
        w = np.asarray(omega, dtype=complex)
        sgn = np.where(np.real(w) != 0.0, np.sign(np.real(w)), 1.0)
        kap = np.where(neg, -1j * sgn * np.abs(kap), kap)
    return kap


def vacuum_kappa(k, omega):
    """Vacuum decay constant ``sqrt(k^2 - omega^2)`` on the retarded sheet.

    Real omega: real for k >= |omega|, ``-i sign(omega) sqrt(omega^2-k^2)``
    in the propagating region.  ``omega = i xi``: real positive.
    """
    k = np.asarray(k, dtype=float)
    w = np.asarray(omega, dtype=complex)
    return _retarded_sqrt(k * k - w * w, omega)


def medium_kappa(k, omega, surface):
    """Decay constant in the Drude medium, ``sqrt(k^2 - eps omega^2)``.

    Written via ``eps*omega^2 = omega^2 - omega_p^2 omega/(omega + i Gamma)``
    so the omega -> 0 limit is regular.  For lossy media the principal
    square root sits in the fourth quadrant automatically, matching the
    Re > 0, Im < 0 convention.
    """
    k = np.asarray(k, dtype=float)
    w = np.asarray(omega, dtype=complex)
    eps_w2 = w * w - OMEGA_P**2 * w / (w + 1j * surface.gamma)
    return _retarded_sqrt(k * k - eps_w2, omega)


def fresnel_reflection(omega, k, polarization, surface):
    """Half-space Fresnel coefficient at in-plane wavevector ``k``.

    r_s = (kappa - kappa1)/(kappa + kappa1),
    r_p = (eps kappa - kappa1)/(eps kappa + kappa1),
    with kappa1 = sqrt(k^2 - eps omega^2/c^2) and the branch convention in
    the module docstring.  For p polarization and k >> |omega| this
    approaches the quasi-static coefficient.

    The p coefficient is evaluated from ``e2 = omega (omega + i Gamma)``:
    ``eps = 1 - omega_p^2/e2`` gives
    ``r_p = (kappa (e2 - 2) - kappa1 e2) / (kappa (e2 - 2) + kappa1 e2)``,
    which stays finite as omega -> 0 where eps itself diverges.
    """
    if polarization not in ("s", "p"):
        raise ValueError(f"polarization must be 's' or 'p', got {polarization!r}")
    if surface.kind != "drude":
        raise ValueError("fresnel_reflection needs a Drude surface")
    k = np.asarray(k, dtype=float)
    if np.any(k < 0.0):
        raise ValueError("in-plane wavevector magnitude must be >= 0")
    w = np.asarray(omega, dtype=complex)
    kap = vacuum_kappa(k, omega)
    kap1 = medium_kappa(k, omega, surface)
    if polarization == "s":
        r = (kap - kap1) / (kap + kap1)
    else:
        e2 = w * (w + 1j * surface.gamma)   # omega_p^2 = 2 in these units
        num = kap * (e2 - 2.0) - kap1 * e2
        den = kap * (e2 - 2.0) + kap1 * e2
        r = num / den
    return r if r.ndim else complex(r)
