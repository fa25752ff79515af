"""Atomic and particle response models.

All polarizabilities are dimensionless tensors in units of the static
isotropic polarizability alpha0, as functions of frequency in omega_sp
units.  For a dipole of fixed orientation n the tensor is ``3 a_s(w) n n``
with the same scalar ``a_s`` whose isotropic average is ``a_s * identity``
(alpha0 absorbs |d|^2, so a_s(0) = 1 for the undamped models).

Models
------
two-level        ``a_s = wa wt / (wt^2 - (w + i ga)^2)`` with the
                 position-dependent rates (wt, ga); ga -> 0 is the bare
                 response.
oscillator       ``a_s = wa^2 / (wa^2 - w^2 - i gi w)`` (intrinsic damping).
dressed          oscillator with the radiation-reaction self-energy from
oscillator       the scattered Green tensor: per-axis denominator
                 ``wa^2 - w^2 - i gi w - wa^2 G_ii``, where
                 ``G = (coupling/2) G_hat`` is the dimensionless dressing.
                 Only the scattered part enters; the measured (wa, gi)
                 absorb the free-space self-energy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import green, material
from .tensors import orientation_dyad


class PoleLocationError(RuntimeError):
    """A response pole left the lower-right frequency quadrant."""


@dataclass(frozen=True)
class DipoleModel:
    """Dipole parameters in omega_sp units.

    coupling is the dimensionless atom-field constant
    ``alpha0 omega_sp^3 / (eps0 c^3)``; for a two-level atom it fixes the
    free-space radiative rate ``gamma_free = coupling wa^4 / (2 pi)`` and
    vice versa.
    """

    omega_a: float
    kind: str = "two-level"
    gamma_free: float = 0.0
    gamma_intrinsic: float = 0.0
    coupling: float = 0.0
    theta: float | None = None
    phi: float | None = None

    def __post_init__(self):
        if self.omega_a <= 0.0:
            raise ValueError("transition frequency must be positive")
        if self.kind not in ("two-level", "oscillator"):
            raise ValueError(f"unknown dipole kind {self.kind!r}")
        if min(self.gamma_free, self.gamma_intrinsic, self.coupling) < 0.0:
            raise ValueError("rates and coupling must be non-negative")

    @classmethod
    def two_level(cls, omega_a, gamma_free=None, coupling=None, theta=None, phi=None):
        """Two-level atom; gamma_free and coupling fix each other through
        the radiative-rate relation when only one is given."""
        if gamma_free is None and coupling is None:
            gamma_free = 0.0
            coupling = 0.0
        elif gamma_free is None:
            gamma_free = coupling * omega_a**4 / (2.0 * np.pi)
        elif coupling is None:
            coupling = 2.0 * np.pi * gamma_free / omega_a**4
        return cls(omega_a=omega_a, kind="two-level", gamma_free=gamma_free,
                   coupling=coupling, theta=theta, phi=phi)

    @classmethod
    def oscillator(cls, omega_a, gamma_intrinsic, coupling=0.0, theta=None, phi=None):
        return cls(omega_a=omega_a, kind="oscillator",
                   gamma_intrinsic=gamma_intrinsic, coupling=coupling,
                   theta=theta, phi=phi)

    @property
    def dyad(self):
        """Orientation dyad N (n n or the isotropic 1/3)."""
        return orientation_dyad(self.theta, self.phi)

    @property
    def isotropic(self):
        return self.theta is None

    @property
    def direction(self):
        if self.isotropic:
            raise ValueError("isotropic model has no single direction")
        return np.array([np.sin(self.theta) * np.cos(self.phi),
                         np.sin(self.theta) * np.sin(self.phi),
                         np.cos(self.theta)])


@dataclass(frozen=True)
class DressedRates:
    """Position-dependent transition frequency and decay rate (omega_sp
    units) of the two-level model."""

    omega_tilde: float
    gamma_a: float

    def __post_init__(self):
        if self.omega_tilde <= 0.0:
            raise ValueError("renormalized frequency must stay positive")
        if self.gamma_a < 0.0:
            raise ValueError("decay rate must be non-negative")


@dataclass(frozen=True)
class PoleSet:
    """Lower-right-quadrant poles and tensor residues of a polarizability.

    The representation ``alpha(w) = sum_i [R_i/(w - W_i) - R_i*/(w + W_i*)]``
    is exact for the rational models in this package.
    """

    poles: tuple
    residues: tuple      # 3x3 arrays matching poles

    def __post_init__(self):
        for p in self.poles:
            if not (p.real > 0.0 and p.imag < 0.0):
                raise PoleLocationError(
                    f"pole {p} is not in the lower-right quadrant")

    def evaluate(self, omega):
        """Reconstruct alpha(omega) from the pole representation."""
        w = np.asarray(omega, dtype=complex)
        out = np.zeros(w.shape + (3, 3), dtype=complex)
        for p, r in zip(self.poles, self.residues):
            r = np.asarray(r)
            out += r / (w[..., None, None] - p)
            out -= np.conj(r) / (w[..., None, None] + np.conj(p))
        return out


# ---------------------------------------------------------------------------
# scalar response functions
# ---------------------------------------------------------------------------

def two_level_scalar(omega, omega_a, rates: DressedRates):
    """Second-order two-level scalar response
    ``wa wt / (wt^2 - (w + i ga)^2)``."""
    w = np.asarray(omega, dtype=complex)
    wt, ga = rates.omega_tilde, rates.gamma_a
    return omega_a * wt / (wt * wt - (w + 1j * ga) ** 2)


def oscillator_scalar(omega, omega_a, gamma_intrinsic):
    """Damped-oscillator scalar response ``wa^2/(wa^2 - w^2 - i gi w)``."""
    w = np.asarray(omega, dtype=complex)
    return omega_a**2 / (omega_a**2 - w * w - 1j * gamma_intrinsic * w)


def _tensorize(scalar, model: DipoleModel):
    return 3.0 * np.asarray(scalar)[..., None, None] * model.dyad


def two_level_polarizability(omega, rates: DressedRates, model: DipoleModel):
    """alpha^(2)(w) as a 3x3 tensor (alpha0 units).  The bare response is
    the ga -> 0 limit."""
    return _tensorize(two_level_scalar(omega, model.omega_a, rates), model)


def intrinsic_oscillator_polarizability(omega, model: DipoleModel):
    """Intrinsically damped oscillator tensor (alpha0 units)."""
    return _tensorize(oscillator_scalar(omega, model.omega_a, model.gamma_intrinsic), model)


def vacuum_oscillator_polarizability(omega, model: DipoleModel):
    """alpha_vac of the oscillator: the intrinsically damped response (the
    measured parameters absorb the free-space self-energy)."""
    return intrinsic_oscillator_polarizability(omega, model)


def dressed_oscillator_polarizability(omega, z, model: DipoleModel,
                                      surface: material.SurfaceModel,
                                      dressing="fresnel"):
    """Oscillator dressed by the scattered Green tensor at height z.

    Per-axis denominator ``wa^2 - w^2 - i gi w - wa^2 G_ii(z, w)`` with
    ``G = (coupling/2) G_hat``; for a fixed orientation the projected
    self-energy ``3 wa^2 n.G.n`` dresses the single rank-1 response.
    Equivalent to the multiple-reflection resummation
    ``[1 - alpha_vac g]^-1 alpha_vac``.  ``dressing`` selects the full
    Fresnel coincident tensor or its quasi-static closed form.
    """
    if z <= 0.0:
        raise ValueError("z > 0 required")
    w = complex(omega)
    if dressing == "fresnel":
        ghat, _ = green.coincident_green(z, w, surface)
    elif dressing == "quasistatic":
        ghat = green.quasistatic_coincident(z, w, surface)
    else:
        raise ValueError(f"unknown dressing {dressing!r}")
    gdress = 0.5 * model.coupling * np.diag(ghat)
    dv = model.omega_a**2 - w * w - 1j * model.gamma_intrinsic * w
    if model.isotropic:
        axes = model.omega_a**2 / (dv - model.omega_a**2 * gdress)
        return np.diag(axes)
    n = model.direction
    proj = np.sum(n * n * gdress)
    scalar = model.omega_a**2 / (dv - 3.0 * model.omega_a**2 * proj)
    return 3.0 * scalar * np.outer(n, n)


# ---------------------------------------------------------------------------
# surface-modified rates and poles
# ---------------------------------------------------------------------------

def _axis_weights(model: DipoleModel):
    if model.isotropic:
        return np.full(3, 1.0 / 3.0)
    n = model.direction
    return n * n


def surface_modified_rates(z, model: DipoleModel, surface: material.SurfaceModel,
                           include_shift=True):
    """Wigner-Weisskopf rates of the two-level atom at height z.

    gamma_a = gamma_free + (3/2) wa coupling (n . Im G_hat(z, wa) . n),
    omega_tilde = wa - (3/4) wa coupling (n . Re G_hat(z, wa) . n),
    with the isotropic average Tr/3 for unoriented dipoles and the
    free-space Lamb shift absorbed into wa.  ``include_shift=False``
    pins omega_tilde = wa (used by the distance-scan scenario).
    """
    if z <= 0.0:
        raise ValueError("z > 0 required")
    ghat, _ = green.coincident_green(z, model.omega_a, surface, rtol=1e-9)
    weights = _axis_weights(model)
    gamma = model.gamma_free + 1.5 * model.omega_a * model.coupling * float(
        np.sum(weights * np.diag(ghat).imag))
    gamma = max(gamma, 0.0)
    if include_shift:
        shift = 0.75 * model.omega_a * model.coupling * float(
            np.sum(weights * np.diag(ghat).real))
        omega_tilde = model.omega_a - shift
    else:
        omega_tilde = model.omega_a
    return DressedRates(omega_tilde=omega_tilde, gamma_a=gamma)


def _dressed_quartic_poles(wa, gi, gam, wcoef):
    """Roots of (wa^2 - w^2 - i gi w)(w^2 + i Gam w - 1) + wa^2 wcoef,
    the quasi-statically dressed denominator cleared of the Drude
    reflection; returns the two lower-right poles and their residues of
    the scalar response wa^2 (w(w+iGam)-1) / P(w)."""
    c = [-1.0,
         -1j * (gam + gi),
         1.0 + gi * gam + wa * wa,
         1j * (gi + wa * wa * gam),
         wa * wa * (wcoef - 1.0)]
    roots = np.roots(c)
    sel = [r for r in roots if r.real > 1e-12]
    if len(sel) != 2:
        raise PoleLocationError(
            f"expected 2 right-half-plane poles, found {len(sel)}: {roots}")
    out = []
    for r0 in sel:
        if r0.imag >= 0.0:
            raise PoleLocationError(f"pole {r0} is not damped")
        num = wa * wa * (r0 * (r0 + 1j * gam) - 1.0)
        dp = 4.0 * c[0] * r0**3 + 3.0 * c[1] * r0**2 + 2.0 * c[2] * r0 + c[3]
        out.append((complex(r0), complex(num / dp)))
    return out


def poles_and_residues(model: DipoleModel, rates: DressedRates | None = None,
                       z=None, surface=None):
    """Pole set of the model's polarizability.

    two-level: the analytic pair (wt - i ga, residue -(3/2) wa N).
    oscillator, undressed: the analytic pair of the damped oscillator.
    oscillator at height z: polynomial roots of the quasi-statically
    dressed denominator (exact for that rational dressing); the atomic
    and plasmonic pole families both enter with their residues.
    """
    if model.kind == "two-level":
        if rates is None:
            rates = DressedRates(omega_tilde=model.omega_a,
                                 gamma_a=max(model.gamma_free, 0.0))
        if rates.gamma_a <= 0.0:
            raise PoleLocationError("undamped two-level response has poles on "
                                    "the real axis; no pole set exists")
        pole = rates.omega_tilde - 1j * rates.gamma_a
        return PoleSet(poles=(pole,), residues=(-1.5 * model.omega_a * model.dyad,))

    wa, gi = model.omega_a, model.gamma_intrinsic
    if z is None:
        if gi <= 0.0:
            raise PoleLocationError("undamped oscillator has poles on the real axis")
        if gi >= 2.0 * wa:
            raise PoleLocationError("overdamped oscillator: poles leave Re > 0")
        w1 = np.sqrt(wa * wa - 0.25 * gi * gi)
        pole = w1 - 0.5j * gi
        return PoleSet(poles=(pole,),
                       residues=(-3.0 * wa * wa / (2.0 * w1) * model.dyad,))

    if surface is None or surface.kind != "drude":
        raise ValueError("dressed-oscillator poles need a Drude surface model")
    weights = _axis_weights(model)
    gam = surface.gamma
    poles, residues = [], []
    if model.isotropic:
        # the xy and z axes dress with different image strengths
        for mask, m_ax in ((np.diag([1.0, 1.0, 0.0]), 1.0),
                           (np.diag([0.0, 0.0, 1.0]), 2.0)):
            wcoef = model.coupling * m_ax / (32.0 * np.pi * z**3)
            for p, res in _dressed_quartic_poles(wa, gi, gam, wcoef):
                poles.append(p)
                residues.append(res * mask)
    else:
        proj = float(np.sum(weights * np.array([1.0, 1.0, 2.0])))
        wcoef = 3.0 * model.coupling * proj / (32.0 * np.pi * z**3)
        dyad = 3.0 * model.dyad
        for p, res in _dressed_quartic_poles(wa, gi, gam, wcoef):
            poles.append(p)
            residues.append(res * dyad)
    return PoleSet(poles=tuple(poles), residues=tuple(residues))
