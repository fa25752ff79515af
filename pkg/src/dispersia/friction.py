"""Quantum-friction engines.

All forces are returned in units of F0 (positive scale), negative for a
drag on motion in +x; reversing the velocity flips the sign by
construction.  The near-field scattered Green tensor is the default
response for every friction operation; its transverse (k_y) integral is
carried out analytically against the dipole dyad, leaving radial
integrands weighted by ``A0 K0 + A2 K2`` of ``2 k_x z``:

    second order   F/F0 = -(wa/6 pi) int_{wa/v}^inf dk k^3 r_I(k v - wa) B(2kz)
    FDT windowed   F/F0 = -(1/3 pi^2) int_0^inf dk k^3 B(2kz) W(k v)
    W(Om)               = int_0^Om alpha_I(Om - w) r_I(w) dw

with ``B(x) = A0 K0(x) + A2 K2(x)`` and the orientation factors
A0 = (3/2)[1 + (3 cos^2 phi - 2) sin^2 theta],
A2 = (3/2)[1 - cos^2 phi sin^2 theta] (isotropic averages 1, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, material, quad
from .material import SurfaceModel
from .polarizability import DipoleModel, PoleSet
from .quad import QuadSpec, integrate_adaptive

_GLX, _GLW = quad.gauss_legendre(24)


class HigherOrderVelocityRegime(RuntimeError):
    """The cubic law does not apply: a low-frequency slope vanishes."""


class RegimeMismatchError(ValueError):
    """Asymptotic expression requested outside its parameter regime."""


@dataclass(frozen=True)
class OrientationFactors:
    a0: float
    a2: float


def orientation_factors(theta=None, phi=None):
    """Closed-form orientation factors of the dipole dyad after the
    transverse wavevector integral; ``None`` angles give the isotropic
    averages (1, 1)."""
    if theta is None:
        return OrientationFactors(1.0, 1.0)
    st2 = math.sin(theta) ** 2
    c2 = math.cos(phi) ** 2
    a0 = 1.5 * (1.0 + (3.0 * c2 - 2.0) * st2)
    a2 = 1.5 * (1.0 - c2 * st2)
    return OrientationFactors(a0, a2)


def orientation_kernel_positive(u_grid=None, n_angles=41):
    """Check that A0 K0(2u) + A2 K2(2u) stays non-negative over the angle
    grid (A0 alone goes negative for dipoles along y; the Bessel
    combination must not).  Returns the minimum found."""
    if u_grid is None:
        u_grid = np.geomspace(0.05, 20.0, 25)
    thetas = np.linspace(0.0, np.pi, n_angles)
    phis = np.linspace(0.0, 2.0 * np.pi, n_angles, endpoint=False)
    k0 = quad.bessel_k(0, 2.0 * u_grid, scaled=True)
    k2 = quad.bessel_k(2, 2.0 * u_grid, scaled=True)
    worst = np.inf
    for th in thetas:
        for ph in phis:
            f = orientation_factors(th, ph)
            worst = min(worst, float(np.min(f.a0 * k0 + f.a2 * k2)))
    return worst


@dataclass(frozen=True)
class FrictionScenario:
    """Moving-dipole configuration: velocity v (units of c) parallel to
    the surface along x, height z (units of c/omega_sp)."""

    v: float
    z: float
    surface: SurfaceModel
    dipole: DipoleModel

    def __post_init__(self):
        if self.z <= 0.0:
            raise ValueError("z > 0 required")
        if abs(self.v) >= 1.0:
            raise ValueError("non-relativistic scenario requires |v| < 1")

    @property
    def factors(self):
        return orientation_factors(self.dipole.theta, self.dipole.phi)


@dataclass(frozen=True)
class FrictionResult:
    force: float                  # F/F0, <= 0 for v > 0
    error: float
    method: str
    underflow: bool = False
    note: str = ""


@dataclass(frozen=True)
class FdtFrictionResult:
    force: float
    error: float
    cubic_coefficient: float      # F/F0 ~ -coeff * v^3 as v -> 0
    cubic_force: float            # the cubic law evaluated at this v
    method: str = "fdt-windowed"


def _signed(value, v):
    return -value if v > 0.0 else value


def friction_plasma_closed_form(scenario: FrictionScenario):
    """Second-order drag in the lossless-surface limit, where the
    reflection spectrum collapses onto the plasmon resonance:

        |F|/F0 = wa/(12 v^4) (1 + wa)^3 [A0 K0(2u) + A2 K2(2u)],
        u = (z wa_sp / v)(1 + wa/wa_sp).

    Evaluated with scaled Bessel functions so the product with e^{-2u}
    underflows gracefully (force 0, flag set) instead of overflowing.
    """
    v = abs(scenario.v)
    if v == 0.0:
        return FrictionResult(0.0, 0.0, "plasma-closed-form")
    wa = scenario.dipole.omega_a
    u = scenario.z * (1.0 + wa) / v
    f = scenario.factors
    k0e, k1e = _kernels.k0e_k1e(np.array([2.0 * u]))
    k2e = k0e + 2.0 * k1e / (2.0 * u)
    damp = math.exp(-2.0 * u) if 2.0 * u < 745.0 else 0.0
    mag = (wa / (12.0 * v**4)) * (1.0 + wa) ** 3 * damp * float(
        f.a0 * k0e[0] + f.a2 * k2e[0])
    return FrictionResult(_signed(mag, scenario.v), 0.0, "plasma-closed-form",
                          underflow=(damp == 0.0 and u > 1.0))


def friction_second_order_numeric(scenario: FrictionScenario, rtol=1e-8):
    """Second-order drag with the full Drude reflection spectrum.

    Zero velocity returns exactly 0 without integration (empty Doppler
    window); a lossless surface is redirected to the closed form.
    """
    v = abs(scenario.v)
    if v == 0.0:
        return FrictionResult(0.0, 0.0, "second-order")
    if scenario.surface.kind == "drude" and scenario.surface.gamma == 0.0:
        base = friction_plasma_closed_form(scenario)
        return FrictionResult(base.force, base.error, base.method,
                              base.underflow,
                              note="lossless surface: redirected to closed form")
    wa = scenario.dipole.omega_a
    z = scenario.z
    gam = scenario.surface.gamma
    f = scenario.factors

    if scenario.surface.kind != "drude":
        raise ValueError("second-order numeric force needs a Drude surface")

    def integrand(kx):
        return _kernels.second_order_integrand(kx, v, wa, z, gam, f.a0, f.a2)

    lo = wa / v
    kres = (1.0 + wa) / v
    width = max(gam, 1e-9) / v
    pts = sorted({p for s in (-300.0, -30.0, -3.0, 3.0, 30.0, 300.0)
                  for p in (kres + s * width,) if p > lo} | {kres})
    spec = QuadSpec(rtol=rtol, scale=max(1.0 / (2.0 * z), kres / 4.0))
    val, err = integrate_adaptive(integrand, (lo, np.inf), spec, points=pts)
    mag = (wa / (6.0 * np.pi)) * val
    return FrictionResult(_signed(mag, scenario.v), (wa / (6.0 * np.pi)) * err,
                          "second-order")


def _bessel_moment(power, z, factors, rtol=1e-10):
    """int_0^inf k^power [A0 K0 + A2 K2](2 k z) dk by quadrature."""

    def f(k):
        arg = 2.0 * k * z
        k0e, k1e = _kernels.k0e_k1e(arg)
        k2e = k0e + 2.0 * k1e / arg
        return k**power * np.exp(-arg) * (factors.a0 * k0e + factors.a2 * k2e)

    val, err = integrate_adaptive(f, (1e-290, np.inf),
                                  QuadSpec(rtol=rtol, scale=1.0 / z))
    return val, err


def friction_fdt_low_velocity(scenario: FrictionScenario, rtol=1e-8):
    """Doppler-windowed friction force from the equilibrium spectrum,
    plus the leading cubic law from the zero-frequency slopes.

    Requires Ohmic damping on both sides (intrinsic oscillator damping
    and surface relaxation); otherwise the cubic law is not the leading
    order and ``HigherOrderVelocityRegime`` is raised.
    """
    v = abs(scenario.v)
    dip = scenario.dipole
    surf = scenario.surface
    if dip.kind != "oscillator":
        raise ValueError("the windowed FDT force uses the intrinsically "
                         "damped oscillator model")
    alpha_slope = dip.gamma_intrinsic / dip.omega_a**2
    r_slope = surf.ohmic_r_slope
    if alpha_slope <= 0.0 or r_slope <= 0.0:
        raise HigherOrderVelocityRegime(
            "a zero-frequency slope vanishes (alpha_I' = %.3g, r_I' = %.3g); "
            "the velocity expansion starts beyond v^3" % (alpha_slope, r_slope))

    f = scenario.factors
    moment6, m_err = _bessel_moment(6, scenario.z, f)
    coeff = (alpha_slope * r_slope / 6.0) * moment6 / (3.0 * np.pi**2)
    if v == 0.0:
        return FdtFrictionResult(0.0, 0.0, coeff, 0.0)

    wa, gi, gam, z = dip.omega_a, dip.gamma_intrinsic, surf.gamma, scenario.z
    if surf.kind == "ohmic":
        # pure Ohmic surrogate: r_I = slope * w with no plasmon resonance
        def integrand(kx):
            out = np.empty_like(kx)
            for i, k in enumerate(np.atleast_1d(kx)):
                om = k * v
                w_nodes = 0.5 * om * (_GLX + 1.0)
                ai = _kernels._osc_alpha_imag_np(om - w_nodes, wa, gi)
                out[i] = 0.5 * om * np.sum(_GLW * ai * r_slope * w_nodes)
            arg = 2.0 * np.atleast_1d(kx) * z
            k0e, k1e = _kernels.k0e_k1e(arg)
            k2e = k0e + 2.0 * k1e / arg
            return np.atleast_1d(kx) ** 3 * np.exp(-arg) * (
                f.a0 * k0e + f.a2 * k2e) * out
    else:
        def integrand(kx):
            return _kernels.fdt_outer_integrand(kx, v, wa, gi, gam, z,
                                                f.a0, f.a2, _GLX, _GLW)

    pts = sorted(p for p in (wa / v, 1.0 / v, (1.0 + wa) / v)
                 if p < 2000.0 / z)
    spec = QuadSpec(rtol=rtol, scale=1.0 / (2.0 * z))
    val, err = integrate_adaptive(integrand, (1e-290, np.inf), spec, points=pts)
    mag = val / (3.0 * np.pi**2)
    return FdtFrictionResult(_signed(mag, scenario.v), err / (3.0 * np.pi**2),
                             coeff, _signed(coeff * v**3, scenario.v))


def friction_asymptotic(scenario: FrictionScenario, regime):
    """Closed low-velocity asymptotics.

    "radiative": lossless surface, exponentially small force with the
    plasmon-shifted exponent.  "surface-ohmic": Drude relaxation only
    (atom undamped).  "intrinsic": both dampings finite, cubic law.
    """
    v = abs(scenario.v)
    if v == 0.0:
        return 0.0
    wa = scenario.dipole.omega_a
    z = scenario.z
    gam = scenario.surface.gamma if scenario.surface.kind == "drude" \
        else scenario.surface.ohmic_slope
    gi = scenario.dipole.gamma_intrinsic

    if regime == "radiative":
        u = z * (1.0 + wa) / v
        mag = math.sqrt(np.pi * (wa / 12.0) ** 2 * (1.0 + wa) ** 5 /
                        (z * v**7)) * math.exp(-2.0 * u) if 2 * u < 745 else 0.0
        return _signed(mag, scenario.v)
    if regime == "surface-ohmic":
        if gam <= 0.0:
            raise RegimeMismatchError("surface-ohmic asymptote needs Gamma > 0")
        b = 2.0 * z * wa / v
        mag = (gam / 24.0) * math.sqrt(wa**7 / (np.pi * z**5 * v**3)) \
            * (1.0 + 5.0 * v / (2.0 * z * wa)) * (math.exp(-b) if b < 745 else 0.0)
        return _signed(mag, scenario.v)
    if regime == "intrinsic":
        if gam <= 0.0 or gi <= 0.0:
            raise RegimeMismatchError(
                "cubic asymptote needs both Gamma > 0 and gamma > 0")
        mag = (45.0 / 16.0) * (gam / (24.0 * np.pi)) * (gi / wa**2) \
            * v**3 / z**7
        return _signed(mag, scenario.v)
    raise RegimeMismatchError(f"unknown regime {regime!r}")


@dataclass(frozen=True)
class QrtCancellationResult:
    f_qrt_linear: float
    f_nm_linear: float
    residual: float
    error: float


def friction_qrt_with_cancellation(scenario: FrictionScenario,
                                   poles: PoleSet, rtol=1e-9):
    """Linear-in-velocity force of the regression-theorem spectrum and the
    non-Markovian counter-term, via two independent frequency quadratures.

    route 1:  weight sum_i Re[i R_i/(W_i + w)^2] against r_I(w),
    route 2:  weight sum_i Re[i R_i/(W_i + w)]   against d r_I/d w
    (the second is the integration-by-parts form of the first; their sum
    must cancel to quadrature accuracy).
    """
    v = abs(scenario.v)
    if v == 0.0:
        return QrtCancellationResult(0.0, 0.0, 0.0, 0.0)
    surf = scenario.surface
    z = scenario.z
    weights = np.array([0.75 * np.pi, 0.25 * np.pi, np.pi])  # x, y, z angular
    radial = 3.0 / (4.0 * z**5)

    def p_weight(w):
        acc = np.zeros(w.shape + (3,))
        for pole, res in zip(poles.poles, poles.residues):
            d = np.real(1j * np.diagonal(np.asarray(res)) /
                        ((pole + w)[:, None] ** 2))
            acc += d
        return acc @ weights

    def q_weight(w):
        acc = np.zeros(w.shape + (3,))
        for pole, res in zip(poles.poles, poles.residues):
            acc += np.real(1j * np.diagonal(np.asarray(res)) /
                           (pole + w)[:, None])
        return acc @ weights

    def f_qrt(w):
        return material.quasistatic_reflection_imag(w, surf) * p_weight(w)

    def f_nm(w):
        return material.quasistatic_reflection_imag_deriv(w, surf) * q_weight(w)

    gam = max(surf.gamma if surf.kind == "drude" else 0.0, 1e-12)
    pts = sorted({1.0 + s * gam for s in (-300.0, -30.0, -3.0, 0.0, 3.0, 30.0, 300.0)
                  if 1.0 + s * gam > 0.0})
    spec = QuadSpec(rtol=rtol, scale=2.0)
    phi1, e1 = integrate_adaptive(f_qrt, (0.0, np.inf), spec, points=pts)
    phi2, e2 = integrate_adaptive(f_nm, (0.0, np.inf), spec, points=pts)
    pref = v * radial / (6.0 * np.pi)
    f_qrt_lin = _signed(pref * phi1, scenario.v)
    f_nm_lin = -_signed(pref * phi2, scenario.v)
    return QrtCancellationResult(f_qrt_lin, f_nm_lin, f_qrt_lin + f_nm_lin,
                                 pref * (e1 + e2))
