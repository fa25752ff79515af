"""Scattered electromagnetic Green tensor of the planar half-space.

All quantities are dimensionless.  The k-resolved scattered tensor is
reported in units of ``omega_sp/(2 eps0 c)``, so

    g_hat(k, z, w) = kappa (r_p p+p- + (w^2/kappa^2) r_s ss) e^{-2 kappa z},

and the k-integrated coincident tensor and its z-derivative in units of
``omega_sp^3/(2 eps0 c^3)`` and ``omega_sp^4/(2 eps0 c^4)``:

    G_hat(z, w)  = int d^2k/(2 pi)^2  g_hat(k, z, w),
    D_hat(z, w)  = int d^2k/(2 pi)^2 (-kappa) g_hat(k, z, w).

``D_hat`` is the single-argument (field-point) z-derivative at
coincidence; the full derivative of the coincident tensor is twice it.
The vacuum part of the Green tensor is never computed: it drops from
friction by Lorentz invariance and contributes only a position-independent
self-energy to the stationary force, which the measured atomic parameters
already absorb.
"""

from __future__ import annotations

import numpy as np

from . import material
from .material import SurfaceModel
from .quad import QuadSpec, integrate_adaptive

#: spec'd radial truncation: exp(-2 kappa z) tail beyond k = 40/z is < 1e-30
KMAX_FACTOR = 40.0


def scattered_green_k(kx, ky, z, omega, surface: SurfaceModel,
                      quasistatic=False):
    """k-resolved scattered Green tensor (3x3 complex).

    Parameters
    ----------
    kx, ky : float
        In-plane wavevector components (omega_sp/c units).
    z : float
        Height above the surface (c/omega_sp units), > 0.
    omega : complex
        Frequency (omega_sp units); real axis or positive imaginary axis.
    surface : SurfaceModel
    quasistatic : bool
        Replace r_p by the k-independent quasi-static coefficient and
        kappa by k (near-field evaluation path).

    Notes
    -----
    Entries even in k are real on the positive imaginary frequency axis;
    the odd-in-k (x-z and y-z) entries are imaginary there, consistent
    with the crossing relation of the k-resolved tensor.
    """
    if z <= 0.0:
        raise ValueError("the scattered tensor lives above the surface: z > 0")
    k = np.hypot(kx, ky)
    w = complex(omega)
    if k == 0.0:
        return np.zeros((3, 3), dtype=complex)
    if quasistatic:
        kap = complex(k)
        rp = material.quasistatic_reflection(w, surface)
        rs = 0.0 + 0.0j
    else:
        kap = complex(material.vacuum_kappa(k, w))
        rp = complex(material.fresnel_reflection(w, k, "p", surface))
        rs = complex(material.fresnel_reflection(w, k, "s", surface))

    ex, ey = kx / k, ky / k
    # p+ p- and s s dyads from the polarization vectors
    # p_pm = (k/kappa) z_hat -/+ i k_hat, s = k_hat x z_hat
    pp = np.array([
        [ex * ex, ex * ey, -1j * (k / kap) * ex],
        [ex * ey, ey * ey, -1j * (k / kap) * ey],
        [1j * (k / kap) * ex, 1j * (k / kap) * ey, k * k / (kap * kap)],
    ], dtype=complex)
    ss = np.array([
        [ey * ey, -ex * ey, 0.0],
        [-ex * ey, ex * ex, 0.0],
        [0.0, 0.0, 0.0],
    ], dtype=complex)
    pref = kap * np.exp(-2.0 * kap * z)
    return pref * (rp * pp + (w * w / (kap * kap)) * rs * ss)


def nearfield_green_imag(kx, ky, z, omega, surface: SurfaceModel):
    """Near-field imaginary part, ``r_I(w) k e^{-2kz} diag(kx^2/k^2,
    ky^2/k^2, 1)`` (real, symmetric; zero tensor at k = 0)."""
    if z <= 0.0:
        raise ValueError("z > 0 required")
    k = np.hypot(kx, ky)
    if k == 0.0:
        return np.zeros((3, 3))
    r_i = float(material.quasistatic_reflection_imag(float(omega), surface))
    diag = np.array([kx * kx / (k * k), ky * ky / (k * k), 1.0])
    return r_i * k * np.exp(-2.0 * k * z) * np.diag(diag)


# ---------------------------------------------------------------------------
# coincident k-integrals
# ---------------------------------------------------------------------------

def _radial_integrands(k, z, omega, surface, quasistatic):
    """Radial integrands of (G_xx, G_zz) after the analytic angular
    integral; G_yy = G_xx and off-diagonals vanish at coincidence."""
    w = complex(omega)
    if quasistatic:
        kap = k.astype(complex)
        rp = material.quasistatic_reflection(w, surface) * np.ones_like(kap)
        rs = np.zeros_like(kap)
    else:
        kap = material.vacuum_kappa(k, w)
        rp = material.fresnel_reflection(w, k, "p", surface)
        rs = material.fresnel_reflection(w, k, "s", surface)
    damp = np.exp(-2.0 * kap * z)
    gxx = (1.0 / (4.0 * np.pi)) * k * kap * damp * (rp + (w * w / (kap * kap)) * rs)
    gzz = (1.0 / (2.0 * np.pi)) * (k**3 / kap) * damp * rp
    return gxx, gzz, kap


def _spp_kappa(w, surface):
    """Medium-side location of the surface-plasmon pole in the kappa
    variable, if it sits near the real axis (used as a breakpoint)."""
    eps = material.drude_permittivity(w, surface)
    s = eps / (eps + 1.0)
    if np.real(s) <= 1.0:
        return None
    kspp2 = np.real(s) * np.real(w) ** 2
    return float(np.sqrt(kspp2 - np.real(w) ** 2))


def _coincident_real_freq(z, w, surface, derivative, rtol):
    """Full-Fresnel coincident integral at real frequency.

    Parametrized by the vacuum decay constant: propagating region
    kappa = -i p with k = sqrt(w^2 - p^2), evanescent region kappa real
    with k = sqrt(w^2 + kappa^2).  The measure dk = (p/k) dp removes the
    1/kappa branch-point singularity of the zz component analytically.
    """
    wr = abs(w.real)
    sgn = 1.0 if w.real > 0.0 else -1.0
    kapmax = KMAX_FACTOR / z

    def region_prop(p):
        p = np.asarray(p, dtype=float)
        kap = -1j * sgn * p
        k = np.sqrt(np.maximum(wr * wr - p * p, 0.0))
        kap1 = material.medium_kappa(k, w, surface)
        e2 = complex(w) * (complex(w) + 1j * surface.gamma)
        rp = (kap * (e2 - 2.0) - kap1 * e2) / (kap * (e2 - 2.0) + kap1 * e2)
        rs = (kap - kap1) / (kap + kap1)
        damp = np.exp(-2.0 * kap * z)
        # per-dp integrands; p/kappa = i sgn exactly
        gxx = damp * (p * kap * rp + w * w * rs * (1j * sgn)) / (4.0 * np.pi)
        gzz = damp * (1j * sgn) * k * k * rp / (2.0 * np.pi)
        if derivative:
            gxx = -kap * gxx
            gzz = -kap * gzz
        return np.stack([gxx, gzz], axis=-1)

    def region_evan(kap):
        kap = np.asarray(kap, dtype=float)
        k = np.sqrt(wr * wr + kap * kap)
        kap1 = material.medium_kappa(k, w, surface)
        e2 = complex(w) * (complex(w) + 1j * surface.gamma)
        rp = (kap * (e2 - 2.0) - kap1 * e2) / (kap * (e2 - 2.0) + kap1 * e2)
        rs = (kap - kap1) / (kap + kap1)
        damp = np.exp(-2.0 * kap * z)
        gxx = damp * (kap * kap * rp + w * w * rs) / (4.0 * np.pi)
        gzz = damp * k * k * rp / (2.0 * np.pi)
        if derivative:
            gxx = -kap * gxx
            gzz = -kap * gzz
        return np.stack([gxx, gzz], axis=-1)

    spec = QuadSpec(rtol=rtol, max_intervals=4000)
    val_a, err_a = integrate_adaptive(region_prop, (0.0, wr), spec)
    pts = []
    kspp = _spp_kappa(w, surface)
    if kspp is not None and 0.0 < kspp < kapmax:
        pts = [kspp]
    val_b, err_b = integrate_adaptive(region_evan, (0.0, kapmax), spec, points=pts)
    val = val_a + val_b
    return np.diag([val[0], val[0], val[1]]), err_a + err_b


def coincident_green(z, omega, surface: SurfaceModel, derivative=False,
                     quasistatic=False, rtol=1e-10):
    """Coincident scattered Green tensor diag(G_xx, G_yy, G_zz) or its
    field-point z-derivative (``derivative=True``).

    Returns a real array on the imaginary frequency axis, complex on the
    real axis.  Radial quadrature truncated where exp(-2 kappa z) has
    decayed below 1e-30 (kappa = 40/z).
    """
    if z <= 0.0:
        raise ValueError("z > 0 required")
    w = complex(omega)
    imag_axis = (w.real == 0.0 and w.imag >= 0.0)
    if not imag_axis and not quasistatic and w.imag == 0.0 and w.real != 0.0:
        return _coincident_real_freq(z, w, surface, derivative, rtol)
    kmax = KMAX_FACTOR / z

    def integrand(k):
        gxx, gzz, kap = _radial_integrands(k, z, omega, surface, quasistatic)
        if derivative:
            gxx = -kap * gxx
            gzz = -kap * gzz
        out = np.stack([gxx, gzz], axis=-1)
        return out.real if imag_axis else out

    spec = QuadSpec(rtol=rtol, max_intervals=4000)
    val, err = integrate_adaptive(integrand, (0.0, kmax), spec)
    gxx, gzz = val[0], val[1]
    return np.diag([gxx, gxx, gzz]), err


def coincident_green_zderiv(z, omega, surface: SurfaceModel,
                            quasistatic=False, rtol=1e-10):
    """Field-point z-derivative of the coincident scattered tensor
    (diagonal 3x3).  The derivative acts analytically inside the k
    integrand, never by numerical differencing."""
    return coincident_green(z, omega, surface, derivative=True,
                            quasistatic=quasistatic, rtol=rtol)


def _imag_axis_batch(z, xi, surface, derivative, rtol=1e-9):
    """(G_xx, G_zz) or derivatives on a batch of imaginary frequencies.

    Vectorized panel quadrature in the mapped variable t with
    k = (1/z) t/(1-t): all xi nodes share panels, refined until every
    xi meets the tolerance.  Used by the force engines, where the outer
    xi quadrature supplies batches of 15 nodes.
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    scale = 1.0 / z
    tmax = KMAX_FACTOR / (KMAX_FACTOR + 1.0)     # k = 40/z

    from .quad import _NODES, _WK, _WGFULL

    def panel_eval(t0, t1):
        mid = 0.5 * (t0 + t1)
        hw = 0.5 * (t1 - t0)
        t = mid + hw * _NODES
        k = scale * t / (1.0 - t)
        jac = scale / (1.0 - t) ** 2
        kap = np.sqrt(k[:, None] ** 2 + xi[None, :] ** 2)
        e2 = xi * (xi + surface.gamma)
        kap1 = np.sqrt(k[:, None] ** 2 + xi[None, :] ** 2
                       + material.OMEGA_P**2 * np.where(xi + surface.gamma > 0.0,
                                                        xi / np.maximum(xi + surface.gamma, 1e-300),
                                                        0.0)[None, :])
        # r_p via e2 = xi(xi+Gamma): regular at xi = 0
        num = kap * (e2[None, :] + material.OMEGA_P**2) - kap1 * e2[None, :]
        den = kap * (e2[None, :] + material.OMEGA_P**2) + kap1 * e2[None, :]
        rp = num / den
        rs = (kap - kap1) / (kap + kap1)
        damp = np.exp(-2.0 * kap * z)
        kk = k[:, None]
        gxx = (1.0 / (4.0 * np.pi)) * kk * kap * damp * (rp + (xi[None, :] ** 2 / kap**2) * (-rs))
        gzz = (1.0 / (2.0 * np.pi)) * (kk**3 / kap) * damp * rp
        if derivative:
            gxx = -kap * gxx
            gzz = -kap * gzz
        fx = jac[:, None] * gxx
        fz = jac[:, None] * gzz
        valx = hw * np.tensordot(_WK, fx, axes=(0, 0))
        valz = hw * np.tensordot(_WK, fz, axes=(0, 0))
        gx = hw * np.tensordot(_WGFULL, fx, axes=(0, 0))
        gz = hw * np.tensordot(_WGFULL, fz, axes=(0, 0))
        err = np.maximum(np.abs(valx - gx), np.abs(valz - gz))
        return valx, valz, err

    panels = [(tmax * i / 8.0, tmax * (i + 1) / 8.0) for i in range(8)]
    vals = [panel_eval(a, b) for a, b in panels]
    for _ in range(60):
        vx = np.sum([v[0] for v in vals], axis=0)
        vz = np.sum([v[1] for v in vals], axis=0)
        errs = np.sum([v[2] for v in vals], axis=0)
        bound = rtol * np.maximum(np.abs(vx), np.abs(vz)) + 1e-300
        if np.all(errs <= bound):
            break
        worst = int(np.argmax([float(np.max(v[2])) for v in vals]))
        a, b = panels[worst]
        m = 0.5 * (a + b)
        panels[worst:worst + 1] = [(a, m), (m, b)]
        vals[worst:worst + 1] = [panel_eval(a, m), panel_eval(m, b)]
    else:
        vx = np.sum([v[0] for v in vals], axis=0)
        vz = np.sum([v[1] for v in vals], axis=0)
        errs = np.sum([v[2] for v in vals], axis=0)
    return vx, vz, float(np.max(errs))


def coincident_batch_imag(z, xi, surface: SurfaceModel, derivative=True,
                          rtol=1e-9):
    """Batched (over xi) coincident tensor components on the imaginary
    axis.  Returns (G_xx, G_zz, err) with arrays matching xi; with
    ``derivative`` they are the field-point z-derivative components."""
    return _imag_axis_batch(z, xi, surface, derivative, rtol)


def quasistatic_coincident(z, omega, surface: SurfaceModel, derivative=False):
    """Closed form of the quasi-static coincident tensor.

    G_hat = r(w) diag(1, 1, 2) / (16 pi z^3); the field-point derivative
    is -3 r(w) diag(1, 1, 2) / (32 pi z^4).  Exact radial moments of
    k e^{-2kz}, used by the pole finder and as a test oracle.
    """
    if z <= 0.0:
        raise ValueError("z > 0 required")
    r = material.quasistatic_reflection(omega, surface)
    base = np.diag([1.0, 1.0, 2.0]).astype(complex)
    if derivative:
        return -3.0 * r * base / (32.0 * np.pi * z**4)
    return r * base / (16.0 * np.pi * z**3)
