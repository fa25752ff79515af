"""Stationary dipole correlators and power spectra.

Dimensionless conventions: spectra in units of ``hbar alpha0`` as
functions of frequency in omega_sp, correlators in units of
``hbar alpha0 omega_sp`` as functions of ``tau`` in 1/omega_sp, so that
``C(tau) = int dw e^{-i w tau} S(w)``.

The exact (fluctuation-dissipation) spectrum at T = 0 is
``S(w) = theta(w) alpha_Im(w) / pi``; the regression-theorem spectrum is
the Lorentzian of the exponentially decaying correlator.  The contour
decomposition of C(tau) splits a residue sum of decaying exponentials
from a branch integral along the negative imaginary frequency axis whose
long-time limit is the power-law tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .polarizability import (DipoleModel, DressedRates, PoleSet,
                             intrinsic_oscillator_polarizability,
                             poles_and_residues, two_level_polarizability)
from .quad import QuadSpec, integrate_adaptive


@dataclass(frozen=True)
class TailParams:
    """Low-frequency law ``alpha_I^s ~ a w^(2m+1)`` of the symmetric
    response; the correlator tail is
    ``(hbar/pi) a (-1)^(m+1) (2m+1)! / tau^(2(m+1))``.

    ``m is None`` marks an undamped model with no tail.
    """

    m: int | None
    a_coeff: np.ndarray | None

    @property
    def has_tail(self):
        return self.m is not None


@dataclass(frozen=True)
class SpectrumModel:
    """Bundle of the ingredients the spectrum/correlator operations need:
    the method tag, the polarizability evaluator, its pole set, and the
    analytic low-frequency tail parameters."""

    method: str                       # "fdt" | "qrt"
    model: DipoleModel
    rates: DressedRates | None = None
    alpha: Callable | None = None     # alpha(omega) -> (..., 3, 3), alpha0 units
    poles: PoleSet | None = None
    tail: TailParams | None = None

    def __post_init__(self):
        if self.method not in ("fdt", "qrt"):
            raise ValueError(f"unknown spectrum method {self.method!r}")


def make_spectrum_model(method, model: DipoleModel, rates: DressedRates | None = None):
    """Assemble a SpectrumModel for the two rational dipole models."""
    if model.kind == "two-level":
        if rates is None:
            rates = DressedRates(omega_tilde=model.omega_a,
                                 gamma_a=max(model.gamma_free, 0.0))
        r = rates

        def alpha(w):
            return two_level_polarizability(w, r, model)

        poles = poles_and_residues(model, rates=r) if r.gamma_a > 0.0 else None
        wt, ga = r.omega_tilde, r.gamma_a
        if ga > 0.0:
            slope = 2.0 * model.omega_a * wt * ga / (wt * wt + ga * ga) ** 2
            tail = TailParams(m=0, a_coeff=3.0 * slope * model.dyad)
        else:
            tail = TailParams(m=None, a_coeff=None)
        return SpectrumModel(method, model, r, alpha, poles, tail)

    def alpha(w):
        return intrinsic_oscillator_polarizability(w, model)

    gi = model.gamma_intrinsic
    poles = poles_and_residues(model) if gi > 0.0 else None
    if gi > 0.0:
        slope = gi / model.omega_a**2
        tail = TailParams(m=0, a_coeff=3.0 * slope * model.dyad)
    else:
        tail = TailParams(m=None, a_coeff=None)
    return SpectrumModel(method, model, None, alpha, poles, tail)


def power_spectrum(omega, sm: SpectrumModel):
    """Power spectrum tensor at real frequency (hbar*alpha0 units).

    fdt: ``theta(w) alpha_Im(w)/pi``, identically zero for w <= 0.
    qrt: Lorentzian ``(3 wa N / 2 pi) ga / ((wt - w)^2 + ga^2)``, nonzero
    at negative frequency.  Both Hermitian.
    """
    w = np.asarray(omega, dtype=float)
    if sm.method == "fdt":
        a = sm.alpha(w)
        a_im = (a - np.conj(np.swapaxes(a, -1, -2))) / 2j
        step = (w > 0.0).astype(float)[..., None, None]
        return step * a_im / np.pi
    rates = sm.rates
    if rates is None:
        raise ValueError("qrt spectrum needs dressed rates (two-level model)")
    lor = rates.gamma_a / ((rates.omega_tilde - w) ** 2 + rates.gamma_a**2)
    return (1.5 * sm.model.omega_a / np.pi) * lor[..., None, None] * sm.model.dyad


def normalized_spectrum(omega, sm: SpectrumModel):
    """Scalar spectrum normalized by the dipole dyad over pi*omega_tilde
    (the figure normalization): ``s(w) = S(w) . (d d / pi wt)^(-1)``."""
    rates = sm.rates
    if rates is None:
        raise ValueError("normalized spectra are defined for the two-level "
                         "model with dressed rates")
    full = power_spectrum(omega, sm)
    # S = s * dd/(pi wt) with dd = (3/2) wa N (alpha0 hbar units)
    scale = 1.5 * sm.model.omega_a / (np.pi * rates.omega_tilde)
    w = np.asarray(omega, dtype=float)
    trn = np.trace(sm.model.dyad)
    return np.trace(full, axis1=-2, axis2=-1).real / (scale * trn)


def correlator_residue_part(tau, sm: SpectrumModel):
    """Exponentially decaying (regression-theorem) part of C(tau):
    ``-sum_i R_i e^{-i W_i tau}``."""
    if sm.poles is None:
        raise ValueError("model has no pole set (undamped)")
    t = np.asarray(tau, dtype=float)
    out = np.zeros(t.shape + (3, 3), dtype=complex)
    for p, r in zip(sm.poles.poles, sm.poles.residues):
        out += -np.asarray(r) * np.exp(-1j * p * t)[..., None, None]
    return out


def correlator_branch_part(tau, sm: SpectrumModel, rtol=1e-8):
    """Non-Markovian branch integral of C(tau):
    ``(1/2 pi) int_0^inf dxi e^{-xi tau} [alpha(i xi) - alpha(-i xi)]``.

    Evaluated on an exponential grid so the damping-scale shoulder and the
    tail resolve on one pass.
    """
    t = float(tau)
    if t < 0.0:
        raise ValueError("tau >= 0 required")

    def integrand(xi):
        a_p = sm.alpha(1j * xi)
        a_m = sm.alpha(-1j * xi)
        delta = (a_p - a_m).real
        return np.exp(-xi * t)[:, None, None] * delta

    lo = 1e-12
    spec = QuadSpec(rtol=rtol, atol=1e-300, transform="exp")
    val, err = integrate_adaptive(integrand, (lo, np.inf), spec)
    return val / (2.0 * np.pi), err / (2.0 * np.pi)


def stationary_correlator(tau, sm: SpectrumModel, rtol=1e-8):
    """Stationary two-time dipole correlator C(tau) for tau >= 0.

    Residue sum plus branch integral; the result is complex symmetric,
    with ``C(-tau)`` given by the conjugate transpose.
    """
    if tau < 0.0:
        raise ValueError("tau >= 0 required; use C(-tau) = C(tau)^dagger")
    res = correlator_residue_part(tau, sm)
    branch, err = correlator_branch_part(tau, sm, rtol=rtol)
    return res + branch


def correlator_tail(tau, sm: SpectrumModel):
    """Analytic long-time tail ``(1/pi) a (-1)^(m+1) (2m+1)! / tau^(2m+2)``."""
    if sm.tail is None or not sm.tail.has_tail:
        raise ValueError("model has no power-law tail")
    m = sm.tail.m
    fact = float(math.factorial(2 * m + 1))
    sign = (-1.0) ** (m + 1)
    return (sign * fact / np.pi) * sm.tail.a_coeff / tau ** (2 * m + 2)


def correlator_equal_time_from_spectrum(sm: SpectrumModel, rtol=1e-8):
    """C(0) from the direct frequency integral of the FDT spectrum
    (independent Parseval-style route)."""
    def integrand(w):
        a = sm.alpha(w)
        return ((a - np.conj(np.swapaxes(a, -1, -2))) / 2j).real

    wt = sm.rates.omega_tilde if sm.rates is not None else sm.model.omega_a
    ga = sm.rates.gamma_a if sm.rates is not None else sm.model.gamma_intrinsic
    pts = [max(wt - 5 * ga, 1e-6), wt, wt + 5 * ga]
    spec = QuadSpec(rtol=rtol, scale=max(1.0, 2 * wt))
    val, err = integrate_adaptive(integrand, (0.0, np.inf), spec, points=pts)
    return val / np.pi


def half_range_transform(omega_prime, poles: PoleSet):
    """Half-range Fourier transform of the stationary correlator,
    ``Re int_0^inf dtau e^{-i(w - k.v) tau} C(tau)``, split into the
    regression part and the non-Markovian correction.

    ``omega_prime`` is the Doppler argument x = k.v - w.  Returns
    (S_qrt_part, S_nm_part), each (..., 3, 3), in hbar*alpha0 units:

        S_qrt(x) =  Re sum_i [ i R_i / (W_i - x) ],
        S_nm(x)  = -Re sum_i [ i R_i / (W_i + |x|) ].

    The two cancel identically for x < 0, their sum vanishes at x = 0,
    and for x > 0 the sum equals alpha_Im(x) (pi times the FDT spectrum).
    """
    x = np.asarray(omega_prime, dtype=float)
    s_qrt = np.zeros(x.shape + (3, 3))
    s_nm = np.zeros(x.shape + (3, 3))
    xc = x[..., None, None]
    for p, r in zip(poles.poles, poles.residues):
        r = np.asarray(r)
        s_qrt += np.real(1j * r / (p - xc))
        s_nm -= np.real(1j * r / (p + np.abs(xc)))
    return s_qrt, s_nm
