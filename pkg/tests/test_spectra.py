import numpy as np
import pytest

from dispersia import polarizability as pol
from dispersia import spectra
from dispersia.polarizability import DipoleModel, DressedRates


def _two_level_sm(method="fdt", wa=0.2, wt=None, ga=2e-3):
    m = DipoleModel.two_level(omega_a=wa, gamma_free=ga)
    rates = DressedRates(omega_tilde=wt if wt is not None else wa, gamma_a=ga)
    return spectra.make_spectrum_model(method, m, rates)


def test_fdt_vanishes_at_nonpositive_frequency():
    sm = _two_level_sm("fdt")
    for w in (-0.02, -1e-6, 0.0):
        assert np.all(spectra.power_spectrum(w, sm) == 0.0)


def test_qrt_positive_at_zero_frequency():
    sm = _two_level_sm("qrt")
    s0 = spectra.power_spectrum(0.0, sm)
    wt, ga = sm.rates.omega_tilde, sm.rates.gamma_a
    expect = (1.5 * sm.model.omega_a / np.pi) * ga / (wt**2 + ga**2) / 3.0
    assert s0[0, 0] == pytest.approx(expect, rel=1e-13)
    assert s0[0, 0] > 0.0


def test_spectra_hermitian():
    for method in ("fdt", "qrt"):
        sm = _two_level_sm(method)
        for w in (-0.1, 0.05, 0.2, 0.21):
            s = spectra.power_spectrum(w, sm)
            assert np.allclose(s, np.conj(s.T), atol=1e-16)


def test_normalized_spectra_resonance_vs_low_frequency():
    # gamma/omega_tilde = 1e-2: indistinguishable on resonance, orders of
    # magnitude apart near zero frequency
    wa = 0.2
    ga = 1e-2 * wa
    fdt = _two_level_sm("fdt", wa=wa, ga=ga)
    qrt = _two_level_sm("qrt", wa=wa, ga=ga)
    s_f = spectra.normalized_spectrum(wa, fdt)
    s_q = spectra.normalized_spectrum(wa, qrt)
    assert abs(s_f - s_q) / s_q < 0.01
    # near w = 0 the ratio grows like wt/(4w); exactly zero FDT at w <= 0
    w_low = 1e-3 * wa
    ratio = spectra.normalized_spectrum(w_low, qrt) / spectra.normalized_spectrum(w_low, fdt)
    assert ratio > 100.0
    assert spectra.normalized_spectrum(-0.05 * wa, qrt) > 0.0
    assert spectra.normalized_spectrum(-0.05 * wa, fdt) == 0.0


def test_equal_time_correlator_positive_and_consistent():
    sm = _two_level_sm("fdt", ga=5e-3)
    c0_spectral = spectra.correlator_equal_time_from_spectrum(sm)
    c0_contour = spectra.stationary_correlator(0.0, sm)
    assert np.allclose(c0_contour.imag, 0.0, atol=1e-10)
    assert np.max(np.abs(c0_contour.real - c0_spectral)) < 1e-6 * np.max(np.abs(c0_spectral))
    evals = np.linalg.eigvalsh(c0_spectral)
    assert np.all(evals >= -1e-14)
    # closed form of the equal-time value for the damped two-level model:
    # wa/2 - (wa/pi) arctan(ga/wt) per axis (isotropic)
    wa = sm.model.omega_a
    wt, ga = sm.rates.omega_tilde, sm.rates.gamma_a
    expect = 0.5 * wa - (wa / np.pi) * np.arctan(ga / wt)
    assert c0_spectral[0, 0] == pytest.approx(expect, rel=1e-6)


def test_undamped_pure_oscillation():
    m = DipoleModel.two_level(omega_a=0.2)
    rates = DressedRates(omega_tilde=0.2, gamma_a=1e-300)
    with pytest.raises(pol.PoleLocationError):
        pol.poles_and_residues(m, rates=DressedRates(omega_tilde=0.2, gamma_a=0.0))
    # tiny damping: residue part is the pure oscillation dd e^{-i wa tau}
    sm = _two_level_sm("fdt", ga=1e-12)
    tau = 7.3
    c = spectra.correlator_residue_part(tau, sm)
    expect = 0.5 * sm.model.omega_a * np.exp(-1j * sm.model.omega_a * tau)
    assert c[0, 0] == pytest.approx(expect, rel=1e-9)


def test_correlator_tail_two_level():
    sm = _two_level_sm("fdt", ga=5e-3)
    ga = sm.rates.gamma_a
    for tau in (50.0 / ga, 120.0 / ga, 200.0 / ga):
        c = spectra.stationary_correlator(tau, sm)
        t = spectra.correlator_tail(tau, sm)
        assert c[0, 0].real == pytest.approx(t[0, 0], rel=0.05)
    # tail is negative for m = 0
    assert t[0, 0] < 0.0


def test_correlator_loglog_slope():
    sm = _two_level_sm("fdt", ga=5e-3)
    ga = sm.rates.gamma_a
    taus = np.geomspace(20.0 / ga, 200.0 / ga, 7)
    vals = np.array([abs(spectra.stationary_correlator(t, sm)[0, 0]) for t in taus])
    slope = np.polyfit(np.log(taus), np.log(vals), 1)[0]
    assert slope == pytest.approx(-2.0, abs=0.05)


def test_correlator_symmetry():
    sm = _two_level_sm("fdt", ga=5e-3)
    c = spectra.stationary_correlator(3.0, sm)
    assert np.allclose(c, c.T, atol=1e-16)


def test_half_range_transform_cancellation():
    sm = _two_level_sm("fdt", ga=2e-3)
    poles = sm.poles
    for x in (-0.5, -0.01, 0.0):
        sq, sn = spectra.half_range_transform(x, poles)
        assert np.max(np.abs(sq + sn)) < 1e-15
    # x > 0: the sum reconstructs alpha_Im(x) exactly
    for x in (0.05, 0.2, 0.21, 1.0):
        sq, sn = spectra.half_range_transform(x, poles)
        a = sm.alpha(x)
        a_im = ((a - np.conj(a.T)) / 2j).real
        assert np.allclose(sq + sn, a_im, atol=1e-13 * max(1.0, np.max(np.abs(a_im))))
        # and equals pi times the FDT spectrum
        s_fdt = spectra.power_spectrum(x, sm)
        assert np.allclose(sq + sn, np.pi * s_fdt.real, atol=1e-13)


def test_half_range_transform_matches_numeric_fourier():
    # brute-force oracle: Re int_0^inf e^{-i(w - kv) tau} C(tau) dtau
    from dispersia.quad import QuadSpec, integrate_adaptive
    sm = _two_level_sm("fdt", ga=5e-2)
    x = 0.13   # k.v - w

    def f(tau):
        out = np.empty_like(tau)
        for i, t in enumerate(tau):
            out[i] = (np.exp(1j * x * t) * spectra.stationary_correlator(t, sm)[0, 0]).real
        return out

    val, _ = integrate_adaptive(f, (0.0, 2000.0), QuadSpec(rtol=1e-7, max_intervals=600))
    sq, sn = spectra.half_range_transform(x, sm.poles)
    assert val == pytest.approx((sq + sn)[0, 0], rel=5e-4)
