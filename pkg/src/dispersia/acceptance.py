"""Acceptance suite: every criterion at its stated tolerance.

``run_all`` prints one PASS/FAIL line per criterion and returns the
results; ``dispersia selftest`` and ``tests/test_acceptance.py`` both
drive these functions.  Two checks encode documented defects of the
quoted closed-form approximations and are expected to fail (see the
repository notes): the resonance-peak location of the lossless closed
form sits ~8% above the quoted 4/7 estimate (tolerance 5%), and the
exponential surface-ohmic asymptote only reaches 20% agreement for
exponents above ~9 (the stated region starts at 5).
"""

from __future__ import annotations

import math
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import casimir_polder as cp
from . import constants as const
from . import friction, green, material, presets, quad, spectra, units
from .cli import emit_figure_dataset
from .friction import FrictionScenario
from .material import SurfaceModel
from .polarizability import (DipoleModel, DressedRates, poles_and_residues,
                             surface_modified_rates)

GOLD = presets.GOLD
WA, ZA = presets.FIG45_OMEGA_A, presets.FIG45_Z
ATOM = DipoleModel.two_level(omega_a=WA)
OSC = DipoleModel.oscillator(omega_a=WA, gamma_intrinsic=1e-1)
FIG5_SURF = SurfaceModel(gamma=1e-1)


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    expected_failure: bool = False


def _scn(v, surface=FIG5_SURF, dipole=ATOM, z=ZA):
    return FrictionScenario(v=v, z=z, surface=surface, dipole=dipole)


def criterion_1_force_scale():
    """F0 and F0/m reproduce the quoted values within 2%."""
    omega_sp = const.ev_to_rad_per_s(9.0) / math.sqrt(2.0)
    f0 = units.normalization_f0(presets.RB_ALPHA0, omega_sp)
    acc = f0 / presets.RB_MASS
    ok = abs(f0 - 0.31e-15) / 0.31e-15 < 0.02 and abs(acc - 2.17e9) / 2.17e9 < 0.02
    return CriterionResult("1 force scale", ok,
                           f"F0 = {f0 * 1e15:.4f} fN (0.31 +- 2%), "
                           f"F0/m = {acc:.3e} m/s^2 (2.17e9 +- 2%)")


def criterion_2_closed_form_convergence():
    """Small-relaxation numeric force matches the closed form within 5%,
    monotonically in Gamma."""
    vs = np.linspace(0.02, 0.04, 5)
    maxerr = {}
    for gam in (1e-2, 1e-3, 1e-4):
        surface = SurfaceModel(gamma=gam)
        errs = []
        for v in vs:
            num = friction.friction_second_order_numeric(_scn(v, surface=surface)).force
            closed = friction.friction_plasma_closed_form(
                _scn(v, surface=SurfaceModel(gamma=0.0))).force
            errs.append(abs(num - closed) / abs(closed))
        maxerr[gam] = max(errs)
    ok = maxerr[1e-4] < 0.05 and maxerr[1e-2] > maxerr[1e-3] > maxerr[1e-4]
    return CriterionResult(
        "2 closed-form convergence", ok,
        "max rel err " + ", ".join(f"G={g:.0e}: {e:.2e}" for g, e in maxerr.items()))


def criterion_3_resonance_peak():
    """Peak of the closed-form velocity curve within 5% of
    (4/7)(omega_a + omega_sp) z_a."""
    s0 = SurfaceModel(gamma=0.0)
    vs = np.linspace(0.02, 0.06, 4001)
    fs = np.array([friction.friction_plasma_closed_form(_scn(v, surface=s0)).force
                   for v in vs])
    vpeak = float(vs[np.argmin(fs)])
    vref = (4.0 / 7.0) * (1.0 + WA) * ZA
    rel = abs(vpeak - vref) / vref
    return CriterionResult(
        "3 resonance peak", rel < 0.05,
        f"v_peak = {vpeak:.5f}, (4/7)(wa+wsp)za = {vref:.5f}, rel dev {rel:.3f} "
        "(the quoted location comes from maximizing the exponential "
        "asymptote; the Bessel curve peaks higher)",
        expected_failure=True)


def criterion_4a_radiative_asymptote():
    """Exponential plasmon asymptote within 10% of the closed form for
    u >= 10."""
    s0 = SurfaceModel(gamma=0.0)
    worst = 0.0
    for u in (10.0, 14.0, 20.0):
        v = ZA * (1 + WA) / u
        closed = friction.friction_plasma_closed_form(_scn(v, surface=s0)).force
        asym = friction.friction_asymptotic(_scn(v, surface=s0), "radiative")
        worst = max(worst, abs(closed - asym) / abs(closed))
    return CriterionResult("4a radiative asymptote", worst < 0.10,
                           f"worst rel dev {worst:.3f} over u in (10, 14, 20)")


def criterion_4b_surface_ohmic_asymptote():
    """Surface-ohmic asymptote within 20% of the numeric second-order
    force wherever 2 z wa / v >= 5."""
    devs = {}
    for b in (5.0, 6.0, 8.0, 10.0, 12.0, 16.0, 20.0):
        v = 2.0 * ZA * WA / b
        num = friction.friction_second_order_numeric(_scn(v)).force
        asym = friction.friction_asymptotic(_scn(v), "surface-ohmic")
        devs[b] = abs(num - asym) / abs(num)
    worst = max(devs.values())
    return CriterionResult(
        "4b surface-ohmic asymptote", worst < 0.20,
        "rel dev " + ", ".join(f"b={b:g}: {d:.2f}" for b, d in devs.items())
        + " (agreement reaches 20% only for exponents above ~9)",
        expected_failure=True)


def criterion_4c_cubic_coefficient():
    """Cubic asymptote within 10% of the windowed force's cubic
    coefficient."""
    sc = _scn(1e-4, dipole=OSC)
    r = friction.friction_fdt_low_velocity(sc)
    a3 = friction.friction_asymptotic(sc, "intrinsic")
    dev_coeff = abs(r.cubic_force - a3) / abs(a3)
    dev_full = abs(r.force - a3) / abs(a3)
    ok = dev_coeff < 0.10 and dev_full < 0.10
    return CriterionResult("4c cubic coefficient", ok,
                           f"coefficient dev {dev_coeff:.2e}, windowed-force "
                           f"dev {dev_full:.2e} at v = 1e-4")


def criterion_5_cubic_slope():
    """log-log slope of the windowed force equals 3.00 +- 0.05 over a
    decade of small velocities."""
    vs = np.geomspace(1e-4, 1e-3, 6)
    fs = [abs(friction.friction_fdt_low_velocity(_scn(v, dipole=OSC)).force)
          for v in vs]
    slope = float(np.polyfit(np.log(vs), np.log(fs), 1)[0])
    return CriterionResult("5 cubic law", abs(slope - 3.0) < 0.05,
                           f"slope = {slope:.4f} over v in [1e-4, 1e-3]")


def criterion_6_linear_cancellation():
    """Regression linear force and its non-Markovian counter-term cancel
    to 1e-6 relative."""
    rates = DressedRates(omega_tilde=WA, gamma_a=1e-2 * WA)
    ps = poles_and_residues(ATOM, rates=rates)
    q = friction.friction_qrt_with_cancellation(_scn(1e-3), ps)
    rel = abs(q.residual) / abs(q.f_qrt_linear)
    return CriterionResult("6 linear-term cancellation", rel < 1e-6,
                           f"residual/|F_qrt| = {rel:.2e}")


def criterion_7_cp_closure():
    """F_qrt + F_nm = F_fdt to 1e-6 on a 10-point distance grid, and
    |F_qrt| >= |F_fdt| pointwise."""
    wa = presets.rb_omega_bar()
    dip = DipoleModel.two_level(omega_a=wa, gamma_free=wa / 3.0)
    zs = np.geomspace(0.1, 10.0, 10)
    worst_close = 0.0
    magnitude_ok = True
    for z in zs:
        rates = surface_modified_rates(z, dip, GOLD, include_shift=False)
        f_fdt = cp.cp_force(z, "fdt", dip, GOLD, rates=rates).force
        f_qrt = cp.cp_force(z, "qrt", dip, GOLD, rates=rates).force
        f_nm = cp.cp_nm_correction(z, dip, GOLD, rates=rates).force
        worst_close = max(worst_close, abs(f_qrt + f_nm - f_fdt) / abs(f_fdt))
        magnitude_ok &= abs(f_qrt) >= abs(f_fdt)
    ok = worst_close < 1e-6 and magnitude_ok
    return CriterionResult("7 cp closure", ok,
                           f"worst closure {worst_close:.2e}; "
                           f"|F_qrt| >= |F_fdt| pointwise: {magnitude_ok}")


def criterion_8_lifshitz_identity():
    """Dressed-oscillator force equals the scattering resummation to 1e-8
    at three separations."""
    wa = presets.rb_omega_bar()
    osc = DipoleModel.oscillator(omega_a=wa, gamma_intrinsic=0.02,
                                 coupling=gold_coupling())
    worst = 0.0
    for z in (0.05, 0.5, 5.0):
        a = cp.cp_force(z, "fdt", osc, GOLD).force
        b = cp.cp_force(z, "lifshitz", osc, GOLD).force
        worst = max(worst, abs(a - b) / abs(b))
    return CriterionResult("8 lifshitz identity", worst < 1e-8,
                           f"worst rel dev {worst:.2e} at z in (0.05, 0.5, 5)")


def gold_coupling():
    return presets.gold_units().coupling


def criterion_9_spectrum_properties():
    """FDT spectrum vanishes for w <= 0, regression spectrum positive at
    w = 0, normalized spectra within 1% on resonance."""
    wa = presets.rb_omega_bar()
    ga = 1e-2 * wa
    dip = DipoleModel.two_level(omega_a=wa, gamma_free=ga)
    rates = DressedRates(omega_tilde=wa, gamma_a=ga)
    sm_f = spectra.make_spectrum_model("fdt", dip, rates)
    sm_q = spectra.make_spectrum_model("qrt", dip, rates)
    zero_ok = all(np.all(spectra.power_spectrum(w, sm_f) == 0.0)
                  for w in (-0.5 * wa, -1e-9, 0.0))
    q0 = spectra.power_spectrum(0.0, sm_q)[0, 0]
    s_f = spectra.normalized_spectrum(wa, sm_f)
    s_q = spectra.normalized_spectrum(wa, sm_q)
    res_dev = abs(s_f - s_q) / s_q
    ok = zero_ok and q0 > 0.0 and res_dev < 0.01
    return CriterionResult("9 spectrum properties", ok,
                           f"fdt zero for w<=0: {zero_ok}; S_qrt(0) = {q0:.3e}; "
                           f"resonance dev {res_dev:.2e}")


def criterion_10_correlator_tail():
    """C(tau) tau^2 converges to the analytic tail within 5% for
    tau gamma_a in [50, 200]."""
    wa = presets.rb_omega_bar()
    ga = 5e-3
    dip = DipoleModel.two_level(omega_a=wa, gamma_free=ga)
    sm = spectra.make_spectrum_model("fdt", dip,
                                     DressedRates(omega_tilde=wa, gamma_a=ga))
    a1 = sm.tail.a_coeff[0, 0]
    worst = 0.0
    for tg in (50.0, 100.0, 200.0):
        tau = tg / ga
        c = spectra.stationary_correlator(tau, sm)[0, 0].real
        target = -a1 / np.pi
        worst = max(worst, abs(c * tau**2 - target) / abs(target))
    return CriterionResult("10 correlator tail", worst < 0.05,
                           f"worst rel dev {worst:.2e} vs -(1/pi) a1")


def criterion_11_response_invariants():
    """Crossing, parity, Hermiticity, passivity at machine precision on
    randomized grids; Kramers-Kronig spot check at 1e-4."""
    rng = np.random.default_rng(2024)
    eps_cross = r_cross = g_cross = parity = herm = 0.0
    for _ in range(20):
        w = rng.uniform(0.05, 3.0) + 1j * rng.uniform(-0.4, 0.4)
        eps_cross = max(eps_cross, abs(
            material.drude_permittivity(-np.conj(w), GOLD)
            - np.conj(material.drude_permittivity(w, GOLD))))
        r_cross = max(r_cross, abs(
            material.quasistatic_reflection(-np.conj(w), GOLD)
            - np.conj(material.quasistatic_reflection(w, GOLD))))
        kx, ky = rng.uniform(-2, 2, 2)
        z = rng.uniform(0.05, 0.5)
        wr = rng.uniform(0.05, 2.5)
        g = green.scattered_green_k(kx, ky, z, wr, GOLD)
        gm = green.scattered_green_k(-kx, -ky, z, wr, GOLD)
        from .tensors import antisymmetric_part, im_construction, symmetric_part
        parity = max(parity,
                     float(np.max(np.abs(symmetric_part(g) - symmetric_part(gm)))),
                     float(np.max(np.abs(antisymmetric_part(g)
                                         + antisymmetric_part(gm)))))
        gi = im_construction(g)
        herm = max(herm, float(np.max(np.abs(gi - np.conj(gi.T)))))
        g_cross = max(g_cross, float(np.max(np.abs(
            np.conj(g.T) - green.scattered_green_k(kx, ky, z, -wr, GOLD)))))
    wgrid = np.linspace(1e-3, 6.0, 200)
    passive = bool(np.all(material.drude_permittivity(wgrid, GOLD).imag > 0)
                   and np.all(material.quasistatic_reflection(wgrid, GOLD).imag > 0))

    w0 = 0.5
    def numfun(w):
        return 2.0 / np.pi * w * material.quasistatic_reflection_imag(w, GOLD)
    v1, _ = quad.principal_value(lambda w: numfun(w) / (w + w0), w0, (0.0, 8.0))
    v2, _ = quad.integrate_adaptive(lambda w: numfun(w) / (w * w - w0 * w0),
                                    (8.0, np.inf), quad.QuadSpec(rtol=1e-10))
    kk_dev = abs(v1 + v2 - material.quasistatic_reflection(w0, GOLD).real)

    mach = max(eps_cross, r_cross, g_cross, parity, herm)
    ok = mach < 1e-12 and passive and kk_dev < 1e-4
    return CriterionResult("11 response invariants", ok,
                           f"machine-precision checks max {mach:.1e}; "
                           f"passivity {passive}; KK dev {kk_dev:.1e}")


def criterion_12_figure_datasets(grid_n=None):
    """All four figure datasets complete, finite, and byte-identical
    across reruns (runtime reported)."""
    t0 = time.time()
    digests = []
    ok = True
    detail = []
    with tempfile.TemporaryDirectory() as tmp:
        for rerun in (0, 1):
            root = Path(tmp) / f"run{rerun}"
            blobs = {}
            for fig in ("fig2", "fig3", "fig4", "fig5"):
                overrides = {"n": str(grid_n)} if grid_n else None
                paths = emit_figure_dataset(fig, root / fig, rtol=1e-8,
                                            overrides=overrides)
                for p in paths:
                    blobs[f"{fig}/{p.name}"] = p.read_bytes()
            digests.append(blobs)
    same = set(digests[0]) == set(digests[1]) and all(
        digests[0][k] == digests[1][k] for k in digests[0])
    elapsed = time.time() - t0
    ok = same and elapsed < 1800.0
    detail.append(f"{len(digests[0])} files, byte-identical reruns: {same}, "
                  f"wall time {elapsed:.1f} s (< 1800)")
    return CriterionResult("12 figure datasets", ok, "; ".join(detail))


ALL_CRITERIA = (
    criterion_1_force_scale,
    criterion_2_closed_form_convergence,
    criterion_3_resonance_peak,
    criterion_4a_radiative_asymptote,
    criterion_4b_surface_ohmic_asymptote,
    criterion_4c_cubic_coefficient,
    criterion_5_cubic_slope,
    criterion_6_linear_cancellation,
    criterion_7_cp_closure,
    criterion_8_lifshitz_identity,
    criterion_9_spectrum_properties,
    criterion_10_correlator_tail,
    criterion_11_response_invariants,
    criterion_12_figure_datasets,
)


def run_all(verbose=True):
    results = []
    for fn in ALL_CRITERIA:
        res = fn()
        results.append(res)
        if verbose:
            status = "PASS" if res.passed else "FAIL"
            note = " [documented defect of the quoted approximation]" \
                if (not res.passed and res.expected_failure) else ""
            print(f"{status} criterion {res.name}: {res.detail}{note}")
    return results
