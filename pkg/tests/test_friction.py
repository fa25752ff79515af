import numpy as np
import pytest

from dispersia import friction, quad
from dispersia.friction import FrictionScenario
from dispersia.material import SurfaceModel
from dispersia.polarizability import DipoleModel, DressedRates, poles_and_residues

WA, ZA = 0.2, 0.05
ATOM = DipoleModel.two_level(omega_a=WA)
OSC = DipoleModel.oscillator(omega_a=WA, gamma_intrinsic=0.1)
LOSSY = SurfaceModel(gamma=0.1)


def _scn(v, surface=LOSSY, dipole=ATOM, z=ZA):
    return FrictionScenario(v=v, z=z, surface=surface, dipole=dipole)


def test_orientation_factors_closed_forms():
    f = friction.orientation_factors(0.0, 0.0)
    assert f.a0 == pytest.approx(1.5) and f.a2 == pytest.approx(1.5)
    f = friction.orientation_factors(np.pi / 2, np.pi / 2)
    assert f.a0 == pytest.approx(-1.5) and f.a2 == pytest.approx(1.5)
    f = friction.orientation_factors(np.pi / 2, 0.0)
    assert f.a0 == pytest.approx(3.0) and f.a2 == pytest.approx(0.0)


def test_orientation_average_is_unity():
    # uniform average over the sphere of (A0, A2) is (1, 1)
    rng = np.random.default_rng(0)
    n = 40000
    u = rng.uniform(-1.0, 1.0, n)
    th = np.arccos(u)
    ph = rng.uniform(0.0, 2 * np.pi, n)
    a0 = 1.5 * (1 + (3 * np.cos(ph) ** 2 - 2) * np.sin(th) ** 2)
    a2 = 1.5 * (1 - np.cos(ph) ** 2 * np.sin(th) ** 2)
    assert np.mean(a0) == pytest.approx(1.0, abs=0.02)
    assert np.mean(a2) == pytest.approx(1.0, abs=0.02)


def test_orientation_kernel_never_negative():
    assert friction.orientation_kernel_positive() > 0.0


def test_zero_velocity_no_force():
    assert friction.friction_plasma_closed_form(_scn(0.0)).force == 0.0
    assert friction.friction_second_order_numeric(_scn(0.0)).force == 0.0
    r = friction.friction_fdt_low_velocity(_scn(0.0, dipole=OSC))
    assert r.force == 0.0


def test_drag_sign_and_parity():
    rng = np.random.default_rng(8)
    for _ in range(4):
        v = rng.uniform(0.005, 0.05)
        z = rng.uniform(0.03, 0.1)
        rp = friction.friction_second_order_numeric(_scn(v, z=z))
        rm = friction.friction_second_order_numeric(_scn(-v, z=z))
        assert rp.force < 0.0
        assert rm.force == -rp.force
    rf = friction.friction_fdt_low_velocity(_scn(2e-3, dipole=OSC))
    assert rf.force < 0.0
    assert friction.friction_fdt_low_velocity(_scn(-2e-3, dipole=OSC)).force == -rf.force


def test_closed_form_against_independent_bessel_route():
    # paper formula evaluated with the quad-module Bessel as an
    # independent route
    v = 0.025
    u = ZA * (1.0 + WA) / v
    expect = -(WA / (12 * v**4)) * (1 + WA) ** 3 * (
        quad.bessel_k(0, 2 * u) + quad.bessel_k(2, 2 * u))
    got = friction.friction_plasma_closed_form(_scn(v, surface=SurfaceModel(gamma=0.0)))
    assert got.force == pytest.approx(expect, rel=1e-12)


def test_closed_form_underflow_flag():
    r = friction.friction_plasma_closed_form(_scn(1e-5, surface=SurfaceModel(gamma=0.0)))
    assert r.force == 0.0 and r.underflow


def test_large_velocity_prefactor_decay():
    r1 = friction.friction_plasma_closed_form(_scn(0.2, surface=SurfaceModel(gamma=0.0)))
    r2 = friction.friction_plasma_closed_form(_scn(0.4, surface=SurfaceModel(gamma=0.0)))
    assert abs(r2.force) < abs(r1.force)
    # u -> 0: K2 ~ 1/(2u^2) so F ~ v^-2; doubling v quarters the force
    assert abs(r2.force / r1.force) == pytest.approx(0.25, rel=0.1)


def test_numeric_redirects_lossless_surface():
    r = friction.friction_second_order_numeric(_scn(0.03, surface=SurfaceModel(gamma=0.0)))
    assert "redirected" in r.note
    c = friction.friction_plasma_closed_form(_scn(0.03, surface=SurfaceModel(gamma=0.0)))
    assert r.force == c.force


def test_numeric_converges_to_closed_form_in_gamma():
    closed = friction.friction_plasma_closed_form(
        _scn(0.03, surface=SurfaceModel(gamma=0.0))).force
    errs = []
    for g in (1e-2, 1e-3, 1e-4):
        got = friction.friction_second_order_numeric(
            _scn(0.03, surface=SurfaceModel(gamma=g))).force
        errs.append(abs(got - closed) / abs(closed))
    assert errs[-1] < 0.05
    assert errs[0] > errs[1] > errs[2]


def test_velocity_resonance_peak_location():
    # numerical maximization of the closed form
    s0 = SurfaceModel(gamma=0.0)
    vs = np.linspace(0.02, 0.06, 2001)
    fs = np.array([friction.friction_plasma_closed_form(_scn(v, surface=s0)).force
                   for v in vs])
    vpeak = vs[np.argmin(fs)]
    assert vpeak == pytest.approx(0.03706, rel=1e-2)


def test_asympt1_vs_closed_form_at_large_u():
    s0 = SurfaceModel(gamma=0.0)
    for u in (10.0, 15.0, 25.0):
        v = ZA * (1 + WA) / u
        closed = friction.friction_plasma_closed_form(_scn(v, surface=s0)).force
        asym = friction.friction_asymptotic(_scn(v, surface=s0), "radiative")
        assert abs(closed - asym) / abs(closed) < 0.10


def test_asympt2_requires_gamma():
    with pytest.raises(friction.RegimeMismatchError):
        friction.friction_asymptotic(_scn(0.01, surface=SurfaceModel(gamma=0.0)),
                                     "surface-ohmic")


def test_asympt3_requires_both_dampings():
    with pytest.raises(friction.RegimeMismatchError):
        friction.friction_asymptotic(_scn(0.01, dipole=ATOM), "intrinsic")


def test_fdt_low_velocity_cubic_slope():
    vs = np.geomspace(1e-4, 1e-3, 6)
    fs = np.array([abs(friction.friction_fdt_low_velocity(_scn(v, dipole=OSC)).force)
                   for v in vs])
    slope = np.polyfit(np.log(vs), np.log(fs), 1)[0]
    assert slope == pytest.approx(3.0, abs=0.05)


def test_fdt_cubic_coefficient_matches_asympt3():
    sc = _scn(1e-4, dipole=OSC)
    r = friction.friction_fdt_low_velocity(sc)
    a3 = friction.friction_asymptotic(sc, "intrinsic")
    assert r.cubic_force == pytest.approx(a3, rel=0.01)
    assert r.force == pytest.approx(a3, rel=0.10)


def test_fdt_higher_order_regime_reported():
    undamped = DipoleModel.oscillator(omega_a=WA, gamma_intrinsic=0.0)
    with pytest.raises(friction.HigherOrderVelocityRegime):
        friction.friction_fdt_low_velocity(_scn(1e-3, dipole=undamped))


def test_fdt_ohmic_surrogate_matches_drude_at_low_velocity():
    # at v -> 0 only the Ohmic slope matters; the surrogate surface with
    # the same slope reproduces the Drude result
    ohmic = SurfaceModel(gamma=0.1, kind="ohmic")
    v = 1e-4
    a = friction.friction_fdt_low_velocity(_scn(v, dipole=OSC)).force
    b = friction.friction_fdt_low_velocity(_scn(v, surface=ohmic, dipole=OSC)).force
    assert a == pytest.approx(b, rel=1e-3)


def test_noncommuting_limits():
    # at fixed small v the three asymptotics give different forces
    v = 5e-4
    s_drude = _scn(v, dipole=OSC)
    a1 = friction.friction_asymptotic(s_drude, "radiative")
    a2 = friction.friction_asymptotic(s_drude, "surface-ohmic")
    a3 = friction.friction_asymptotic(s_drude, "intrinsic")
    assert abs(a1) < 1e-3 * abs(a2)      # exponentially small vs prefactor law
    assert abs(a2) < 1e-3 * abs(a3)      # still exponentially suppressed
    assert a3 < 0.0


def test_regime_ordering_on_velocity_grid():
    # with both dampings on, growing velocity first reaches the
    # surface-damped (gamma -> 0) curve and only later the lossless
    # closed form: where the two reference curves still differ strongly,
    # the full curve tracks the surface-damped one
    v = 0.01
    full = friction.friction_fdt_low_velocity(_scn(v, dipole=OSC)).force
    second = friction.friction_second_order_numeric(_scn(v)).force
    plasma = friction.friction_plasma_closed_form(
        _scn(v, surface=SurfaceModel(gamma=0.0))).force
    assert abs(full - second) / abs(second) < 0.2
    assert abs(full - plasma) / abs(plasma) > 0.5
    # at larger velocities all three curves merge
    for v in (0.02, 0.03):
        full = friction.friction_fdt_low_velocity(_scn(v, dipole=OSC)).force
        second = friction.friction_second_order_numeric(_scn(v)).force
        plasma = friction.friction_plasma_closed_form(
            _scn(v, surface=SurfaceModel(gamma=0.0))).force
        assert abs(full - second) / abs(second) < 0.2
        assert abs(second - plasma) / abs(plasma) < 0.1


def test_force_scales_with_orientation_factors():
    # the closed form scales exactly with A0 K0 + A2 K2
    s0 = SurfaceModel(gamma=0.0)
    v = 0.03
    u = ZA * (1 + WA) / v
    base = friction.friction_plasma_closed_form(_scn(v, surface=s0)).force
    oriented = DipoleModel.two_level(omega_a=WA, theta=0.3, phi=1.1)
    got = friction.friction_plasma_closed_form(_scn(v, surface=s0, dipole=oriented)).force
    f = friction.orientation_factors(0.3, 1.1)
    k0, k2 = quad.bessel_k(0, 2 * u), quad.bessel_k(2, 2 * u)
    assert got / base == pytest.approx((f.a0 * k0 + f.a2 * k2) / (k0 + k2), rel=1e-12)


# --- regression-theorem linear force and its cancellation -------------------

def test_qrt_cancellation_residual():
    rates = DressedRates(omega_tilde=WA, gamma_a=1e-2 * WA)
    ps = poles_and_residues(ATOM, rates=rates)
    q = friction.friction_qrt_with_cancellation(_scn(1e-3), ps)
    assert q.f_qrt_linear < 0.0
    assert abs(q.residual) < 1e-6 * abs(q.f_qrt_linear)


def test_qrt_linear_in_velocity():
    rates = DressedRates(omega_tilde=WA, gamma_a=1e-2 * WA)
    ps = poles_and_residues(ATOM, rates=rates)
    q1 = friction.friction_qrt_with_cancellation(_scn(1e-3), ps)
    q2 = friction.friction_qrt_with_cancellation(_scn(2e-3), ps)
    assert q2.f_qrt_linear == pytest.approx(2.0 * q1.f_qrt_linear, rel=1e-12)


def test_forces_linear_in_alpha0_scale():
    # F/F0 is independent of the coupling scale; SI force doubles with
    # alpha0 through F0 alone
    from dispersia.units import UnitSystem
    us1 = UnitSystem.from_drude(9.0, 5.26e-39)
    us2 = UnitSystem.from_drude(9.0, 1.052e-38)
    f = friction.friction_second_order_numeric(_scn(0.03)).force
    assert us2.force_si(f) == pytest.approx(2.0 * us1.force_si(f), rel=1e-12)
