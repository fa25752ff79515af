import math

import numpy as np
import pytest

from dispersia import constants as const
from dispersia import units


def test_ev_conversion_reproducible_from_hbar():
    assert const.ev_to_rad_per_s(1.0) == pytest.approx(1.519267e15, rel=1e-6)


def test_f0_quoted_values():
    # omega_p = 9 eV gold, Rb polarizability
    omega_sp = const.ev_to_rad_per_s(9.0) / math.sqrt(2.0)
    f0 = units.normalization_f0(5.26e-39, omega_sp)
    assert f0 == pytest.approx(0.31e-15, rel=0.02)
    assert f0 / 1.44e-25 == pytest.approx(2.17e9, rel=0.02)


def test_f0_scaling_omega_to_the_fifth():
    f1 = units.normalization_f0(1e-39, 1e15)
    f2 = units.normalization_f0(1e-39, 2e15)
    assert f2 == pytest.approx(32.0 * f1, rel=1e-14)


def test_f0_zero_coupling_and_domain_errors():
    assert units.normalization_f0(0.0, 1e15) == 0.0
    with pytest.raises(ValueError):
        units.normalization_f0(1e-39, 0.0)
    with pytest.raises(ValueError):
        units.normalization_f0(-1e-39, 1e15)


def test_round_trip_dimensionless_si():
    us = units.UnitSystem.from_drude(9.0, 5.26e-39)
    for x in (1e-3, 0.17, 4.2):
        assert us.frequency_bar(us.frequency_si(x)) == pytest.approx(x, rel=1e-15)
        assert us.length_bar(us.length_si(x)) == pytest.approx(x, rel=1e-15)
        assert us.force_bar(us.force_si(x)) == pytest.approx(x, rel=1e-15)
    assert us.length_ref == pytest.approx(const.C / us.omega_ref)


def test_plasma_wavelength_gold():
    us = units.UnitSystem.from_drude(9.0, 5.26e-39)
    assert us.plasma_wavelength == pytest.approx(140e-9, rel=0.02)


def test_radiative_rate_roundtrip():
    omega_a = 2.41e15
    alpha0 = 5.26e-39
    g = units.radiative_rate(alpha0, omega_a)
    assert units.alpha0_from_rate(g, omega_a) == pytest.approx(alpha0, rel=1e-14)


def test_force_linear_in_alpha0():
    us1 = units.UnitSystem.from_drude(9.0, 5.26e-39)
    us2 = units.UnitSystem.from_drude(9.0, 2 * 5.26e-39)
    fbar = -0.37
    assert us2.force_si(fbar) == pytest.approx(2 * us1.force_si(fbar), rel=1e-14)
