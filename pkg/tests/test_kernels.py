"""The numba kernels and the pure-numpy fallback must implement the same
math; these tests pin the two paths against each other on the active
backend (the subprocess test exercises the env-flag switch end to end)."""

import os
import subprocess
import sys

import numpy as np
import pytest

from dispersia import _kernels
from dispersia.quad import gauss_legendre


def test_backend_reports():
    assert isinstance(_kernels.USE_NUMBA, bool)


def test_bessel_paths_agree():
    ref = _kernels.numpy_reference()["k0e_k1e"]
    x = np.geomspace(1e-3, 1e4, 300)
    a0, a1 = _kernels.k0e_k1e(x)
    b0, b1 = ref(x)
    assert np.max(np.abs(a0 - b0) / b0) < 1e-14
    assert np.max(np.abs(a1 - b1) / b1) < 1e-14


def test_second_order_paths_agree():
    ref = _kernels.numpy_reference()["second_order_integrand"]
    kx = np.geomspace(5.0, 500.0, 200)
    args = (0.025, 0.2, 0.05, 1e-2, 1.0, 1.0)
    a = _kernels.second_order_integrand(kx, *args)
    b = ref(kx, *args)
    scale = np.max(np.abs(b))
    assert np.max(np.abs(a - b)) < 1e-13 * scale


def test_fdt_outer_paths_agree():
    ref = _kernels.numpy_reference()["fdt_outer_integrand"]
    glx, glw = gauss_legendre(24)
    kx = np.geomspace(1.0, 400.0, 120)
    args = (5e-3, 0.2, 1e-3, 1e-1, 0.05, 1.0, 1.0)
    a = _kernels.fdt_outer_integrand(kx, *args, glx, glw)
    b = ref(kx, *args, glx, glw)
    scale = np.max(np.abs(b))
    assert np.max(np.abs(a - b)) < 1e-12 * scale


def test_window_panels_resolve_narrow_lorentzians():
    # analytic check of the panel scheme: for Om below every resonance the
    # integrand is the smooth product of two Ohmic tails
    from dispersia.quad import QuadSpec, integrate_adaptive
    om, wa, gi, gam = 0.05, 0.2, 1e-3, 1e-1
    direct, _ = integrate_adaptive(
        lambda w: _kernels._osc_alpha_imag_np(om - w, wa, gi)
        * _kernels._drude_r_imag_np(w, gam), (0.0, om), QuadSpec(rtol=1e-12))
    glx, glw = gauss_legendre(24)
    panel = _kernels._window_sum_numpy(om, wa, gi, gam, glx, glw)
    assert panel == pytest.approx(direct, rel=1e-9)
    # and with the atomic resonance inside the window
    om = 0.35
    direct, _ = integrate_adaptive(
        lambda w: _kernels._osc_alpha_imag_np(om - w, wa, gi)
        * _kernels._drude_r_imag_np(w, gam), (0.0, om), QuadSpec(rtol=1e-12),
        points=[om - wa - 5e-3, om - wa, om - wa + 5e-3])
    panel = _kernels._window_sum_numpy(om, wa, gi, gam, glx, glw)
    assert panel == pytest.approx(direct, rel=1e-7)


@pytest.mark.skipif(not _kernels.USE_NUMBA, reason="numba already disabled")
def test_env_flag_selects_numpy_backend():
    code = (
        "import dispersia._kernels as k; "
        "assert not k.USE_NUMBA; "
        "import numpy as np; "
        "a, b = k.k0e_k1e(np.array([0.5, 3.0])); "
        "print(float(a[0]), float(b[1]))"
    )
    env = dict(os.environ, DISPERSIA_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    a0, b1 = (float(x) for x in out.stdout.split())
    ours = _kernels.k0e_k1e(np.array([0.5, 3.0]))
    assert a0 == pytest.approx(float(ours[0][0]), rel=1e-14)
    assert b1 == pytest.approx(float(ours[1][1]), rel=1e-14)
