"""Hot numeric kernels: numba-compiled with a pure-numpy fallback.

The friction integrands and the modified Bessel functions dominate the
runtime of the velocity scans.  When numba imports cleanly and the
environment variable ``DISPERSIA_NO_NUMBA`` is unset (or "0"), the
``@njit`` versions are exported; setting ``DISPERSIA_NO_NUMBA=1`` selects
pure-numpy implementations of the same algorithms.
``benchmarks/bench_kernels.py`` times the two paths against each other.

Algorithms
----------
Bessel K_n: power series below x = 2 (DLMF 10.31), Thompson-Barnett
continued fraction above, K2 by upward recurrence.  Both branches carry a
scaled variant ``e^x K_n(x)`` that stays finite up to x ~ 1e5.

Doppler-window integral: panel-wise Gauss-Legendre with geometric shells
around the plasmon and atomic resonances, so node counts adapt to the
window content down to linewidths of 1e-6.
"""

import os

import numpy as np

_EULER_GAMMA = 0.5772156649015329
_SERIES_CUT = 2.0
_CF_TOL = 1e-16
_CF_MAXIT = 400

# geometric shells (in units of the linewidth) bracketing a resonance
_SHELLS = np.array([-300.0, -30.0, -3.0, 0.0, 3.0, 30.0, 300.0])


def _numba_requested():
    flag = os.environ.get("DISPERSIA_NO_NUMBA", "0").strip().lower()
    if flag in ("1", "true", "yes"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_NUMBA = _numba_requested()


# ---------------------------------------------------------------------------
# pure-numpy implementations
# ---------------------------------------------------------------------------

def _k0e_k1e_series_np(x):
    # DLMF 10.31: K0 = -(ln(x/2)+g) I0 + sum t^k/(k!)^2 H_k,
    # K1 = 1/x + ln(x/2) I1 - (x/4) sum (2H_k + 1/(k+1) - 2g) t^k/(k!(k+1)!)
    t = 0.25 * x * x
    lg = np.log(0.5 * x)
    i0 = np.ones_like(x)
    s0 = np.zeros_like(x)
    i1s = np.ones_like(x)
    s1 = np.ones_like(x)            # k = 0 term of the (2H_k + 1/(k+1)) series
    term0 = np.ones_like(x)
    term1 = np.ones_like(x)
    h = 0.0
    for k in range(1, 18):
        term0 = term0 * t / (k * k)
        term1 = term1 * t / (k * (k + 1))
        h += 1.0 / k
        i0 += term0
        s0 += term0 * h
        i1s += term1
        s1 += term1 * (2.0 * h + 1.0 / (k + 1))
    i1 = 0.5 * x * i1s
    k0 = -(lg + _EULER_GAMMA) * i0 + s0
    k1 = 1.0 / x + lg * i1 - 0.25 * x * (s1 - 2.0 * _EULER_GAMMA * i1s)
    ex = np.exp(x)
    return k0 * ex, k1 * ex


def _k0e_k1e_cf_np(x):
    # Thompson-Barnett CF2 for K_mu, mu = 0 (cf. Numerical Recipes bessik)
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    delh = d.copy()
    h = d.copy()
    q1 = np.zeros_like(x)
    q2 = np.ones_like(x)
    a1 = 0.25
    q = np.full_like(x, a1)
    c = np.full_like(x, a1)
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _CF_MAXIT):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q = q + c * qnew
        b = b + 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h = h + delh
        dels = q * delh
        s = s + dels
        if np.all(np.abs(dels) <= _CF_TOL * np.abs(s)):
            break
    h = a1 * h
    k0e = np.sqrt(np.pi / (2.0 * x)) / s
    k1e = k0e * (x + 0.5 - h) / x
    return k0e, k1e


def _k0e_k1e_numpy(x):
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    k0e = np.empty_like(x)
    k1e = np.empty_like(x)
    small = x < _SERIES_CUT
    if np.any(small):
        a, b = _k0e_k1e_series_np(x[small])
        k0e[small], k1e[small] = a, b
    big = ~small
    if np.any(big):
        a, b = _k0e_k1e_cf_np(x[big])
        k0e[big], k1e[big] = a, b
    return k0e, k1e


def _drude_r_imag_np(w, gam):
    # Im of the quasi-static TM reflection -1/(w(w+iG)-1), units of omega_sp
    return gam * w / ((w * w - 1.0) ** 2 + (gam * w) ** 2)


def _osc_alpha_imag_np(w, wa, gi):
    # Im of the damped-oscillator response wa^2/(wa^2-w^2-i gi w)
    return wa * wa * gi * w / ((wa * wa - w * w) ** 2 + (gi * w) ** 2)


def _bessel_factor_np(kx, za, a0, a2):
    # kx^3 e^{-2 kx za} [A0 K0 + A2 K2](2 kx za): the analytic ky line
    # integral of the near-field Green tensor against the dipole dyadic
    arg = 2.0 * kx * za
    k0e, k1e = _k0e_k1e_numpy(arg)
    k2e = k0e + 2.0 * k1e / arg
    return kx**3 * np.exp(-arg) * (a0 * k0e + a2 * k2e)


def _second_order_integrand_numpy(kx, v, wa, za, gam, a0, a2):
    w = kx * v - wa
    return _drude_r_imag_np(w, gam) * _bessel_factor_np(kx, za, a0, a2)


def _window_edges(om, wa, gi, gam):
    # panel breakpoints in [0, om] with geometric shells around the plasmon
    # resonance (w ~ 1, width gam) and the Doppler-mirrored atomic resonance
    # (w ~ om - wa, width gi)
    pts = [0.0, om]
    for center, width in ((1.0, gam), (om - wa, gi)):
        if width <= 0.0:
            continue
        for s in _SHELLS:
            p = center + s * width
            if 0.0 < p < om:
                pts.append(p)
    return np.unique(np.array(pts))


def _window_sum_numpy(om, wa, gi, gam, glx, glw):
    edges = _window_edges(om, wa, gi, gam)
    total = 0.0
    for p in range(edges.size - 1):
        mid = 0.5 * (edges[p] + edges[p + 1])
        hw = 0.5 * (edges[p + 1] - edges[p])
        w = mid + hw * glx
        f = _osc_alpha_imag_np(om - w, wa, gi) * _drude_r_imag_np(w, gam)
        total += hw * np.sum(glw * f)
    return total


def _fdt_outer_numpy(kx, v, wa, gi, gam, za, a0, a2, glx, glw):
    kx = np.atleast_1d(np.asarray(kx, dtype=np.float64))
    bess = _bessel_factor_np(kx, za, a0, a2)
    out = np.empty_like(kx)
    for j in range(kx.size):
        out[j] = _window_sum_numpy(kx[j] * v, wa, gi, gam, glx, glw)
    return bess * out


# ---------------------------------------------------------------------------
# numba implementations (same algorithms, scalar loops)
# ---------------------------------------------------------------------------

if USE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _k0e_k1e_scalar_nb(x):
        if x < _SERIES_CUT:
            t = 0.25 * x * x
            lg = np.log(0.5 * x)
            i0 = 1.0
            s0 = 0.0
            i1s = 1.0
            s1 = 1.0
            term0 = 1.0
            term1 = 1.0
            h = 0.0
            for k in range(1, 18):
                term0 = term0 * t / (k * k)
                term1 = term1 * t / (k * (k + 1))
                h += 1.0 / k
                i0 += term0
                s0 += term0 * h
                i1s += term1
                s1 += term1 * (2.0 * h + 1.0 / (k + 1))
            i1 = 0.5 * x * i1s
            k0 = -(lg + _EULER_GAMMA) * i0 + s0
            k1 = 1.0 / x + lg * i1 - 0.25 * x * (s1 - 2.0 * _EULER_GAMMA * i1s)
            ex = np.exp(x)
            return k0 * ex, k1 * ex
        b = 2.0 * (1.0 + x)
        d = 1.0 / b
        delh = d
        h = d
        q1 = 0.0
        q2 = 1.0
        a1 = 0.25
        q = a1
        c = a1
        a = -a1
        s = 1.0 + q * delh
        for i in range(2, _CF_MAXIT):
            a -= 2.0 * (i - 1)
            c = -a * c / i
            qnew = (q1 - b * q2) / a
            q1 = q2
            q2 = qnew
            q = q + c * qnew
            b = b + 2.0
            d = 1.0 / (b + a * d)
            delh = (b * d - 1.0) * delh
            h = h + delh
            dels = q * delh
            s = s + dels
            if abs(dels) <= _CF_TOL * abs(s):
                break
        h = a1 * h
        k0e = np.sqrt(np.pi / (2.0 * x)) / s
        k1e = k0e * (x + 0.5 - h) / x
        return k0e, k1e

    @njit(cache=True)
    def _k0e_k1e_numba(x):
        n = x.size
        k0e = np.empty(n)
        k1e = np.empty(n)
        for i in range(n):
            k0e[i], k1e[i] = _k0e_k1e_scalar_nb(x[i])
        return k0e, k1e

    @njit(cache=True, inline="always")
    def _drude_r_imag_nb(w, gam):
        return gam * w / ((w * w - 1.0) ** 2 + (gam * w) ** 2)

    @njit(cache=True, inline="always")
    def _osc_alpha_imag_nb(w, wa, gi):
        return wa * wa * gi * w / ((wa * wa - w * w) ** 2 + (gi * w) ** 2)

    @njit(cache=True)
    def _second_order_integrand_numba(kx, v, wa, za, gam, a0, a2):
        n = kx.size
        out = np.empty(n)
        for i in range(n):
            arg = 2.0 * kx[i] * za
            k0e, k1e = _k0e_k1e_scalar_nb(arg)
            k2e = k0e + 2.0 * k1e / arg
            w = kx[i] * v - wa
            out[i] = (_drude_r_imag_nb(w, gam) * kx[i] ** 3
                      * np.exp(-arg) * (a0 * k0e + a2 * k2e))
        return out

    @njit(cache=True)
    def _window_sum_nb(om, wa, gi, gam, shells, glx, glw):
        # panel edges: 0, om and shells around the two resonances
        maxpts = 2 + 2 * shells.size
        pts = np.empty(maxpts)
        npts = 0
        pts[npts] = 0.0
        npts += 1
        pts[npts] = om
        npts += 1
        for c in range(2):
            center = 1.0 if c == 0 else om - wa
            width = gam if c == 0 else gi
            if width <= 0.0:
                continue
            for s in range(shells.size):
                p = center + shells[s] * width
                if 0.0 < p < om:
                    pts[npts] = p
                    npts += 1
        edges = np.sort(pts[:npts])
        total = 0.0
        for p in range(npts - 1):
            a = edges[p]
            b = edges[p + 1]
            if b <= a:
                continue
            mid = 0.5 * (a + b)
            hw = 0.5 * (b - a)
            acc = 0.0
            for q in range(glx.size):
                w = mid + hw * glx[q]
                acc += glw[q] * (_osc_alpha_imag_nb(om - w, wa, gi)
                                 * _drude_r_imag_nb(w, gam))
            total += hw * acc
        return total

    @njit(cache=True)
    def _fdt_outer_numba(kx, v, wa, gi, gam, za, a0, a2, shells, glx, glw):
        n = kx.size
        out = np.empty(n)
        for i in range(n):
            arg = 2.0 * kx[i] * za
            k0e, k1e = _k0e_k1e_scalar_nb(arg)
            k2e = k0e + 2.0 * k1e / arg
            bess = kx[i] ** 3 * np.exp(-arg) * (a0 * k0e + a2 * k2e)
            out[i] = bess * _window_sum_nb(kx[i] * v, wa, gi, gam, shells, glx, glw)
        return out


# ---------------------------------------------------------------------------
# exported bindings
# ---------------------------------------------------------------------------

if USE_NUMBA:
    def k0e_k1e(x):
        """Scaled Bessel pair (e^x K0, e^x K1) on a float64 array."""
        return _k0e_k1e_numba(np.ascontiguousarray(np.atleast_1d(x), dtype=np.float64))

    def second_order_integrand(kx, v, wa, za, gam, a0, a2):
        return _second_order_integrand_numba(
            np.ascontiguousarray(np.atleast_1d(kx), dtype=np.float64),
            v, wa, za, gam, a0, a2)

    def fdt_outer_integrand(kx, v, wa, gi, gam, za, a0, a2, glx, glw):
        return _fdt_outer_numba(
            np.ascontiguousarray(np.atleast_1d(kx), dtype=np.float64),
            v, wa, gi, gam, za, a0, a2, _SHELLS, glx, glw)
else:
    def k0e_k1e(x):
        """Scaled Bessel pair (e^x K0, e^x K1) on a float64 array."""
        return _k0e_k1e_numpy(x)

    def second_order_integrand(kx, v, wa, za, gam, a0, a2):
        return _second_order_integrand_numpy(np.atleast_1d(kx), v, wa, za, gam, a0, a2)

    def fdt_outer_integrand(kx, v, wa, gi, gam, za, a0, a2, glx, glw):
        return _fdt_outer_numpy(kx, v, wa, gi, gam, za, a0, a2, glx, glw)


def numpy_reference():
    """The numpy implementations, independent of the active backend."""
    return {
        "k0e_k1e": _k0e_k1e_numpy,
        "second_order_integrand":
            lambda kx, v, wa, za, gam, a0, a2:
                _second_order_integrand_numpy(np.atleast_1d(kx), v, wa, za, gam, a0, a2),
        "fdt_outer_integrand": _fdt_outer_numpy,
    }
