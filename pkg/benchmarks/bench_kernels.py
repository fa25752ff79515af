"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each hot kernel on realistic node batches, reporting wall time per
call and the agreement between the two paths.  The numba path is warmed
up first so JIT compilation does not pollute the timing.

    python benchmarks/bench_kernels.py [--repeat 200]

(With DISPERSIA_NO_NUMBA=1 the package itself would run the numpy path;
this script always times both implementations side by side.)
"""

import argparse
import time

import numpy as np

from dispersia import _kernels
from dispersia.quad import gauss_legendre


def timeit(fn, args, repeat):
    fn(*args)                       # warmup / JIT
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = fn(*args)
    dt = (time.perf_counter() - t0) / repeat
    return dt, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--nodes", type=int, default=2000)
    args = parser.parse_args()

    if not _kernels.USE_NUMBA:
        print("numba backend unavailable or disabled; timing numpy against itself")
    ref = _kernels.numpy_reference()
    glx, glw = gauss_legendre(24)

    x = np.geomspace(1e-2, 2e3, args.nodes)
    kx_so = np.geomspace(8.0, 800.0, args.nodes)
    kx_fdt = np.geomspace(1.0, 800.0, max(args.nodes // 10, 50))

    cases = [
        ("bessel k0e/k1e", "k0e_k1e", (x,), {}),
        ("second-order integrand", "second_order_integrand",
         (kx_so, 0.025, 0.2, 0.05, 1e-2, 1.0, 1.0), {}),
        ("fdt window integrand", "fdt_outer_integrand",
         (kx_fdt, 5e-3, 0.2, 1e-3, 1e-1, 0.05, 1.0, 1.0, glx, glw), {}),
    ]

    print(f"{'kernel':28s} {'numba':>12s} {'numpy':>12s} {'speedup':>9s} {'max rel dev':>12s}")
    for label, name, a, kw in cases:
        t_active, out_a = timeit(getattr(_kernels, name), a, args.repeat)
        t_numpy, out_n = timeit(ref[name], a, args.repeat)
        flat_a = np.concatenate([np.ravel(o) for o in np.atleast_1d(out_a)]) \
            if isinstance(out_a, tuple) else np.ravel(out_a)
        flat_n = np.concatenate([np.ravel(o) for o in np.atleast_1d(out_n)]) \
            if isinstance(out_n, tuple) else np.ravel(out_n)
        dev = float(np.max(np.abs(flat_a - flat_n) /
                           np.maximum(np.abs(flat_n), 1e-300)))
        print(f"{label:28s} {t_active * 1e3:9.3f} ms {t_numpy * 1e3:9.3f} ms "
              f"{t_numpy / t_active:8.1f}x {dev:12.2e}")


if __name__ == "__main__":
    main()
