"""Command-line scenario runner and figure-dataset emitter.

Subcommands
-----------
``dispersia run <config>``      parameter sweep from a key-value config
``dispersia figure figN``       built-in dataset presets (N = 2..5)
``dispersia selftest``          acceptance suite, one line per criterion

Exit codes: 0 success, 2 configuration error, 3 numeric failure.  The
environment variable ``DISPERSIA_THREADS`` caps sweep parallelism (points
are dispatched to a thread pool; rows are written in input order so
reruns are byte-identical).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, casimir_polder, friction, presets, spectra
from .material import SurfaceModel
from .polarizability import (DipoleModel, DressedRates, poles_and_residues,
                             surface_modified_rates)
from .quad import QuadratureError
from .units import UnitSystem


class ConfigError(ValueError):
    """Invalid scenario configuration; message carries the field path."""


EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass
class ScenarioConfig:
    mode: str
    surface: SurfaceModel
    dipole: DipoleModel
    units: UnitSystem | None
    z_values: np.ndarray
    v_values: np.ndarray
    omega_values: np.ndarray
    methods: tuple
    rtol: float
    out_dir: Path
    include_shift: bool = False
    raw: dict = field(default_factory=dict)


def _parse_kv(text, source="<config>"):
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        key, val = (part.strip() for part in body.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        values[key] = val
    return values


def _parse_sweep(key, text):
    text = text.strip()
    for name, fn in (("logspace", np.geomspace), ("linspace", np.linspace)):
        if text.startswith(name):
            inner = text[len(name):].strip()
            if not (inner.startswith("(") and inner.endswith(")")):
                raise ConfigError(f"{key}: malformed sweep {text!r}")
            parts = [p.strip() for p in inner[1:-1].split(",")]
            if len(parts) != 3:
                raise ConfigError(f"{key}: sweep needs (start, stop, n)")
            try:
                a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
            except ValueError as exc:
                raise ConfigError(f"{key}: {exc}") from None
            if n < 1:
                raise ConfigError(f"{key}: sweep needs n >= 1")
            return fn(a, b, n)
    try:
        return np.array([float(p) for p in text.split(",") if p.strip()])
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def _get_float(values, key, default=None, positive=False):
    if key not in values:
        if default is None:
            raise ConfigError(f"{key}: required")
        return default
    try:
        x = float(values[key])
    except ValueError:
        raise ConfigError(f"{key}: not a number: {values[key]!r}") from None
    if positive and x <= 0.0:
        raise ConfigError(f"{key}: must be > 0")
    return x


def build_config(values, out_override=None, source="<config>"):
    mode = values.get("mode", "").strip()
    if mode not in ("cp", "friction", "spectra"):
        raise ConfigError("mode: must be one of cp, friction, spectra")

    omega_p_ev = _get_float(values, "surface.omega_p_eV", 9.0, positive=True)
    if "surface.gamma_over_omega_p" in values:
        gam = _get_float(values, "surface.gamma_over_omega_p") * math.sqrt(2.0)
    else:
        gam = _get_float(values, "surface.gamma_over_omega_sp", 5e-3 * math.sqrt(2.0))
    if gam < 0:
        raise ConfigError("surface.gamma_over_omega_p: must be >= 0")
    surface = SurfaceModel(gamma=gam)

    kind = values.get("dipole.kind", "two-level").strip()
    if kind not in ("two-level", "oscillator"):
        raise ConfigError(f"dipole.kind: unknown kind {kind!r}")
    omega_sp = UnitSystem.from_drude(omega_p_ev, 0.0).omega_ref
    if "dipole.omega_a_over_omega_sp" in values:
        wa = _get_float(values, "dipole.omega_a_over_omega_sp", positive=True)
    elif "dipole.omega_a_rad_s" in values:
        wa = _get_float(values, "dipole.omega_a_rad_s", positive=True) / omega_sp
    else:
        raise ConfigError("dipole.omega_a_over_omega_sp: required "
                          "(or dipole.omega_a_rad_s)")

    alpha0 = _get_float(values, "dipole.alpha0_SI", 0.0)
    if alpha0 < 0:
        raise ConfigError("dipole.alpha0_SI: must be >= 0")
    units = UnitSystem.from_drude(omega_p_ev, alpha0)

    orientation = values.get("dipole.orientation", "isotropic").strip()
    theta = phi = None
    if orientation != "isotropic":
        try:
            theta, phi = (float(p) for p in orientation.split(","))
        except ValueError:
            raise ConfigError("dipole.orientation: 'isotropic' or "
                              "'theta,phi' in radians") from None

    if kind == "two-level":
        if "dipole.gamma_free_over_omega_a" in values:
            gfree = _get_float(values, "dipole.gamma_free_over_omega_a") * wa
            dipole = DipoleModel.two_level(omega_a=wa, gamma_free=gfree,
                                           theta=theta, phi=phi)
        elif alpha0 > 0.0:
            dipole = DipoleModel.two_level(omega_a=wa, coupling=units.coupling,
                                           theta=theta, phi=phi)
        else:
            dipole = DipoleModel.two_level(omega_a=wa, theta=theta, phi=phi)
    else:
        gi = _get_float(values, "dipole.gamma_over_omega_sp", 0.0)
        if gi < 0:
            raise ConfigError("dipole.gamma_over_omega_sp: must be >= 0")
        dipole = DipoleModel.oscillator(omega_a=wa, gamma_intrinsic=gi,
                                        coupling=units.coupling,
                                        theta=theta, phi=phi)

    z_values = _parse_sweep("geometry.z_omega_sp_over_c",
                            values["geometry.z_omega_sp_over_c"]) \
        if "geometry.z_omega_sp_over_c" in values else np.array([])
    if "geometry.z_over_lambda_p" in values:
        lam = 2.0 * np.pi / math.sqrt(2.0)
        z_values = _parse_sweep("geometry.z_over_lambda_p",
                                values["geometry.z_over_lambda_p"]) * lam
    v_values = _parse_sweep("velocity.v_over_c", values["velocity.v_over_c"]) \
        if "velocity.v_over_c" in values else np.array([])
    omega_values = _parse_sweep("spectrum.omega_over_omega_a",
                                values["spectrum.omega_over_omega_a"]) \
        if "spectrum.omega_over_omega_a" in values else np.array([])

    methods = tuple(m.strip() for m in values.get("methods", "").split(",")
                    if m.strip())
    if not methods:
        raise ConfigError("methods: at least one method required")

    known = {
        "cp": {"fdt", "qrt", "bare", "lifshitz", "nm"},
        "friction": {"second-order", "plasma", "fdt-windowed",
                     "asympt-radiative", "asympt-surface-ohmic",
                     "asympt-intrinsic", "qrt-linear"},
        "spectra": {"fdt", "qrt"},
    }[mode]
    for m in methods:
        if m not in known:
            raise ConfigError(f"methods: {m!r} not valid for mode {mode}: "
                              f"choose from {sorted(known)}")
    needs_oscillator = {"lifshitz", "fdt-windowed", "asympt-intrinsic"}
    needs_two_level = {"qrt", "nm", "qrt-linear"}
    for m in methods:
        if m in needs_oscillator and kind != "oscillator":
            raise ConfigError(f"methods: {m!r} needs dipole.kind = oscillator")
        if m in needs_two_level and kind != "two-level":
            raise ConfigError(f"methods: {m!r} needs dipole.kind = two-level")

    if mode == "cp" and z_values.size == 0:
        raise ConfigError("geometry.z_omega_sp_over_c: required for mode cp")
    if mode == "friction":
        if v_values.size == 0:
            raise ConfigError("velocity.v_over_c: required for mode friction")
        if z_values.size != 1:
            raise ConfigError("geometry.z_omega_sp_over_c: friction sweeps "
                              "need a single height")
    if mode == "spectra":
        if omega_values.size == 0:
            raise ConfigError("spectrum.omega_over_omega_a: required for mode spectra")
        if kind != "two-level":
            raise ConfigError("dipole.kind: spectra mode needs the two-level model")

    rtol = _get_float(values, "quad.rtol", 1e-8, positive=True)
    out_dir = Path(out_override or values.get("output.dir", "out"))
    include_shift = values.get("cp.include_shift", "false").strip().lower() in (
        "1", "true", "yes")
    return ScenarioConfig(mode=mode, surface=surface, dipole=dipole,
                          units=units if alpha0 > 0 else None,
                          z_values=z_values, v_values=v_values,
                          omega_values=omega_values, methods=methods,
                          rtol=rtol, out_dir=out_dir,
                          include_shift=include_shift, raw=dict(values))


# ---------------------------------------------------------------------------
# dataset writing
# ---------------------------------------------------------------------------

def _fmt(x):
    return f"{x:.11e}"


def write_csv(path, header_lines, columns, rows, timestamp=False):
    """CSV with '#' header comments, 12-significant-digit scientific
    notation, byte-deterministic unless a timestamp is requested."""
    rows = [list(r) for r in rows]
    for r in rows:
        for x in r:
            if not np.isfinite(x):
                raise FloatingPointError(f"non-finite value in dataset {path.name}")
    lines = [f"# dispersia {__version__}"]
    lines += [f"# {h}" for h in header_lines]
    if timestamp:
        import datetime
        lines.append(f"# written {datetime.datetime.now().isoformat()}")
    lines.append(",".join(columns))
    for r in rows:
        lines.append(",".join(_fmt(x) for x in r))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def _pool():
    n = os.environ.get("DISPERSIA_THREADS", "")
    try:
        workers = max(1, int(n)) if n else min(4, os.cpu_count() or 1)
    except ValueError:
        workers = 1
    return ThreadPoolExecutor(max_workers=workers)


def _map_ordered(fn, items):
    with _pool() as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# scenario engines
# ---------------------------------------------------------------------------

def _run_cp(cfg: ScenarioConfig, timestamp=False):
    outputs = []
    lam = 2.0 * np.pi / math.sqrt(2.0)
    for method in cfg.methods:
        def one(z):
            if method == "nm":
                r = casimir_polder.cp_nm_correction(
                    z, cfg.dipole, cfg.surface, include_shift=cfg.include_shift,
                    units=cfg.units, rtol=cfg.rtol)
            else:
                r = casimir_polder.cp_force(
                    z, method, cfg.dipole, cfg.surface,
                    include_shift=cfg.include_shift, units=cfg.units,
                    rtol=cfg.rtol)
            return [z, z / lam, r.force, r.error]

        rows = _map_ordered(one, cfg.z_values)
        path = cfg.out_dir / f"cp_{method}.csv"
        write_csv(path, _headers(cfg, f"cp force, method {method}"),
                  ["z_omega_sp_over_c", "z_over_lambda_p", "F_over_F0", "quad_err"],
                  rows, timestamp)
        outputs.append(path)
    return outputs


def _friction_method(cfg, method, z):
    dip = cfg.dipole

    def one(v):
        scn = friction.FrictionScenario(v=v, z=z, surface=cfg.surface, dipole=dip)
        if method == "plasma":
            r = friction.friction_plasma_closed_form(scn)
            return [v, r.force, r.error]
        if method == "second-order":
            r = friction.friction_second_order_numeric(scn, rtol=cfg.rtol)
            return [v, r.force, r.error]
        if method == "fdt-windowed":
            r = friction.friction_fdt_low_velocity(scn, rtol=cfg.rtol)
            return [v, r.force, r.error]
        if method == "qrt-linear":
            rates = DressedRates(omega_tilde=dip.omega_a,
                                 gamma_a=max(dip.gamma_free, 1e-12))
            ps = poles_and_residues(dip, rates=rates)
            q = friction.friction_qrt_with_cancellation(scn, ps, rtol=cfg.rtol)
            return [v, q.f_qrt_linear, q.error]
        regime = method.removeprefix("asympt-")
        return [v, friction.friction_asymptotic(scn, regime), 0.0]

    return one


def _run_friction(cfg: ScenarioConfig, timestamp=False):
    outputs = []
    z = float(cfg.z_values[0])
    for method in cfg.methods:
        rows = _map_ordered(_friction_method(cfg, method, z), cfg.v_values)
        path = cfg.out_dir / f"friction_{method}.csv"
        write_csv(path, _headers(cfg, f"friction force, method {method}, z={z!r}"),
                  ["v_over_c", "F_over_F0", "quad_err"], rows, timestamp)
        outputs.append(path)
    return outputs


def _run_spectra(cfg: ScenarioConfig, timestamp=False):
    dip = cfg.dipole
    ga = max(dip.gamma_free, 1e-12)
    rates = DressedRates(omega_tilde=dip.omega_a, gamma_a=ga)
    rows = []
    for x in cfg.omega_values:
        w = x * rates.omega_tilde
        row = [x]
        for method in cfg.methods:
            sm = spectra.make_spectrum_model(method, dip, rates)
            row.append(spectra.normalized_spectrum(w, sm))
        row.append(0.0)
        rows.append(row)
    path = cfg.out_dir / "spectra.csv"
    cols = ["omega_over_omega_tilde"] + [f"s_{m}" for m in cfg.methods] + ["quad_err"]
    write_csv(path, _headers(cfg, "normalized power spectra"), cols, rows, timestamp)
    return [path]


def _headers(cfg: ScenarioConfig, title):
    lines = [title]
    for key in sorted(cfg.raw):
        lines.append(f"{key} = {cfg.raw[key]}")
    lines.append(f"quad.rtol = {cfg.rtol!r}")
    return lines


def run_scenario(cfg: ScenarioConfig, timestamp=False):
    runner = {"cp": _run_cp, "friction": _run_friction,
              "spectra": _run_spectra}[cfg.mode]
    return runner(cfg, timestamp)


# ---------------------------------------------------------------------------
# figure presets
# ---------------------------------------------------------------------------

def emit_figure_dataset(figure, out_dir, rtol=1e-8, timestamp=False,
                        overrides=None):
    """Write the dataset files of one of the built-in figures; returns the
    paths written."""
    out = Path(out_dir)
    over = dict(overrides or {})
    grid_n = int(over.pop("n", 0)) or None
    if over:
        raise ConfigError(f"unknown overrides for {figure}: {sorted(over)}")
    if figure == "fig2":
        return _emit_fig2(out, rtol, timestamp, grid_n)
    if figure == "fig3":
        return _emit_fig3(out, timestamp, grid_n)
    if figure == "fig4":
        return _emit_fig4(out, rtol, timestamp, grid_n)
    if figure == "fig5":
        return _emit_fig5(out, rtol, timestamp, grid_n)
    raise ConfigError(f"unknown figure {figure!r} (fig2..fig5)")


def _emit_fig2(out, rtol, timestamp, n):
    z_over_lp, z_bar = presets.fig2_grid(n or 24)
    paths = []
    for name, dip in presets.fig2_atoms().items():
        def one(z):
            recs = casimir_polder.cp_distance_scan(
                [z], dip, presets.GOLD, include_shift=False, rtol=rtol)
            r = recs[0]
            return [r["f_fdt"], r["f_qrt"], r["diff_abs"], r["diff_rel"], r["err"]]

        data = _map_ordered(one, z_bar)
        rows = [[zl] + d for zl, d in zip(z_over_lp, data)]
        path = out / f"fig2_{name}.csv"
        hdr = ["distance scan of exact (fdt) vs regression (qrt) force",
               f"atom config: {name}",
               f"omega_a/omega_sp = {dip.omega_a!r}",
               f"gamma_free/omega_sp = {dip.gamma_free!r}",
               f"coupling = {dip.coupling!r}",
               f"surface: gold omega_p = {presets.OMEGA_P_EV} eV, "
               f"Gamma/omega_p = {presets.GAMMA_OVER_OMEGA_P}",
               "level shift disabled (linewidth only)",
               f"quad rtol = {rtol!r}"]
        write_csv(path, hdr,
                  ["z_over_lambda_p", "F_fdt_over_F0", "F_qrt_over_F0",
                   "diff_abs", "diff_rel", "quad_err"], rows, timestamp)
        paths.append(path)
    return paths


def _emit_fig3(out, timestamp, n):
    wa = presets.rb_omega_bar()
    ga = presets.FIG3_GAMMA_RATIO * wa
    dip = DipoleModel.two_level(omega_a=wa, gamma_free=ga)
    rates = DressedRates(omega_tilde=wa, gamma_a=ga)
    sm_f = spectra.make_spectrum_model("fdt", dip, rates)
    sm_q = spectra.make_spectrum_model("qrt", dip, rates)
    rows = []
    for x in presets.fig3_grid(n or 441):
        w = x * wa
        rows.append([x, spectra.normalized_spectrum(w, sm_f),
                     spectra.normalized_spectrum(w, sm_q), 0.0])
    path = out / "fig3_spectra.csv"
    hdr = ["normalized power spectra s(omega), exact (fdt) vs regression (qrt)",
           f"gamma_a/omega_tilde = {presets.FIG3_GAMMA_RATIO!r}"]
    write_csv(path, hdr,
              ["omega_over_omega_tilde", "s_fdt", "s_qrt", "quad_err"],
              rows, timestamp)
    return [path]


def _emit_fig4(out, rtol, timestamp, n):
    dip = DipoleModel.two_level(omega_a=presets.FIG45_OMEGA_A)
    vs = presets.fig4_grid(n or 36)
    paths = []
    for gam in presets.FIG4_GAMMAS:
        surface = SurfaceModel(gamma=gam)

        def one(v):
            scn = friction.FrictionScenario(v=v, z=presets.FIG45_Z,
                                            surface=surface, dipole=dip)
            if gam == 0.0:
                r = friction.friction_plasma_closed_form(scn)
            else:
                r = friction.friction_second_order_numeric(scn, rtol=rtol)
            return [v, r.force, r.error]

        rows = _map_ordered(one, vs)
        tag = "0" if gam == 0.0 else f"{gam:.0e}"
        path = out / f"fig4_Gamma{tag}.csv"
        hdr = ["second-order friction velocity scan (dipole-orientation average)",
               f"Gamma/omega_sp = {gam!r}",
               f"omega_a/omega_sp = {presets.FIG45_OMEGA_A}, "
               f"z omega_sp/c = {presets.FIG45_Z}"]
        write_csv(path, hdr, ["v_over_c", "F_over_F0", "quad_err"], rows, timestamp)
        paths.append(path)
    return paths


def _emit_fig5(out, rtol, timestamp, n):
    vs = presets.fig5_grid(n or 36)
    gam = presets.FIG5_SURFACE_GAMMA
    surface = SurfaceModel(gamma=gam)
    paths = []
    for gi in presets.FIG5_INTRINSIC:
        dip = DipoleModel.oscillator(omega_a=presets.FIG45_OMEGA_A,
                                     gamma_intrinsic=gi)

        def one(v):
            scn = friction.FrictionScenario(v=v, z=presets.FIG45_Z,
                                            surface=surface, dipole=dip)
            if gi == 0.0:
                r = friction.friction_second_order_numeric(scn, rtol=rtol)
            else:
                r = friction.friction_fdt_low_velocity(scn, rtol=rtol)
            return [v, r.force, r.error]

        rows = _map_ordered(one, vs)
        tag = "0" if gi == 0.0 else f"{gi:.0e}"
        path = out / f"fig5_gamma{tag}.csv"
        hdr = ["windowed friction velocity scan, intrinsic damping",
               f"gamma/omega_sp = {gi!r}, Gamma/omega_sp = {gam!r}",
               f"omega_a/omega_sp = {presets.FIG45_OMEGA_A}, "
               f"z omega_sp/c = {presets.FIG45_Z}"]
        write_csv(path, hdr, ["v_over_c", "F_over_F0", "quad_err"], rows, timestamp)
        paths.append(path)

    # reference curves: the low-velocity exponential asymptote and the
    # lossless-surface closed form
    dip = DipoleModel.two_level(omega_a=presets.FIG45_OMEGA_A)
    rows_a, rows_p = [], []
    for v in vs:
        scn = friction.FrictionScenario(v=v, z=presets.FIG45_Z,
                                        surface=surface, dipole=dip)
        rows_a.append([v, friction.friction_asymptotic(scn, "surface-ohmic"), 0.0])
        scn0 = friction.FrictionScenario(v=v, z=presets.FIG45_Z,
                                         surface=SurfaceModel(gamma=0.0), dipole=dip)
        rows_p.append([v, friction.friction_plasma_closed_form(scn0).force, 0.0])
    for tag, rows, title in (("asympt2", rows_a, "surface-ohmic exponential asymptote"),
                             ("plasma", rows_p, "lossless closed form")):
        path = out / f"fig5_{tag}.csv"
        write_csv(path, [title, f"Gamma/omega_sp = {gam!r}"],
                  ["v_over_c", "F_over_F0", "quad_err"], rows, timestamp)
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="dispersia",
        description="Atom-surface dispersion forces: Casimir-Polder and "
                    "quantum friction datasets")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario config file")
    p_run.add_argument("config", type=Path)
    p_run.add_argument("--out", type=Path, default=None)
    p_run.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override a config entry")
    p_run.add_argument("--timestamp", action="store_true",
                       help="stamp headers with wall-clock time "
                            "(breaks byte determinism)")

    p_fig = sub.add_parser("figure", help="emit a built-in figure dataset")
    p_fig.add_argument("figure", choices=["fig2", "fig3", "fig4", "fig5"])
    p_fig.add_argument("--out", type=Path, default=Path("out"))
    p_fig.add_argument("--set", action="append", default=[], metavar="KEY=VALUE")
    p_fig.add_argument("--rtol", type=float, default=1e-8)
    p_fig.add_argument("--timestamp", action="store_true")

    sub.add_parser("selftest", help="run the acceptance suite")

    args = parser.parse_args(argv)

    if args.command == "selftest":
        from . import acceptance
        results = acceptance.run_all(verbose=True)
        return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC

    if args.command == "figure":
        overrides = {}
        for item in args.set:
            if "=" not in item:
                print(f"error: --set expects KEY=VALUE, got {item!r}",
                      file=sys.stderr)
                return EXIT_CONFIG
            k, v = item.split("=", 1)
            overrides[k.strip()] = v.strip()
        try:
            paths = emit_figure_dataset(args.figure, args.out, rtol=args.rtol,
                                        timestamp=args.timestamp,
                                        overrides=overrides)
        except ConfigError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        except (FloatingPointError, QuadratureError) as exc:
            print(f"numeric failure: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        for p in paths:
            print(p)
        return EXIT_OK

    # run
    try:
        text = args.config.read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        values = _parse_kv(text, source=str(args.config))
        for item in args.set:
            if "=" not in item:
                raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
            k, v = item.split("=", 1)
            values[k.strip()] = v.strip()
        cfg = build_config(values, out_override=args.out,
                           source=str(args.config))
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        paths = run_scenario(cfg, timestamp=args.timestamp)
    except (FloatingPointError, QuadratureError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    for p in paths:
        print(p)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
