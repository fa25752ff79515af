import numpy as np
import pytest

from dispersia import cli


FRICTION_CONFIG = """
# velocity scan over the lossy gold surface
mode = friction
surface.omega_p_eV = 9
surface.gamma_over_omega_sp = 1e-1
dipole.kind = oscillator
dipole.omega_a_over_omega_sp = 0.2
dipole.gamma_over_omega_sp = 0.1
geometry.z_omega_sp_over_c = 0.05
velocity.v_over_c = logspace(1e-3, 1e-2, 4)
methods = fdt-windowed, asympt-intrinsic
"""

CP_CONFIG = """
mode = cp
surface.omega_p_eV = 9
surface.gamma_over_omega_p = 5e-3
dipole.kind = two-level
dipole.omega_a_over_omega_sp = 0.25
dipole.gamma_free_over_omega_a = 1e-3
geometry.z_omega_sp_over_c = 0.3, 0.6
methods = fdt, qrt
"""


def _read(path):
    lines = [l for l in path.read_text().splitlines()
             if l.strip() and not l.startswith("#")]
    names = lines[0].split(",")
    data = np.array([[float(x) for x in l.split(",")] for l in lines[1:]])
    return names, data


def test_run_friction_scenario(tmp_path):
    cfgfile = tmp_path / "scan.cfg"
    cfgfile.write_text(FRICTION_CONFIG)
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 0
    names, data = _read(tmp_path / "out" / "friction_fdt-windowed.csv")
    assert names == ["v_over_c", "F_over_F0", "quad_err"]
    assert data.shape == (4, 3)
    assert np.all(data[:, 1] < 0.0)
    assert np.all(np.isfinite(data))


def test_run_cp_scenario(tmp_path):
    cfgfile = tmp_path / "cp.cfg"
    cfgfile.write_text(CP_CONFIG)
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 0
    for m in ("fdt", "qrt"):
        names, data = _read(tmp_path / "out" / f"cp_{m}.csv")
        assert data.shape[0] == 2
        assert np.all(data[:, 2] < 0.0)      # attractive


def test_rerun_byte_identical(tmp_path):
    cfgfile = tmp_path / "scan.cfg"
    cfgfile.write_text(FRICTION_CONFIG)
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert cli.main(["run", str(cfgfile), "--out", str(out1)]) == 0
    assert cli.main(["run", str(cfgfile), "--out", str(out2)]) == 0
    for p1 in sorted(out1.iterdir()):
        p2 = out2 / p1.name
        assert p1.read_bytes() == p2.read_bytes()


def test_set_override(tmp_path):
    cfgfile = tmp_path / "scan.cfg"
    cfgfile.write_text(FRICTION_CONFIG)
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out"),
                   "--set", "velocity.v_over_c=2e-3,4e-3,8e-3"])
    assert rc == 0
    _, data = _read(tmp_path / "out" / "friction_fdt-windowed.csv")
    assert data.shape[0] == 3
    assert data[0, 0] == pytest.approx(2e-3)


def test_empty_methods_is_config_error(tmp_path):
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text(FRICTION_CONFIG.replace(
        "methods = fdt-windowed, asympt-intrinsic", "methods ="))
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 2


def test_unknown_method_reports_field(tmp_path, capsys):
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text(FRICTION_CONFIG.replace("asympt-intrinsic", "warp-drive"))
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 2
    err = capsys.readouterr().err
    assert "methods" in err and "warp-drive" in err


def test_missing_required_key(tmp_path, capsys):
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text(FRICTION_CONFIG.replace(
        "velocity.v_over_c = logspace(1e-3, 1e-2, 4)", ""))
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 2
    assert "velocity.v_over_c" in capsys.readouterr().err


def test_malformed_line(tmp_path, capsys):
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text("mode friction\n")
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 2


def test_numeric_failure_exit_code(tmp_path, capsys):
    # undamped oscillator in the windowed engine: higher-order regime
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text(FRICTION_CONFIG.replace(
        "dipole.gamma_over_omega_sp = 0.1", "dipole.gamma_over_omega_sp = 0"))
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 3


SPECTRA_CONFIG = """
mode = spectra
surface.omega_p_eV = 9
dipole.kind = two-level
dipole.omega_a_over_omega_sp = 0.25
dipole.gamma_free_over_omega_a = 1e-2
spectrum.omega_over_omega_a = linspace(-0.2, 2.0, 23)
methods = fdt, qrt
"""


def test_run_spectra_scenario(tmp_path):
    cfgfile = tmp_path / "sp.cfg"
    cfgfile.write_text(SPECTRA_CONFIG)
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 0
    names, data = _read(tmp_path / "out" / "spectra.csv")
    assert names == ["omega_over_omega_tilde", "s_fdt", "s_qrt", "quad_err"]
    x = data[:, 0]
    assert np.all(data[x <= 0.0, 1] == 0.0)
    assert np.all(data[:, 2] > 0.0)


def test_spectra_mode_rejects_oscillator(tmp_path, capsys):
    cfgfile = tmp_path / "sp.cfg"
    cfgfile.write_text(SPECTRA_CONFIG.replace("dipole.kind = two-level",
                                              "dipole.kind = oscillator"))
    rc = cli.main(["run", str(cfgfile), "--out", str(tmp_path / "out")])
    assert rc == 2
    assert "two-level" in capsys.readouterr().err


def test_figure_fig3(tmp_path):
    rc = cli.main(["figure", "fig3", "--out", str(tmp_path)])
    assert rc == 0
    names, data = _read(tmp_path / "fig3_spectra.csv")
    assert names == ["omega_over_omega_tilde", "s_fdt", "s_qrt", "quad_err"]
    x, s_f, s_q = data[:, 0], data[:, 1], data[:, 2]
    assert np.all(s_f[x <= 0.0] == 0.0)
    assert np.all(s_q > 0.0)
    i_res = np.argmin(np.abs(x - 1.0))
    assert s_f[i_res] == pytest.approx(s_q[i_res], rel=0.01)


def test_figure_reduced_grids(tmp_path):
    rc = cli.main(["figure", "fig4", "--out", str(tmp_path), "--set", "n=5"])
    assert rc == 0
    _, data = _read(tmp_path / "fig4_Gamma0.csv")
    assert data.shape[0] == 5


def test_figure_unknown_override(tmp_path):
    rc = cli.main(["figure", "fig4", "--out", str(tmp_path), "--set", "bogus=1"])
    assert rc == 2
