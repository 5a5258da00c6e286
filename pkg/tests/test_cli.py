import subprocess
import sys

import numpy as np
import pytest

BASE = [sys.executable, "-m", "softmotion"]


def run_cli(args, stdin=""):
    return subprocess.run(BASE + list(args), input=stdin, capture_output=True,
                          text=True, timeout=600)


def parse_csv(text):
    lines = [ln for ln in text.strip().splitlines() if ln]
    header = lines[0].split(",")
    rows = np.array([[float(tok) for tok in ln.split(",")] for ln in lines[1:]])
    return header, rows


def test_plan_ptp_linear(tmp_path):
    out = tmp_path / "traj.csv"
    res = run_cli(["plan-ptp", "--from", "0,0,0", "--to", "0.15,0,0",
                   "--dt", "0.01", "--out", str(out)])
    assert res.returncode == 0, res.stderr
    header, rows = parse_csv(out.read_text())
    assert header[0] == "t" and "x_pos" in header
    assert rows[-1, 0] == pytest.approx(11.0 / 6.0, abs=1e-6)
    assert rows[-1, header.index("x_pos")] == pytest.approx(0.15, abs=1e-9)
    assert rows[-1, header.index("y_pos")] == 0.0


def test_plan_ptp_degenerate_single_row(tmp_path):
    out = tmp_path / "traj.csv"
    res = run_cli(["plan-ptp", "--from", "0.1,0.2,0.3", "--to", "0.1,0.2,0.3",
                   "--out", str(out)])
    assert res.returncode == 0, res.stderr
    header, rows = parse_csv(out.read_text())
    assert rows.shape[0] == 1
    assert rows[0, 0] == 0.0
    assert rows[0, header.index("x_pos")] == pytest.approx(0.1)


def test_plan_ptp_pose_motion(tmp_path):
    out = tmp_path / "traj.csv"
    res = run_cli(["plan-ptp", "--from", "0,0,0,1,0,0,0",
                   "--to", "0.1,0,0,0.96592583,0,0,0.25881905",
                   "--out", str(out)])
    assert res.returncode == 0, res.stderr
    header, rows = parse_csv(out.read_text())
    assert "qk_pos" in header
    q_end = rows[-1, [header.index(f"{n}_pos") for n in ("qn", "qi", "qj", "qk")]]
    assert np.linalg.norm(q_end) == pytest.approx(1.0, abs=1e-6)


def test_invalid_limits_file_exits_2(tmp_path):
    bad = tmp_path / "limits.txt"
    bad.write_text("linear.vmax 0\n")
    res = run_cli(["plan-ptp", "--from", "0,0,0", "--to", "0.1,0,0",
                   "--limits", str(bad), "--out", "-"])
    assert res.returncode == 2
    assert res.stderr.strip() != ""


def test_missing_limits_file_exits_2():
    res = run_cli(["plan-ptp", "--from", "0,0,0", "--to", "0.1,0,0",
                   "--limits", "/nonexistent/limits.txt", "--out", "-"])
    assert res.returncode == 2


def test_plan_path_report(tmp_path):
    wp = tmp_path / "waypoints.txt"
    wp.write_text("# three-point mission\n"
                  "0,0,0\n0.15,0.15,0\n0.30,0.30,0.15\n")
    out = tmp_path / "traj.csv"
    rep = tmp_path / "report.csv"
    res = run_cli(["plan-path", "--waypoints", str(wp), "--out", str(out),
                   "--report", str(rep)])
    assert res.returncode == 0, res.stderr
    lines = rep.read_text().strip().splitlines()
    assert lines[0] == "waypoint,axis,v_in,v_out,displacement,t_opt,t_imp"
    table = {parts[1]: [float(x) for x in parts[2:]]
             for parts in (ln.split(",") for ln in lines[1:])}
    assert table["x"][0] == pytest.approx(0.15, abs=1e-9)     # v_in
    assert table["z"][0] == pytest.approx(0.0, abs=1e-9)
    assert table["x"][2] == pytest.approx(0.125, abs=1e-9)    # displacement
    assert table["z"][2] == pytest.approx(0.0625, abs=1e-9)
    assert table["x"][3] == pytest.approx(0.8333, abs=1e-3)   # t_opt
    assert table["z"][4] == pytest.approx(0.8333, abs=1e-3)   # t_imp
    header, rows = parse_csv(out.read_text())
    assert rows[-1, header.index("x_pos")] == pytest.approx(0.30, abs=1e-9)


def test_plan_path_needs_three_points(tmp_path):
    wp = tmp_path / "waypoints.txt"
    wp.write_text("0,0,0\n0.1,0,0\n")
    res = run_cli(["plan-path", "--waypoints", str(wp), "--out", "-"])
    assert res.returncode == 2
    assert "three points" in res.stderr


def test_track_empty_input_exits_clean():
    res = run_cli(["track"], stdin="")
    assert res.returncode == 0
    assert res.stdout == ""


def test_track_step_reference():
    res = run_cli(["track", "--tick", "0.01"],
                  stdin="0.0 0.15 0 0 0 0 0\n")
    assert res.returncode == 0, res.stderr
    rows = [ln.split() for ln in res.stdout.strip().splitlines()]
    vx = [float(r[8]) for r in rows]
    t = [float(r[0]) for r in rows]
    k_reach = next(i for i, v in enumerate(vx) if abs(v - 0.15) <= 1e-9)
    assert t[k_reach] == pytest.approx(5.0 / 6.0, abs=0.01 + 1e-9)
    assert max(vx) <= 0.15 + 1e-9


def test_track_clamps_reference():
    res = run_cli(["track", "--tick", "0.01"],
                  stdin="0.0 0.4 0 0 0 0 0\n")
    assert res.returncode == 0
    rows = [ln.split() for ln in res.stdout.strip().splitlines()]
    vx = [float(r[8]) for r in rows]
    assert max(vx) == pytest.approx(0.15, abs=1e-9)


def test_track_skips_malformed_lines():
    res = run_cli(["track", "--tick", "0.01"],
                  stdin="0.0 0.1 0 0 0 0 0\nnot a reference\n0.2 0 0 0 0 0 0\n")
    assert res.returncode == 0
    assert "warning" in res.stderr


def test_oracle_subcommand():
    res = run_cli(["oracle", "--init", "0,0", "--final", "0,0",
                   "--displacement", "0.0144", "--dt", "0.004"])
    assert res.returncode == 0, res.stderr
    assert float(res.stdout.strip()) == pytest.approx(0.8, abs=0.008)


def test_output_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        res = run_cli(["plan-ptp", "--from", "0,0,0", "--to", "0.11,-0.07,0.033",
                       "--out", str(out)])
        assert res.returncode == 0
    assert a.read_bytes() == b.read_bytes()
