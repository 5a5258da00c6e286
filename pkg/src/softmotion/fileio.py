"""File formats shared by the command-line tools.

Limits file: one ``key value`` pair per line, ``#`` starts a comment.
Recognized keys are linear.jmax, linear.amax, linear.vmax and their
angular.* counterparts; missing keys fall back to the defaults below.

Waypoints file: one point per line, comma separated, either ``x,y,z`` or
``x,y,z,qn,qi,qj,qk``; all lines must share the same width.

Trajectory CSV: header ``t`` then ``<axis>_pos,<axis>_vel,<axis>_acc,
<axis>_jerk`` per axis; samples on the grid t0 + k*dt plus the exact final
time.  All numbers are serialized with 9 significant digits, so output is
byte-identical across runs.
"""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .profiles import AxisProfile, KinematicLimits, evaluate

DEFAULT_LINEAR = KinematicLimits(jmax=0.900, amax=0.300, vmax=0.150)
DEFAULT_ANGULAR = KinematicLimits(jmax=0.600, amax=0.200, vmax=0.100)

_LIMIT_KEYS = ("linear.jmax", "linear.amax", "linear.vmax",
               "angular.jmax", "angular.amax", "angular.vmax")


@dataclass(frozen=True)
class LimitSet:
    linear: KinematicLimits = DEFAULT_LINEAR
    angular: KinematicLimits = DEFAULT_ANGULAR


def fmt(x: float) -> str:
    """Canonical 9-significant-digit serialization."""
    return f"{float(x):.9g}"


def read_limits(path: str) -> LimitSet:
    values = {"linear.jmax": DEFAULT_LINEAR.jmax,
              "linear.amax": DEFAULT_LINEAR.amax,
              "linear.vmax": DEFAULT_LINEAR.vmax,
              "angular.jmax": DEFAULT_ANGULAR.jmax,
              "angular.amax": DEFAULT_ANGULAR.amax,
              "angular.vmax": DEFAULT_ANGULAR.vmax}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace("=", " ").split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'key value', got {line!r}")
            key, raw = parts
            if key not in _LIMIT_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = float(raw)
    return LimitSet(
        linear=KinematicLimits(values["linear.jmax"], values["linear.amax"],
                               values["linear.vmax"]),
        angular=KinematicLimits(values["angular.jmax"], values["angular.amax"],
                                values["angular.vmax"]),
    )


def write_limits(path: str, limits: LimitSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for key, val in (("linear.jmax", limits.linear.jmax),
                         ("linear.amax", limits.linear.amax),
                         ("linear.vmax", limits.linear.vmax),
                         ("angular.jmax", limits.angular.jmax),
                         ("angular.amax", limits.angular.amax),
                         ("angular.vmax", limits.angular.vmax)):
            fh.write(f"{key} {fmt(val)}\n")


def read_waypoints(path: str) -> np.ndarray:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            vals = [float(tok) for tok in line.split(",")]
            if len(vals) not in (3, 7):
                raise ValueError(
                    f"{path}:{lineno}: waypoints need 3 or 7 coordinates, got {len(vals)}")
            rows.append(vals)
    if not rows:
        raise ValueError(f"{path}: no waypoints found")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError(f"{path}: mixed 3- and 7-coordinate waypoints")
    return np.array(rows, dtype=float)


def parse_vector(text: str) -> list[float]:
    vals = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    if len(vals) not in (2, 3, 7):
        raise ValueError(f"expected 2, 3 or 7 comma-separated numbers, got {len(vals)}")
    return vals


def trajectory_grid(profiles: list[AxisProfile], dt: float) -> list[float]:
    """Common sampling grid t0 + k*dt over the longest axis plus its exact end."""
    end = max((p.end_time for p in profiles if p.segments), default=0.0)
    ts = []
    k = 0
    while k * dt < end - 1e-12:
        ts.append(k * dt)
        k += 1
    ts.append(end)
    return ts


def write_trajectory_csv(stream: io.TextIOBase, profiles: list[AxisProfile],
                         names: list[str], dt: float,
                         rest_positions: list[float] | None = None) -> None:
    """Sampled trajectory table; one row per grid instant.

    Axes with empty profiles (no motion at all) report their rest position
    with zero derivatives.
    """
    if len(profiles) != len(names):
        raise ValueError("one name per axis profile is required")
    if rest_positions is None:
        rest_positions = [0.0] * len(profiles)
    header = ["t"]
    for name in names:
        header += [f"{name}_pos", f"{name}_vel", f"{name}_acc", f"{name}_jerk"]
    stream.write(",".join(header) + "\n")
    for t in trajectory_grid(profiles, dt):
        row = [fmt(t)]
        for prof, rest in zip(profiles, rest_positions):
            if prof.segments:
                state, jerk = evaluate(prof, min(max(t, prof.t0), prof.end_time))
                row += [fmt(state.x), fmt(state.v), fmt(state.a), fmt(jerk)]
            else:
                row += [fmt(rest), fmt(0.0), fmt(0.0), fmt(0.0)]
        stream.write(",".join(row) + "\n")


def write_transition_report(stream: io.TextIOBase, summaries, axis_names) -> None:
    """Per-transition table: boundary velocities, displacement and timing."""
    stream.write("waypoint,axis,v_in,v_out,displacement,t_opt,t_imp\n")
    for s in summaries:
        stream.write(",".join([
            str(s.waypoint), axis_names[s.axis], fmt(s.v_in), fmt(s.v_out),
            fmt(s.displacement), fmt(s.t_opt), fmt(s.t_imp)]) + "\n")
