"""Command-line frontend.

Subcommands: plan-ptp (straight pose-to-pose motion), plan-path (waypoint
trajectory with a per-transition report), track (online reference
tracking over stdin/stdout) and oracle (brute-force minimal time).
Exit codes: 0 success, 2 usage or input error, 3 infeasible plan.
"""
from __future__ import annotations

import argparse
import sys

from .errors import InfeasibleBoundary, InfeasibleDuration, SearchBudgetExceeded
from .fileio import (LimitSet, fmt, parse_vector, read_limits, read_waypoints,
                     write_trajectory_csv, write_transition_report)
from .multiaxis import plan_ptp_nd
from .oracle import brute_force_min_time
from .orientation import (Pose, Quaternion, Twist, omega_to_qdot,
                          plan_pose_axes)
from .profiles import KinematicState
from .tracker import PoseTracker
from .waypoints import plan_waypoint_path_detailed

_POSITION_NAMES = ["x", "y", "z"]
_POSE_NAMES = ["x", "y", "z", "qn", "qi", "qj", "qk"]


def _load_limits(path: str | None) -> LimitSet:
    if path is None:
        return LimitSet()
    return read_limits(path)


def _open_out(path: str):
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def _cmd_plan_ptp(args) -> int:
    limits = _load_limits(args.limits)
    start = parse_vector(getattr(args, "from"))
    goal = parse_vector(args.to)
    if len(start) != len(goal) or len(start) not in (3, 7):
        print("error: --from and --to must both have 3 or 7 coordinates",
              file=sys.stderr)
        return 2
    if len(start) == 3:
        profiles = plan_ptp_nd(start, goal, limits.linear)
        names = _POSITION_NAMES
        rest = list(start)
    else:
        pose0 = Pose(tuple(start[:3]), Quaternion.from_array(start[3:]))
        posef = Pose(tuple(goal[:3]), Quaternion.from_array(goal[3:]))
        profiles = plan_pose_axes(pose0, posef, limits.linear, limits.angular)
        names = _POSE_NAMES
        rest = list(start)
    out = _open_out(args.out)
    try:
        write_trajectory_csv(out, profiles, names, args.dt, rest_positions=rest)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _cmd_plan_path(args) -> int:
    limits = _load_limits(args.limits)
    points = read_waypoints(args.waypoints)
    if points.shape[0] < 3:
        print("error: at least three points are required", file=sys.stderr)
        return 2
    coords = points[:, :3]
    profiles, summaries = plan_waypoint_path_detailed(coords, limits.linear)
    out = _open_out(args.out)
    try:
        write_trajectory_csv(out, profiles, _POSITION_NAMES, args.dt,
                             rest_positions=list(coords[0]))
    finally:
        if out is not sys.stdout:
            out.close()
    if args.report is not None:
        rep = _open_out(args.report)
        try:
            write_transition_report(rep, summaries, _POSITION_NAMES)
        finally:
            if rep is not sys.stdout:
                rep.close()
    return 0


def _cmd_track(args) -> int:
    limits = _load_limits(args.limits)
    tracker = PoseTracker(limits.linear, limits.angular, dt=args.tick)
    refs: list[tuple[float, Twist]] = []
    for lineno, line in enumerate(sys.stdin, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 7:
            print(f"warning: line {lineno}: expected 7 fields, holding previous "
                  "reference", file=sys.stderr)
            continue
        try:
            t, vx, vy, vz, wx, wy, wz = (float(tok) for tok in toks)
        except ValueError:
            print(f"warning: line {lineno}: malformed number, holding previous "
                  "reference", file=sys.stderr)
            continue
        refs.append((t, Twist((vx, vy, vz), (wx, wy, wz))))
    if not refs:
        return 0
    rest = Twist((0.0, 0.0, 0.0), (0.0, 0.0, 0.0))
    current = rest
    idx = 0
    t_last = refs[-1][0]
    safety_end = t_last + 120.0
    while True:
        now = tracker.time
        while idx < len(refs) and refs[idx][0] <= now + 1e-12:
            current = refs[idx][1]
            idx += 1
        tracker.tick(current)
        pose = tracker.pose()
        twist = tracker.twist()
        row = ([fmt(tracker.time)] + [fmt(c) for c in pose.as_array()]
               + [fmt(c) for c in twist.v] + [fmt(c) for c in twist.w])
        print(" ".join(row))
        if idx >= len(refs) and tracker.time > t_last and _tracker_settled(tracker, current):
            return 0
        if tracker.time > safety_end:
            print("warning: tracker did not settle; stopping", file=sys.stderr)
            return 0


def _tracker_settled(tracker: PoseTracker, ref: Twist) -> bool:
    inner = tracker._inner
    qdot = omega_to_qdot(tracker.pose().orient, ref.w)
    targets = list(ref.v) + list(qdot)
    for state, lim, target in zip(inner.states, inner.limits, targets):
        target = max(-lim.vmax, min(lim.vmax, target))
        if abs(state.a) > 1e-9 or abs(state.v - target) > 1e-9:
            return False
    return True


def _cmd_oracle(args) -> int:
    limits = _load_limits(args.limits)
    init = parse_vector(args.init)
    final = parse_vector(args.final)
    if len(init) != 2 or len(final) != 2:
        print("error: --init and --final take 'a,v' pairs", file=sys.stderr)
        return 2
    t = brute_force_min_time(
        KinematicState(init[0], init[1], 0.0),
        KinematicState(final[0], final[1], args.displacement),
        limits.linear, args.dt)
    print(fmt(t))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="softmotion",
        description="Jerk/acceleration/velocity-bounded trajectory planning.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan-ptp", help="straight pose-to-pose motion")
    p.add_argument("--from", required=True, metavar="X,Y,Z[,QN,QI,QJ,QK]")
    p.add_argument("--to", required=True, metavar="X,Y,Z[,QN,QI,QJ,QK]")
    p.add_argument("--limits", default=None, metavar="FILE")
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--out", default="-", metavar="FILE")
    p.set_defaults(func=_cmd_plan_ptp)

    p = sub.add_parser("plan-path", help="waypoint trajectory with transitions")
    p.add_argument("--waypoints", required=True, metavar="FILE")
    p.add_argument("--limits", default=None, metavar="FILE")
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--out", default="-", metavar="FILE")
    p.add_argument("--report", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_plan_path)

    p = sub.add_parser("track", help="online tracking of a reference stream")
    p.add_argument("--limits", default=None, metavar="FILE")
    p.add_argument("--tick", type=float, default=0.01)
    p.set_defaults(func=_cmd_track)

    p = sub.add_parser("oracle", help="brute-force minimal time")
    p.add_argument("--init", required=True, metavar="A,V")
    p.add_argument("--final", required=True, metavar="A,V")
    p.add_argument("--displacement", type=float, required=True)
    p.add_argument("--limits", default=None, metavar="FILE")
    p.add_argument("--dt", type=float, default=0.002)
    p.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleBoundary, InfeasibleDuration) as exc:
        print(f"error: infeasible plan: {exc}", file=sys.stderr)
        return 3
    except SearchBudgetExceeded as exc:
        print(f"error: search budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
