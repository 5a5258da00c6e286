"""Stretching a transition motion to an imposed duration.

A transition links two zero-acceleration states (v0 at x0, vf at xf).  Its
minimal time t_opt comes from the general planner; the stop-and-restart
time t_stop (halt at the intermediate point, then continue) is always
achievable and any duration beyond it is reachable by dwelling at the
stop.  Between t_opt and t_stop the only limit-respecting way to slow down
is a profile whose cruise runs at some |vc| below vmax, and for some
durations no such vc exists, so the feasible set is a union of intervals.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import InfeasibleDuration
from .planner import critical_length, plan_min_time_1d
from .planner import _connect_steps, _sweep, _total  # shared closed forms
from .profiles import (AxisProfile, KinematicLimits, KinematicState,
                       make_profile)

#: Imposed durations are matched to this absolute tolerance (seconds).
DURATION_TOL = 1e-6


@dataclass(frozen=True)
class TransitionProblem:
    """Boundary data of one axis transition plus its timing summary.

    Both boundary accelerations are zero.  ``displacement`` equals
    final.x - init.x and is kept explicit because it is the quantity the
    slowing search preserves.
    """

    init: KinematicState
    final: KinematicState
    displacement: float
    t_opt: float | None = None
    t_stop: float | None = None
    t_imp: float | None = None

    def __post_init__(self) -> None:
        if abs(self.init.a) > 1e-9 or abs(self.final.a) > 1e-9:
            raise ValueError("transition boundary accelerations must be zero")
        if abs((self.final.x - self.init.x) - self.displacement) > 1e-9:
            raise ValueError("displacement disagrees with boundary positions")


def transition_problem(v0: float, vf: float, displacement: float,
                       limits: KinematicLimits, x0: float = 0.0) -> TransitionProblem:
    """Build a TransitionProblem with t_opt and t_stop filled in."""
    init = KinematicState(0.0, v0, x0)
    final = KinematicState(0.0, vf, x0 + displacement)
    prob = TransitionProblem(init, final, displacement)
    t_opt = plan_min_time_1d(init, final, limits).duration
    t_stop, _ = stop_time(prob, limits)
    return replace(prob, t_opt=t_opt, t_stop=t_stop)


def stop_time(problem: TransitionProblem,
              limits: KinematicLimits) -> tuple[float, AxisProfile]:
    """Duration and profile of the halt-then-continue fallback.

    The axis brakes to a standstill along its natural stopping motion,
    then replans from the stop point to the final state.  If the problem
    carries an imposed time beyond the stop-and-restart duration, a dwell
    of the difference is inserted at the standstill.
    """
    init, final = problem.init, problem.final
    sweep_stop = critical_length(init, KinematicState(0.0, 0.0), limits)
    halt = KinematicState(0.0, 0.0, init.x + sweep_stop)
    part1 = plan_min_time_1d(init, halt, limits)
    part2 = plan_min_time_1d(halt, final, limits, t0=part1.duration)
    t_stop = part1.duration + part2.duration
    dwell = 0.0
    if problem.t_imp is not None and problem.t_imp > t_stop:
        dwell = problem.t_imp - t_stop
    steps = [(s.jerk, s.duration) for s in part1.segments]
    if dwell > 0.0:
        steps.append((0.0, dwell))
    steps += [(s.jerk, s.duration) for s in part2.segments]
    return t_stop, make_profile(steps, init)


def _slowing_pieces(problem: TransitionProblem, vc: float,
                    limits: KinematicLimits):
    """Duration and steps of the vc-cruise profile, or None when t_c < 0."""
    v0, vf = problem.init.v, problem.final.v
    ramp1 = _connect_steps(0.0, v0, 0.0, vc, limits)
    ramp2 = _connect_steps(0.0, vc, 0.0, vf, limits)
    s1 = _sweep(ramp1, 0.0, v0)[2]
    s2 = _sweep(ramp2, 0.0, vc)[2]
    t_c = (problem.displacement - s1 - s2) / vc
    if t_c < 0.0:
        return None
    steps = ramp1 + [(0.0, t_c)] + ramp2
    return _total(steps), steps


def _vc_grid(limits: KinematicLimits, v0: float, vf: float, n: int = 4096):
    """Sampling grid over admissible cruise velocities, both signs.

    Ramp shapes change where |vc - v| crosses the plateau threshold
    amax^2/jmax; those breakpoints are included so every grid cell sees a
    smooth duration map.
    """
    vm = limits.vmax
    eps = vm * 1e-9
    thr = limits.amax ** 2 / limits.jmax
    marks = set()
    for v in (v0, vf):
        for s in (-1.0, 1.0):
            w = v + s * thr
            if -vm < w < vm:
                marks.add(w)
        if -vm < v < vm:
            marks.add(v)
    grid: list[float] = []
    for lo, hi in ((-vm, -eps), (eps, vm)):
        pts = np.linspace(lo, hi, n)
        seg_marks = [m for m in marks if lo < m < hi]
        grid.extend(sorted(set(pts.tolist()) | set(seg_marks)))
    return [g for g in grid if abs(g) >= eps]


def _duration_runs(problem: TransitionProblem, limits: KinematicLimits,
                   n: int = 4096) -> list[list[tuple[float, float]]]:
    """Maximal runs of (vc, duration) samples with non-negative cruise time.

    Each run is a contiguous stretch of feasible cruise velocities of one
    sign; its edges (where the cruise time hits zero) are refined by
    bisection and included, so the duration map is sampled through to the
    run ends.
    """
    vm = limits.vmax
    eps = vm * 1e-9
    grid = _vc_grid(limits, problem.init.v, problem.final.v, n=n)
    sides = ([g for g in grid if g < 0.0], [g for g in grid if g > 0.0])
    runs: list[list[tuple[float, float]]] = []
    for side in sides:
        current: list[tuple[float, float]] = []
        prev_vc: float | None = None
        for vc in side:
            res = _slowing_pieces(problem, vc, limits)
            if res is not None:
                if not current and prev_vc is not None:
                    edge = _refine_vc_edge(problem, limits, vc, prev_vc)
                    if edge is not None and abs(edge[0] - vc) > eps:
                        current.append(edge)
                current.append((vc, res[0]))
            else:
                if current:
                    edge = _refine_vc_edge(problem, limits, current[-1][0], vc)
                    if edge is not None and abs(edge[0] - current[-1][0]) > eps:
                        current.append(edge)
                    runs.append(current)
                    current = []
            prev_vc = vc
        if current:
            runs.append(current)
    return runs


def _refine_vc_edge(problem: TransitionProblem, limits: KinematicLimits,
                    good: float, bad: float) -> tuple[float, float] | None:
    """(vc, duration) at the boundary of a feasible run, to ~1e-12 in vc."""
    res = _slowing_pieces(problem, good, limits)
    if res is None:
        return None
    for _ in range(60):
        mid = 0.5 * (good + bad)
        if mid == good or mid == bad:
            break
        r = _slowing_pieces(problem, mid, limits)
        if r is None:
            bad = mid
        else:
            good = mid
            res = r
    return good, res[0]


def plan_slowing_velocity(problem: TransitionProblem, t_imp: float,
                          limits: KinematicLimits) -> AxisProfile:
    """Transition stretched to t_imp by cruising below vmax.

    Searches the duration-vs-cruise-velocity map for a crossing of t_imp,
    then bisects the bracketing cell (the map is continuous and monotone
    between breakpoints).  Raises InfeasibleDuration when t_imp falls in a
    gap where no cruise velocity yields a valid profile.
    """
    if problem.t_opt is not None and t_imp < problem.t_opt - 1e-9:
        raise InfeasibleDuration(f"t_imp={t_imp} is below the minimal time")
    base = plan_min_time_1d(problem.init, problem.final, limits)
    if abs(base.duration - t_imp) <= 1e-9:
        return base

    best_vc: float | None = None
    for run in _duration_runs(problem, limits):
        for (vc0, T0), (vc1, T1) in zip(run[:-1], run[1:]):
            f0, f1 = T0 - t_imp, T1 - t_imp
            if f0 == 0.0:
                vc_star = vc0
            elif (f0 < 0.0) == (f1 < 0.0):
                continue
            else:
                lo, hi = vc0, vc1
                for _ in range(100):
                    mid = 0.5 * (lo + hi)
                    if mid == lo or mid == hi:
                        break
                    r = _slowing_pieces(problem, mid, limits)
                    if r is None:
                        hi = mid   # off the run edge; shrink toward the good side
                        continue
                    if ((r[0] - t_imp) < 0.0) == (f0 < 0.0):
                        lo = mid
                    else:
                        hi = mid
                vc_star = 0.5 * (lo + hi)
            r = _slowing_pieces(problem, vc_star, limits)
            if r is None or abs(r[0] - t_imp) > DURATION_TOL:
                continue
            if best_vc is None or abs(vc_star) > abs(best_vc):
                best_vc = vc_star
    if best_vc is None:
        raise InfeasibleDuration(
            f"no slowed profile of duration {t_imp}: the duration lies in a gap")
    _, steps = _slowing_pieces(problem, best_vc, limits)
    return make_profile(steps, problem.init)


def feasibility_intervals(problem: TransitionProblem, limits: KinematicLimits,
                          resolution: float = 1e-3) -> list[tuple[float, float]]:
    """Closed intervals of achievable durations within [t_opt, t_stop].

    The duration map vc -> T is continuous on each maximal vc-run where the
    cruise time stays non-negative, so each run contributes the interval
    [min T, max T]; run edges (where the cruise time hits zero) are refined
    by bisection.  t_opt is always feasible (the minimal-time profile) and
    everything from t_stop upward is feasible via stop-and-dwell.
    Gaps narrower than ``resolution`` may go undetected.
    """
    if resolution <= 0.0:
        raise ValueError("resolution must be > 0")
    t_opt = problem.t_opt
    t_stop = problem.t_stop
    if t_opt is None or t_stop is None:
        fresh = transition_problem(problem.init.v, problem.final.v,
                                   problem.displacement, limits, problem.init.x)
        t_opt, t_stop = fresh.t_opt, fresh.t_stop

    n = 2048
    if t_stop > t_opt:
        n = min(max(2048, int(8.0 * (t_stop - t_opt) / resolution)), 65536)
    intervals = [(t_opt, t_opt), (t_stop, t_stop)]
    for run in _duration_runs(problem, limits, n=n):
        ts = [T for _, T in run]
        lo, hi = max(min(ts), t_opt), min(max(ts), t_stop)
        if lo <= hi:
            intervals.append((lo, hi))
    intervals.sort()
    merged = [intervals[0]]
    for lo, hi in intervals[1:]:
        if lo <= merged[-1][1] + 1e-6:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def impose_common_time(problems: list[TransitionProblem],
                       limits) -> tuple[float, list[AxisProfile]]:
    """Common duration for all axes and the per-axis profiles realizing it.

    The imposed time is the smallest t at or above every axis's minimal
    time that is feasible for every axis; the intersection of the per-axis
    feasible sets attains its minimum at one of the interval edges.  The
    largest stop time is always a valid fallback.  ``limits`` is either a
    shared KinematicLimits or one per axis.
    """
    if not problems:
        raise ValueError("at least one axis problem is required")
    if isinstance(limits, KinematicLimits):
        limits = [limits] * len(problems)
    if len(limits) != len(problems):
        raise ValueError("one limits object per axis is required")

    probs = []
    for prob, lim in zip(problems, limits):
        if prob.t_opt is None or prob.t_stop is None:
            prob = transition_problem(prob.init.v, prob.final.v,
                                      prob.displacement, lim, prob.init.x)
        probs.append(prob)

    t_lo = max(p.t_opt for p in probs)
    axis_ivals = [feasibility_intervals(p, lim) for p, lim in zip(probs, limits)]

    def feasible(axis: int, t: float) -> bool:
        if t >= probs[axis].t_stop - 1e-9:
            return True
        return any(lo - 1e-9 <= t <= hi + 1e-9 for lo, hi in axis_ivals[axis])

    candidates = {t_lo}
    for ivals, p in zip(axis_ivals, probs):
        candidates.update(lo for lo, _ in ivals if lo >= t_lo - 1e-12)
        candidates.add(max(p.t_stop, t_lo))
    fallback = max(max(p.t_stop for p in probs), t_lo)
    candidates.add(fallback)

    # the interval data is numerically approximate, so a candidate only
    # counts once every axis profile actually materializes at it
    for t in sorted(candidates):
        if not all(feasible(ax, t) for ax in range(len(probs))):
            continue
        try:
            profiles = [plan_for_duration(prob, t, lim)
                        for prob, lim in zip(probs, limits)]
            return t, profiles
        except InfeasibleDuration:
            continue
    profiles = [plan_for_duration(prob, fallback, lim)
                for prob, lim in zip(probs, limits)]
    return fallback, profiles


def plan_for_duration(problem: TransitionProblem, t_imp: float,
                      limits: KinematicLimits) -> AxisProfile:
    """Profile of duration t_imp: minimal-time, slowed, or stop-and-dwell."""
    if problem.t_opt is not None and abs(t_imp - problem.t_opt) <= 1e-9:
        return plan_min_time_1d(problem.init, problem.final, limits)
    if problem.t_stop is not None and t_imp >= problem.t_stop - 1e-9:
        _, profile = stop_time(replace(problem, t_imp=t_imp), limits)
        return profile
    return plan_slowing_velocity(problem, t_imp, limits)
