"""Waypoint path following: straight legs joined by smooth transitions.

The trajectory through a polyline is assembled in three steps.  First each
pair of consecutive points gets a synchronized straight-line motion that
would stop at the far end.  Second, at every interior point the tail of
the incoming leg and the head of the outgoing leg are cut away at their
cruise boundaries (both are zero-acceleration states) and replaced by a
per-axis transition planned by the general planner, so the trajectory
rounds the corner without stopping.  Third, the per-axis transition
durations are unified to the smallest time feasible for every axis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .adjust import TransitionProblem, impose_common_time, transition_problem
from .multiaxis import plan_ptp_nd_with_times
from .profiles import (AxisProfile, KinematicLimits, KinematicState,
                       concat_profiles, evaluate, shift_profile, slice_profile)

_ZERO_ACC_TOL = 1e-9


@dataclass(frozen=True)
class TransitionSummary:
    """Per-axis numbers of one corner transition, for reporting."""

    waypoint: int
    axis: int
    v_in: float
    v_out: float
    displacement: float
    t_opt: float
    t_imp: float


def cruise_window(profiles: list[AxisProfile]) -> tuple[float, float]:
    """Common cruise time window [start, end] of a synchronized leg.

    For a leg with a constant-velocity piece this is that piece's span; a
    leg too short to cruise collapses the window to its peak-velocity
    instant.  Axes of a synchronized leg share the window, so the first
    moving axis decides.  An all-dwell leg yields the full span.
    """
    duration = max((p.duration for p in profiles if p.segments), default=0.0)
    for prof in profiles:
        if not prof.segments:
            continue
        span = abs(prof.final_state.x - prof.start_state.x)
        if span < 1e-15:
            continue
        ts = prof.boundaries()
        # cruise piece: zero jerk at zero acceleration with nonzero speed
        for k, seg in enumerate(prof.segments):
            if seg.jerk == 0.0 and abs(seg.start.a) <= _ZERO_ACC_TOL \
                    and abs(seg.start.v) > 1e-12:
                return ts[k], ts[k + 1]
        # no cruise: the peak-speed boundary where acceleration crosses zero
        best_t, best_v = ts[0], -1.0
        for k in range(1, len(ts) - 1):
            st = prof.segments[k].start
            if abs(st.a) <= _ZERO_ACC_TOL and abs(st.v) > best_v:
                best_t, best_v = ts[k], abs(st.v)
        return best_t, best_t
    return 0.0, duration


def transition_conditions(leg_in: list[AxisProfile], leg_out: list[AxisProfile],
                          limits: KinematicLimits) -> list[TransitionProblem]:
    """Per-axis transition problems joining two synchronized legs.

    Initial conditions are taken at the end of the incoming leg's cruise
    window, final conditions at the start of the outgoing leg's cruise
    window; both are zero-acceleration states with the legs' cruise
    velocities, and the displacement is the position gap between them.
    """
    if len(leg_in) != len(leg_out):
        raise ValueError("legs must have the same number of axes")
    _, t_ic = cruise_window(leg_in)
    t_fc, _ = cruise_window(leg_out)
    problems = []
    for ax in range(len(leg_in)):
        ic = _leg_state(leg_in[ax], t_ic)
        fc = _leg_state(leg_out[ax], t_fc)
        problems.append(transition_problem(ic.v, fc.v, fc.x - ic.x, limits,
                                           x0=ic.x))
    return problems


def _leg_state(profile: AxisProfile, t: float) -> KinematicState:
    if not profile.segments:
        raise ValueError("cannot anchor a transition on an empty profile")
    state, _ = evaluate(profile, min(max(t, profile.t0), profile.end_time))
    return state


def plan_waypoint_path(points, limits: KinematicLimits) -> list[AxisProfile]:
    """Per-axis trajectory through a polyline of at least three points."""
    profiles, _ = plan_waypoint_path_detailed(points, limits)
    return profiles


def plan_waypoint_path_detailed(points, limits: KinematicLimits,
                                ) -> tuple[list[AxisProfile], list[TransitionSummary]]:
    """plan_waypoint_path plus the per-transition report rows.

    The assembled trajectory is, per axis: head and cruise of the first
    leg, a transition at each interior waypoint, the cruise of each middle
    leg between its transitions, and the cruise and tail of the last leg.
    It starts and ends at rest and is continuous in position, velocity and
    acceleration across every seam.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 3:
        raise ValueError("at least three points are required")
    n_axes = pts.shape[1]

    legs = []
    windows = []
    for k in range(len(pts) - 1):
        prof, times = plan_ptp_nd_with_times(pts[k], pts[k + 1], limits)
        # dwell legs (coincident points) contribute nothing and collapse
        # their window to a single instant
        if not prof[0].segments and times.total == 0.0:
            prof = [AxisProfile() for _ in range(n_axes)]
            windows.append((0.0, 0.0))
        else:
            windows.append((times.cruise_start, times.cruise_end))
        legs.append(prof)

    transitions: list[list[AxisProfile]] = []
    summaries: list[TransitionSummary] = []
    for w in range(1, len(pts) - 1):
        leg_in, leg_out = legs[w - 1], legs[w]
        t_ic = windows[w - 1][1]
        t_fc = windows[w][0]
        problems = []
        for ax in range(n_axes):
            ic = _anchor_state(leg_in[ax], t_ic, rest_x=float(pts[w][ax]))
            fc = _anchor_state(leg_out[ax], t_fc, rest_x=float(pts[w][ax]))
            problems.append(transition_problem(ic.v, fc.v, fc.x - ic.x,
                                               limits, x0=ic.x))
        t_imp, tprofiles = impose_common_time(problems, limits)
        transitions.append(tprofiles)
        for ax, prob in enumerate(problems):
            summaries.append(TransitionSummary(
                waypoint=w, axis=ax, v_in=prob.init.v, v_out=prob.final.v,
                displacement=prob.displacement, t_opt=prob.t_opt, t_imp=t_imp))

    out = []
    for ax in range(n_axes):
        pieces = []
        first = legs[0][ax]
        if first.segments:
            pieces.append(slice_profile(first, 0.0, windows[0][1]))
        for w in range(1, len(pts) - 1):
            pieces.append(transitions[w - 1][ax])
            leg = legs[w][ax]
            lo = windows[w][0]
            hi = windows[w][1] if w < len(pts) - 2 else leg.duration if leg.segments else 0.0
            if leg.segments and hi > lo:
                pieces.append(slice_profile(leg, lo, hi))
        profile = concat_profiles([shift_profile(p, 0.0) for p in pieces if p.segments])
        out.append(profile)
    return out, summaries


def _anchor_state(profile: AxisProfile, t: float, rest_x: float) -> KinematicState:
    """Leg state at time t; an empty (dwell) leg anchors at rest at the waypoint."""
    if not profile.segments:
        return KinematicState(0.0, 0.0, rest_x)
    state, _ = evaluate(profile, min(max(t, profile.t0), profile.end_time))
    return state
