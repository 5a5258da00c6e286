"""Online velocity-reference tracking with fixed-tick replanning.

Each tick the tracker replans every axis from its current state to the
reference velocity at zero acceleration, over exactly the critical-length
displacement, the displacement swept by the direct phase-plane
connection.  That displacement makes the plan join the reference without
overshoot; any other value would force the axis to wander and oscillate
around the target velocity.  Replanning from a mid-ramp state reproduces
the remainder of the previous ramp, so a constant reference is reached in
minimal time and then held exactly.
"""
from __future__ import annotations

import numpy as np

from .orientation import (Pose, Quaternion, Twist, omega_to_qdot,
                          qdot_to_omega)
from .planner import critical_length, plan_min_time_1d
from .profiles import AxisProfile, KinematicLimits, KinematicState, evaluate


class OnlineTracker:
    """Fixed-tick tracker for a bank of independent axes.

    One caller advances the tracker; distinct instances are independent.
    References are sampled once per tick (zero-order hold between ticks)
    and clamped to the velocity limit.  State traces are deterministic:
    identical reference traces give bit-identical states.
    """

    def __init__(self, limits, n_axes: int | None = None,
                 states=None, dt: float = 0.01) -> None:
        if dt <= 0.0:
            raise ValueError("tick period must be > 0")
        if isinstance(limits, KinematicLimits):
            if n_axes is None:
                n_axes = 1 if states is None else len(states)
            limits = [limits] * n_axes
        self.limits: list[KinematicLimits] = list(limits)
        n = len(self.limits)
        if states is None:
            states = [KinematicState() for _ in range(n)]
        if len(states) != n:
            raise ValueError("one initial state per axis is required")
        self.states: list[KinematicState] = list(states)
        self.dt = dt
        self.time = 0.0
        self.profiles: list[AxisProfile | None] = [None] * n

    def tick(self, v_ref) -> list[KinematicState]:
        """Advance all axes by one tick toward the reference velocities."""
        refs = [float(r) for r in v_ref]
        if len(refs) != len(self.states):
            raise ValueError("one reference per axis is required")
        new_states = []
        for ax, (state, lim, ref) in enumerate(zip(self.states, self.limits, refs)):
            ref = max(-lim.vmax, min(lim.vmax, ref))
            new_states.append(self._tick_axis(ax, state, lim, ref))
        self.states = new_states
        self.time += self.dt
        return list(self.states)

    def _tick_axis(self, ax: int, state: KinematicState, lim: KinematicLimits,
                   ref: float) -> KinematicState:
        if state.a == 0.0 and state.v == ref:
            self.profiles[ax] = None
            return KinematicState(0.0, ref, state.x + ref * self.dt)
        target_x = state.x + critical_length(state, KinematicState(0.0, ref), lim)
        profile = plan_min_time_1d(state, KinematicState(0.0, ref, target_x), lim)
        self.profiles[ax] = profile
        total = profile.duration
        if total <= self.dt:
            # land exactly on the reference, coast the rest of the tick
            end = profile.final_state if profile.segments else state
            return KinematicState(0.0, ref, end.x + ref * (self.dt - total))
        next_state, _ = evaluate(profile, profile.t0 + self.dt)
        return next_state


class PoseTracker:
    """Seven-axis pose tracker driven by end-effector twist references.

    Position axes track the linear velocity reference directly; the
    quaternion axes track the quaternion rate derived from the angular
    reference and the current orientation.  The orientation exposed to the
    caller is renormalized; the per-tick pre-normalization drift is
    recorded in ``norm_drift``.
    """

    def __init__(self, limits_linear: KinematicLimits,
                 limits_angular: KinematicLimits,
                 pose0: Pose | None = None, dt: float = 0.01) -> None:
        if pose0 is None:
            pose0 = Pose((0.0, 0.0, 0.0), Quaternion.identity())
        quat_limits = limits_angular.scaled(0.5)
        states = [KinematicState(0.0, 0.0, float(c)) for c in pose0.as_array()]
        self._inner = OnlineTracker([limits_linear] * 3 + [quat_limits] * 4,
                                    states=states, dt=dt)
        self.norm_drift = 0.0

    @property
    def time(self) -> float:
        return self._inner.time

    def pose(self) -> Pose:
        vals = [s.x for s in self._inner.states]
        return Pose((vals[0], vals[1], vals[2]),
                    Quaternion.from_array(vals[3:]).normalized())

    def twist(self) -> Twist:
        vals = [s.v for s in self._inner.states]
        w, _ = qdot_to_omega(self.pose().orient, np.array(vals[3:]))
        return Twist((vals[0], vals[1], vals[2]), tuple(float(c) for c in w))

    def tick(self, twist: Twist) -> Pose:
        raw = np.array([s.x for s in self._inner.states[3:]])
        self.norm_drift = max(self.norm_drift,
                              abs(float(np.linalg.norm(raw)) - 1.0))
        orient = Quaternion.from_array(raw).normalized()
        qdot = omega_to_qdot(orient, twist.w)
        refs = list(twist.v) + list(qdot)
        self._inner.tick(refs)
        return self.pose()
