"""Kinematic substrate: constant-jerk segments and piecewise-cubic axis profiles.

A trajectory for one axis is an ordered run of constant-jerk segments.
Position is piecewise cubic, velocity piecewise quadratic, acceleration
piecewise linear and jerk piecewise constant.  All evolution is closed
form; nothing in this module integrates numerically.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

#: Segments shorter than this are numerical noise from case boundaries
#: and are dropped during profile construction.
DROP_DURATION = 1e-12

#: Absolute tolerance for segment-to-segment continuity in a, v and x.
CHAIN_TOL = 1e-9


@dataclass(frozen=True)
class KinematicState:
    """Instantaneous (acceleration, velocity, position) of one axis."""

    a: float = 0.0
    v: float = 0.0
    x: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.v) and math.isfinite(self.x)):
            raise ValueError(f"non-finite kinematic state {(self.a, self.v, self.x)}")

    def advance(self, jerk: float, dt: float) -> "KinematicState":
        return integrate_segment(self, jerk, dt)


@dataclass(frozen=True)
class KinematicLimits:
    """Per-axis bounds on |jerk|, |acceleration| and |velocity|.

    Bounds are symmetric about zero: the admissible jerk set is
    {-jmax, 0, +jmax} for planned motions, acceleration stays in
    [-amax, amax] and velocity in [-vmax, vmax].
    """

    jmax: float
    amax: float
    vmax: float

    def __post_init__(self) -> None:
        for name, val in (("jmax", self.jmax), ("amax", self.amax), ("vmax", self.vmax)):
            if not (math.isfinite(val) and val > 0.0):
                raise ValueError(f"{name} must be finite and > 0, got {val}")

    def scaled(self, factor: float) -> "KinematicLimits":
        """Common multiplicative factor on all three bounds (amplitude scaling)."""
        return KinematicLimits(self.jmax * factor, self.amax * factor, self.vmax * factor)


@dataclass(frozen=True)
class CubicSegment:
    """One constant-jerk piece: start state, jerk value and duration."""

    duration: float
    jerk: float
    start: KinematicState

    def __post_init__(self) -> None:
        if not (math.isfinite(self.duration) and self.duration >= 0.0):
            raise ValueError(f"segment duration must be >= 0, got {self.duration}")
        if not math.isfinite(self.jerk):
            raise ValueError("segment jerk must be finite")

    def state_at(self, dt: float) -> KinematicState:
        """State dt seconds into the segment (0 <= dt <= duration)."""
        return integrate_segment(self.start, self.jerk, dt)

    @property
    def end(self) -> KinematicState:
        return integrate_segment(self.start, self.jerk, self.duration)


def integrate_segment(start: KinematicState, jerk: float, dt: float) -> KinematicState:
    """Advance a state by dt under constant jerk, using the exact cubic forms.

    a(dt) = a0 + j*dt
    v(dt) = v0 + a0*dt + j*dt^2/2
    x(dt) = x0 + v0*dt + a0*dt^2/2 + j*dt^3/6
    """
    if not (math.isfinite(jerk) and math.isfinite(dt)):
        raise ValueError("jerk and dt must be finite")
    if dt < 0.0:
        raise ValueError(f"dt must be >= 0, got {dt}")
    a0, v0, x0 = start.a, start.v, start.x
    return KinematicState(
        a=a0 + jerk * dt,
        v=v0 + (a0 + 0.5 * jerk * dt) * dt,
        x=x0 + (v0 + (0.5 * a0 + jerk * dt / 6.0) * dt) * dt,
    )


def phase_parabola(v_at_zero_accel: float, a: float, branch: str,
                   limits: KinematicLimits) -> float:
    """Velocity on a saturated-jerk parabola of the acceleration-velocity plane.

    Along a max-jerk evolution v(a) = v0 + a^2/(2*jmax); along a min-jerk
    evolution v(a) = v0 - a^2/(2*jmax), where v0 is the velocity at the
    a = 0 crossing.  ``branch`` selects "max" or "min".
    """
    if branch not in ("max", "min"):
        raise ValueError(f"branch must be 'max' or 'min', got {branch!r}")
    sign = 1.0 if branch == "max" else -1.0
    return v_at_zero_accel + sign * a * a / (2.0 * limits.jmax)


@dataclass(frozen=True)
class AxisProfile:
    """Ordered run of constant-jerk segments for one axis, starting at t0.

    Immutable after construction; safe to evaluate concurrently.  Segment
    boundary states chain continuously (the builder guarantees it, and
    ``validate_chaining`` can re-check within CHAIN_TOL).
    """

    t0: float = 0.0
    segments: tuple[CubicSegment, ...] = ()

    @property
    def duration(self) -> float:
        return sum(s.duration for s in self.segments)

    @property
    def end_time(self) -> float:
        return self.t0 + self.duration

    @property
    def start_state(self) -> KinematicState:
        if not self.segments:
            raise ValueError("empty profile has no states")
        return self.segments[0].start

    @property
    def final_state(self) -> KinematicState:
        if not self.segments:
            raise ValueError("empty profile has no states")
        return self.segments[-1].end

    def boundaries(self) -> list[float]:
        """Absolute times of all segment boundaries, first to last."""
        ts = [self.t0]
        for s in self.segments:
            ts.append(ts[-1] + s.duration)
        return ts

    def evaluate(self, t: float) -> tuple[KinematicState, float]:
        return evaluate(self, t)

    def validate_chaining(self, tol: float = CHAIN_TOL) -> None:
        for k in range(len(self.segments) - 1):
            e = self.segments[k].end
            s = self.segments[k + 1].start
            if max(abs(e.a - s.a), abs(e.v - s.v), abs(e.x - s.x)) > tol:
                raise ValueError(f"discontinuity between segments {k} and {k + 1}")


def evaluate(profile: AxisProfile, t: float) -> tuple[KinematicState, float]:
    """State and jerk at absolute time t0 <= t <= end_time.

    Boundary instants resolve to the later segment; the profile end returns
    the final boundary state with the last segment's jerk.
    """
    if not profile.segments:
        raise ValueError("cannot evaluate an empty profile")
    ts = profile.boundaries()
    if t < ts[0] - CHAIN_TOL or t > ts[-1] + CHAIN_TOL:
        raise ValueError(f"t={t} outside profile span [{ts[0]}, {ts[-1]}]")
    t = min(max(t, ts[0]), ts[-1])
    k = bisect_right(ts, t) - 1
    if k >= len(profile.segments):  # exactly at the end
        k = len(profile.segments) - 1
    seg = profile.segments[k]
    return seg.state_at(t - ts[k]), seg.jerk


def make_profile(steps, start: KinematicState,
                 t0: float = 0.0) -> AxisProfile:
    """Build a profile by integrating (jerk, duration) steps from a start state.

    Steps shorter than DROP_DURATION are dropped (their kinematic effect at
    that scale is below double-precision resolution for second-scale moves).
    """
    segs = []
    state = start
    for jerk, dur in steps:
        if dur < 0.0:
            if dur < -1e-9:
                raise ValueError(f"negative segment duration {dur}")
            dur = 0.0
        if dur < DROP_DURATION:
            continue
        segs.append(CubicSegment(duration=dur, jerk=jerk, start=state))
        state = segs[-1].end
    return AxisProfile(t0=t0, segments=tuple(segs))


def shift_profile(profile: AxisProfile, t0: float) -> AxisProfile:
    """Same motion re-anchored to start at absolute time t0."""
    return AxisProfile(t0=t0, segments=profile.segments)


def slice_profile(profile: AxisProfile, t_lo: float, t_hi: float) -> AxisProfile:
    """Sub-profile spanning [t_lo, t_hi] of an existing profile."""
    if t_hi < t_lo:
        raise ValueError("t_hi must be >= t_lo")
    state, _ = evaluate(profile, t_lo)
    ts = profile.boundaries()
    steps = []
    t = t_lo
    for k, seg in enumerate(profile.segments):
        seg_end = ts[k + 1]
        if seg_end <= t_lo + DROP_DURATION:
            continue
        upto = min(seg_end, t_hi)
        if upto > t:
            steps.append((seg.jerk, upto - t))
            t = upto
        if t >= t_hi - DROP_DURATION:
            break
    return make_profile(steps, state, t0=t_lo)


def concat_profiles(parts: list[AxisProfile]) -> AxisProfile:
    """Chain profiles end to start; each part must begin where the previous ends."""
    parts = [p for p in parts if p.segments]
    if not parts:
        return AxisProfile()
    segs = list(parts[0].segments)
    for p in parts[1:]:
        prev_end = segs[-1].end if segs else p.start_state
        nxt = p.start_state
        if max(abs(prev_end.a - nxt.a), abs(prev_end.v - nxt.v),
               abs(prev_end.x - nxt.x)) > 1e-7:
            raise ValueError("profiles do not chain continuously")
        segs.extend(p.segments)
    return AxisProfile(t0=parts[0].t0, segments=tuple(segs))


def dilate_profile(profile: AxisProfile, s: float) -> AxisProfile:
    """Uniform time dilation t -> t/s: durations scale by s, jerk by 1/s^3.

    The position trace is preserved (x(t) = x_orig(t/s)); velocities scale
    by 1/s and accelerations by 1/s^2.
    """
    if s <= 0.0:
        raise ValueError("dilation factor must be > 0")
    segs = []
    for seg in profile.segments:
        st = seg.start
        segs.append(CubicSegment(
            duration=seg.duration * s,
            jerk=seg.jerk / s ** 3,
            start=KinematicState(a=st.a / s ** 2, v=st.v / s, x=st.x),
        ))
    return AxisProfile(t0=profile.t0, segments=tuple(segs))


def scale_profile(profile: AxisProfile, r: float, x_offset: float = 0.0) -> AxisProfile:
    """Amplitude scaling: every kinematic quantity multiplied by r, same timing."""
    segs = []
    for seg in profile.segments:
        st = seg.start
        segs.append(CubicSegment(
            duration=seg.duration,
            jerk=seg.jerk * r,
            start=KinematicState(a=st.a * r, v=st.v * r, x=st.x * r + x_offset),
        ))
    return AxisProfile(t0=profile.t0, segments=tuple(segs))


def sample_times(profile: AxisProfile, dt: float) -> list[float]:
    """Sampling grid t0 + k*dt, always including the exact end time."""
    if dt <= 0.0:
        raise ValueError("dt must be > 0")
    ts = []
    end = profile.end_time if profile.segments else profile.t0
    k = 0
    while profile.t0 + k * dt < end - 1e-12:
        ts.append(profile.t0 + k * dt)
        k += 1
    ts.append(end)
    return ts


@dataclass(frozen=True)
class LimitViolation:
    """One spot where a profile exceeds a bound."""

    quantity: str        # "jerk" | "acceleration" | "velocity"
    segment: int
    time: float          # absolute time of the extremum
    value: float
    bound: float


@dataclass(frozen=True)
class LimitReport:
    violations: tuple[LimitViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def check_limits(profile: AxisProfile, limits: KinematicLimits,
                 tol: float = 1e-9) -> LimitReport:
    """Verify |jerk| <= jmax, |a| <= amax and |v| <= vmax over a whole profile.

    Extrema are located analytically per segment: acceleration is linear so
    its extrema sit at segment ends; velocity is quadratic with a stationary
    point where a = 0 inside the segment.  No sampling is involved.
    """
    out = []
    ts = profile.boundaries() if profile.segments else [profile.t0]
    for k, seg in enumerate(profile.segments):
        t_start = ts[k]
        if abs(seg.jerk) > limits.jmax + tol:
            out.append(LimitViolation("jerk", k, t_start, seg.jerk, limits.jmax))
        ends = [(0.0, seg.start), (seg.duration, seg.end)]
        worst = max(ends, key=lambda c: abs(c[1].a))
        if abs(worst[1].a) > limits.amax + tol:
            out.append(LimitViolation("acceleration", k, t_start + worst[0],
                                      worst[1].a, limits.amax))
        candidates = list(ends)
        if seg.jerk != 0.0:
            t_star = -seg.start.a / seg.jerk
            if 0.0 < t_star < seg.duration:
                candidates.append((t_star, seg.state_at(t_star)))
        worst = max(candidates, key=lambda c: abs(c[1].v))
        if abs(worst[1].v) > limits.vmax + tol:
            out.append(LimitViolation("velocity", k, t_start + worst[0],
                                      worst[1].v, limits.vmax))
    return LimitReport(tuple(out))
