"""7-coordinate pose space: position plus unit quaternion.

Orientation is planned coordinate-wise: the four quaternion components are
treated as synchronized axes exactly like the three position components,
under angular limits mapped by the factor 1/2 (a unit quaternion driven at
angular speed w has component rates of magnitude |w|/2).  The planned
component polynomials drift off the unit sphere between the endpoints;
sampling renormalizes, and the drift is monitored rather than corrected
mid-profile.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .multiaxis import plan_ptp_nd_with_times, scale_limits_for_duration
from .profiles import (AxisProfile, CubicSegment, KinematicLimits,
                       KinematicState, evaluate, sample_times, scale_profile)
from .ptp import plan_ptp_1d


@dataclass(frozen=True)
class Quaternion:
    """Unit quaternion with scalar part n and vector part q = (i, j, k)."""

    n: float
    q: tuple[float, float, float]

    @staticmethod
    def identity() -> "Quaternion":
        return Quaternion(1.0, (0.0, 0.0, 0.0))

    @staticmethod
    def from_array(arr) -> "Quaternion":
        n, i, j, k = (float(c) for c in arr)
        return Quaternion(n, (i, j, k))

    @staticmethod
    def from_axis_angle(axis, angle: float) -> "Quaternion":
        ax = np.asarray(axis, dtype=float)
        ax = ax / np.linalg.norm(ax)
        half = 0.5 * angle
        s = math.sin(half)
        return Quaternion(math.cos(half), (ax[0] * s, ax[1] * s, ax[2] * s))

    def as_array(self) -> np.ndarray:
        return np.array([self.n, *self.q], dtype=float)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def normalized(self) -> "Quaternion":
        nrm = self.norm
        if nrm < 1e-12:
            raise ValueError("cannot normalize a near-zero quaternion")
        return Quaternion.from_array(self.as_array() / nrm)

    def dot(self, other: "Quaternion") -> float:
        return float(self.as_array() @ other.as_array())

    def multiply(self, other: "Quaternion") -> "Quaternion":
        n1, (i1, j1, k1) = self.n, self.q
        n2, (i2, j2, k2) = other.n, other.q
        return Quaternion(
            n1 * n2 - i1 * i2 - j1 * j2 - k1 * k2,
            (n1 * i2 + i1 * n2 + j1 * k2 - k1 * j2,
             n1 * j2 + j1 * n2 + k1 * i2 - i1 * k2,
             n1 * k2 + k1 * n2 + i1 * j2 - j1 * i2),
        )


@dataclass(frozen=True)
class Pose:
    """Position and orientation of the end effector."""

    p: tuple[float, float, float]
    orient: Quaternion

    def as_array(self) -> np.ndarray:
        return np.concatenate([np.asarray(self.p, dtype=float),
                               self.orient.as_array()])


@dataclass(frozen=True)
class Twist:
    """Linear and angular velocity of the end effector."""

    v: tuple[float, float, float]
    w: tuple[float, float, float]


def _check_unit(orient: Quaternion, tol: float = 1e-3) -> None:
    if abs(orient.norm - 1.0) > tol:
        raise ValueError(f"quaternion norm {orient.norm} deviates from 1 beyond {tol}")


def omega_to_qdot(orient: Quaternion, w) -> np.ndarray:
    """Quaternion rate of a unit orientation rotating at angular velocity w.

    Computed as half the quaternion product of the pure quaternion (0, w)
    with the current orientation; the result is orthogonal to the
    orientation, so the unit norm is preserved to first order.
    """
    _check_unit(orient)
    wx, wy, wz = (float(c) for c in w)
    pure = Quaternion(0.0, (wx, wy, wz))
    return 0.5 * pure.multiply(orient).as_array()


def qr_matrix(orient: Quaternion) -> np.ndarray:
    """The 4x4 rate-transform matrix of a quaternion, orthogonal at unit norm.

    Rows, acting on 4-vectors ordered (i, j, k, n):

        [  n   k  -j   i ]
        [ -k   n   i   j ]
        [  j  -i   n   k ]
        [ -i  -j  -k   n ]
    """
    n, (i, j, k) = orient.n, orient.q
    return np.array([
        [n, k, -j, i],
        [-k, n, i, j],
        [j, -i, n, k],
        [-i, -j, -k, n],
    ])


def qdot_to_omega(orient: Quaternion, qdot) -> tuple[np.ndarray, float]:
    """Angular velocity recovered from a quaternion rate.

    Applies [w; r] = 2 * Qr^T * qdot with qdot reordered vector-first.
    The fourth component r is the norm-growth residual, zero for rates
    produced by omega_to_qdot.  Exact inverse because Qr is orthogonal for
    unit quaternions.
    """
    _check_unit(orient)
    qd = np.asarray(qdot, dtype=float)
    vec_first = np.array([qd[1], qd[2], qd[3], qd[0]])
    out = 2.0 * qr_matrix(orient).T @ vec_first
    return out[:3], float(out[3])


def plan_pose_axes(pose0: Pose, posef: Pose, limits_linear: KinematicLimits,
                   limits_angular: KinematicLimits) -> list[AxisProfile]:
    """Synchronized 7-axis motion between two poses, all axes one duration.

    Positions run under the linear limits, quaternion components under the
    angular limits halved.  The slower of the two groups sets the common
    duration; the other group is stretched to it by replanning under
    time-dilated limits.  The target quaternion is flipped into the
    hemisphere of the start so the component path never crosses q.q0 < 0.
    """
    _check_unit(pose0.orient)
    _check_unit(posef.orient)
    q0 = pose0.orient.normalized().as_array()
    qf = posef.orient.normalized().as_array()
    if float(q0 @ qf) < 0.0:
        qf = -qf
    quat_limits = limits_angular.scaled(0.5)

    pos_profiles, pos_times = plan_ptp_nd_with_times(pose0.p, posef.p, limits_linear)
    quat_profiles, quat_times = plan_ptp_nd_with_times(q0, qf, quat_limits)
    t_pos, t_quat = pos_times.total, quat_times.total
    duration = max(t_pos, t_quat)
    if t_pos < duration and t_pos > 0.0:
        pos_profiles = _stretch_group(pose0.p, posef.p, limits_linear, t_pos, duration)
    if t_quat < duration and t_quat > 0.0:
        quat_profiles = _stretch_group(q0, qf, quat_limits, t_quat, duration)
    pos_profiles = [_as_hold(p, float(x), duration) for p, x in zip(pos_profiles, pose0.p)]
    quat_profiles = [_as_hold(p, float(c), duration) for p, c in zip(quat_profiles, q0)]
    return pos_profiles + quat_profiles


def _stretch_group(vec0, vecf, limits: KinematicLimits, t_opt: float,
                   duration: float) -> list[AxisProfile]:
    """Replan a straight-line group under dilated limits to a longer duration."""
    vec0 = np.asarray(vec0, dtype=float)
    vecf = np.asarray(vecf, dtype=float)
    delta = vecf - vec0
    length = float(np.linalg.norm(delta))
    unit = delta / length
    dominant = float(np.max(np.abs(unit)))
    scalar_limits = scale_limits_for_duration(limits.scaled(1.0 / dominant),
                                              t_opt, duration)
    scalar = plan_ptp_1d(length, scalar_limits)
    out = []
    for i, u in enumerate(unit):
        if abs(u) < 1e-15:
            out.append(AxisProfile())
        else:
            out.append(scale_profile(scalar, float(u), x_offset=float(vec0[i])))
    return out


def _as_hold(profile: AxisProfile, x: float, duration: float) -> AxisProfile:
    """Replace an empty profile with a hold at x so all axes share a span."""
    if profile.segments or duration <= 0.0:
        return profile
    hold = CubicSegment(duration=duration, jerk=0.0,
                        start=KinematicState(0.0, 0.0, x))
    return AxisProfile(segments=(hold,))


def pose_at(profiles: list[AxisProfile], t: float) -> Pose:
    """Sampled pose at time t; the quaternion is renormalized."""
    if len(profiles) != 7:
        raise ValueError("pose sampling needs 7 axis profiles")
    vals = []
    for p in profiles:
        if p.segments:
            state, _ = evaluate(p, min(max(t, p.t0), p.end_time))
            vals.append(state.x)
        else:
            raise ValueError("pose profiles must span the motion (use holds)")
    quat = Quaternion.from_array(vals[3:]).normalized()
    return Pose((vals[0], vals[1], vals[2]), quat)


def quaternion_norm_drift(profiles: list[AxisProfile], dt: float = 0.01) -> float:
    """Largest |norm - 1| of the raw planned quaternion over a sampling grid.

    This is the pre-renormalization drift of the planned component
    polynomials.  Component-wise plans between rest endpoints pass through
    the 4-space chord midpoint, so a rotation by an angle theta has an
    intrinsic drift floor of 1 - cos(theta/4) regardless of limits or
    timing (about 7.6e-2 for a quarter turn).
    """
    if len(profiles) != 7:
        raise ValueError("pose sampling needs 7 axis profiles")
    quat_profiles = profiles[3:]
    spans = [p for p in quat_profiles if p.segments]
    if not spans:
        return 0.0
    ref = max(spans, key=lambda p: p.duration)
    worst = 0.0
    for t in sample_times(ref, dt):
        comps = []
        for p in quat_profiles:
            state, _ = evaluate(p, min(max(t, p.t0), p.end_time))
            comps.append(state.x)
        worst = max(worst, abs(float(np.linalg.norm(comps)) - 1.0))
    return worst
