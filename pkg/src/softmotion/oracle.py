"""Independent brute-force minimal-time verifier.

A layered breadth-first search over the jerk choices {-jmax, 0, +jmax}
applied for fixed dt steps.  Acceleration therefore lives on an exact
lattice; per (acceleration, velocity-bin) cell only the two states with
extreme positions are kept.  Because the reachable set of a linear system
at fixed time is convex, every position between the two retained exact
trajectories is continuously reachable, so the goal test checks whether
the segment between them meets the goal box.  The reported time is the
first k*dt at which that happens.

Tolerances scale with dt (half a jerk step on acceleration, and so on), so
the answer brackets the true optimum to within about two steps: the
planner under test must never exceed oracle + 2*dt, and the oracle never
trails the planner by more than rounding allows.

The module is deliberately independent of the planner: its only inputs
are the dynamics and the limits, and its own closed-form stop-and-cruise
bound seeds the search horizon.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import SearchBudgetExceeded
from .profiles import KinematicLimits, KinematicState

#: Active frontier rows allowed before the search gives up.
NODE_CAP = 5_000_000


def _connect_time(a: float, v: float, af: float, vf: float,
                  jm: float, am: float) -> float:
    """Min time of the bang-bang (a, v) -> (af, vf) connection, x free."""
    best = math.inf
    s_up = jm * (vf - v) + 0.5 * (a * a + af * af)
    if s_up >= 0.0:
        apk = math.sqrt(s_up)
        if apk >= a - 1e-12 and apk >= af - 1e-12:
            if apk <= am:
                best = min(best, (2.0 * apk - a - af) / jm)
            else:
                hold = ((vf - v) - (2 * am * am - a * a - af * af) / (2 * jm)) / am
                best = min(best, (2.0 * am - a - af) / jm + max(hold, 0.0))
    s_dn = -jm * (vf - v) + 0.5 * (a * a + af * af)
    if s_dn >= 0.0:
        avl = -math.sqrt(s_dn)
        if avl <= a + 1e-12 and avl <= af + 1e-12:
            if avl >= -am:
                best = min(best, (a + af - 2.0 * avl) / jm)
            else:
                hold = ((v - vf) - (2 * am * am - a * a - af * af) / (2 * jm)) / am
                best = min(best, (a + af + 2.0 * am) / jm + max(hold, 0.0))
    return 0.0 if best is math.inf else max(best, 0.0)


def _connect_time_vec(a, v, af, vf, jm, am):
    a2 = a * a
    af2 = af * af
    s_up = jm * (vf - v) + 0.5 * (a2 + af2)
    apk = np.sqrt(np.maximum(s_up, 0.0))
    up_ok = (s_up >= 0.0) & (apk >= a - 1e-12) & (apk >= af - 1e-12)
    hold_u = ((vf - v) - (2 * am * am - a2 - af2) / (2 * jm)) / am
    t_up = np.where(apk <= am, (2.0 * apk - a - af) / jm,
                    (2.0 * am - a - af) / jm + np.maximum(hold_u, 0.0))
    s_dn = -jm * (vf - v) + 0.5 * (a2 + af2)
    avl = -np.sqrt(np.maximum(s_dn, 0.0))
    dn_ok = (s_dn >= 0.0) & (avl <= a + 1e-12) & (avl <= af + 1e-12)
    hold_d = ((v - vf) - (2 * am * am - a2 - af2) / (2 * jm)) / am
    t_dn = np.where(avl >= -am, (a + af - 2.0 * avl) / jm,
                    (a + af + 2.0 * am) / jm + np.maximum(hold_d, 0.0))
    big = 1e30
    t = np.minimum(np.where(up_ok, t_up, big), np.where(dn_ok, t_dn, big))
    return np.where(t >= big, 0.0, np.maximum(t, 0.0))


def _stop_time_sweep(a: float, v: float, jm: float, am: float) -> tuple[float, float]:
    """Time and swept distance of the minimal braking motion to (0, 0)."""
    best: tuple[float, float] | None = None
    for sgn in (1.0, -1.0):   # jerk sign of the first arc
        s = -sgn * jm * v + 0.5 * a * a
        if s < -1e-15:
            continue
        ext = sgn * math.sqrt(max(s, 0.0))
        if sgn > 0 and ext < max(a, 0.0) - 1e-12:
            continue
        if sgn < 0 and ext > min(a, 0.0) + 1e-12:
            continue
        if abs(ext) <= am:
            steps = ((sgn * jm, (ext - a) / (sgn * jm)),
                     (-sgn * jm, ext / (sgn * jm)))
        else:
            ext_c = sgn * am
            hold = (-v - (2 * am * am - a * a) / (2 * sgn * jm)) / ext_c
            steps = ((sgn * jm, (ext_c - a) / (sgn * jm)), (0.0, hold),
                     (-sgn * jm, ext_c / (sgn * jm)))
        if any(d < -1e-9 for _, d in steps):
            continue
        aa, vv, xx = a, v, 0.0
        total = 0.0
        for jerk, dur in steps:
            dur = max(dur, 0.0)
            xx += vv * dur + 0.5 * aa * dur * dur + jerk * dur ** 3 / 6.0
            vv += aa * dur + 0.5 * jerk * dur * dur
            aa += jerk * dur
            total += dur
        if best is None or total < best[0]:
            best = (total, xx)
    if best is None:   # boundary states beyond the limits; crude but safe
        best = (2.0 * (am / jm + abs(v) / am), v * (am / jm + abs(v) / am))
    return best


def _segment_meets_box(v1, x1, v2, x2, vf, xf, tol_v, tol_x) -> bool:
    eps = 1e-300
    dv = v2 - v1
    dx = x2 - x1
    sv = np.where(np.abs(dv) < eps, eps, dv)
    sx = np.where(np.abs(dx) < eps, eps, dx)
    l1 = (vf - tol_v - v1) / sv
    l2 = (vf + tol_v - v1) / sv
    lov, hiv = np.minimum(l1, l2), np.maximum(l1, l2)
    flat = np.abs(dv) < eps
    okf = np.abs(v1 - vf) <= tol_v
    lov = np.where(flat, np.where(okf, 0.0, 1.0), lov)
    hiv = np.where(flat, np.where(okf, 1.0, 0.0), hiv)
    m1 = (xf - tol_x - x1) / sx
    m2 = (xf + tol_x - x1) / sx
    lox, hix = np.minimum(m1, m2), np.maximum(m1, m2)
    flat = np.abs(dx) < eps
    okf = np.abs(x1 - xf) <= tol_x
    lox = np.where(flat, np.where(okf, 0.0, 1.0), lox)
    hix = np.where(flat, np.where(okf, 1.0, 0.0), hix)
    lo = np.maximum(np.maximum(lov, lox), 0.0)
    hi = np.minimum(np.minimum(hiv, hix), 1.0)
    return bool((lo <= hi + 1e-15).any())


def _search(a0, v0, af, vf, D, dt, t_ub, limits, node_cap):
    jm, am, vm = limits.jmax, limits.amax, limits.vmax
    qa = jm * dt
    wv = 0.25 * am * dt
    tol_a = 0.5 * jm * dt + 1e-12
    tol_v = 0.5 * am * dt + 1e-12
    tol_x = 0.5 * vm * dt + 1e-12
    margin = vm * (vm / am + am / jm) / 2 + 0.15 * vm
    xlo_b, xhi_b = min(0.0, D) - margin, max(0.0, D) + margin
    k_max = int(math.ceil(t_ub / dt)) + 2

    m = np.zeros(2, dtype=np.int64)
    v = np.array([v0, v0])
    x = np.array([0.0, 0.0])
    d6 = jm * dt ** 3 / 6.0
    peak = 0
    for k in range(k_max):
        a = a0 + m * qa
        cand = (np.abs(a - af) <= tol_a) & (np.abs(v - vf) <= tol_v + 2 * wv)
        cpair = cand[0::2] | cand[1::2]
        if cpair.any():
            i = np.flatnonzero(cpair)
            if _segment_meets_box(v[2 * i], x[2 * i], v[2 * i + 1], x[2 * i + 1],
                                  vf, D, tol_v, tol_x):
                return k * dt, peak
        shift = v * dt + 0.5 * a * dt * dt
        m2 = np.concatenate([m - 1, m, m + 1])
        v2 = np.concatenate([v + a * dt - 0.5 * jm * dt * dt, v + a * dt,
                             v + a * dt + 0.5 * jm * dt * dt])
        x2 = np.concatenate([x + shift - d6, x + shift, x + shift + d6])
        a2 = a0 + m2 * qa
        keep = (np.abs(a2) <= am + 1e-12) & (np.abs(v2) <= vm + 1e-12) \
            & (x2 >= xlo_b) & (x2 <= xhi_b)
        m2, v2, x2, a2 = m2[keep], v2[keep], x2[keep], a2[keep]
        xgap = np.maximum(np.abs(D - x2) - tol_x, 0.0)
        lb = np.maximum(_connect_time_vec(a2, v2, af, vf, jm, am) - 2 * dt,
                        xgap / vm)
        keep = (k + 1) * dt + lb <= t_ub
        m2, v2, x2 = m2[keep], v2[keep], x2[keep]
        if len(m2) == 0:
            return None, peak
        vb = np.floor(v2 / wv).astype(np.int64)
        key = (m2 + (1 << 20)) * (1 << 27) + (vb + (1 << 26))
        order = np.lexsort((x2, key))
        ks = key[order]
        first = np.flatnonzero(np.r_[True, ks[1:] != ks[:-1]])
        last = np.r_[first[1:], len(ks)] - 1
        pick = order[np.stack([first, last], axis=1).ravel()]
        m, v, x = m2[pick], v2[pick], x2[pick]
        peak = max(peak, len(m))
        if len(m) > node_cap:
            raise SearchBudgetExceeded(
                f"oracle frontier {len(m)} exceeds the node cap {node_cap}")
    return None, peak


def brute_force_min_time(init: KinematicState, final: KinematicState,
                         limits: KinematicLimits, dt: float,
                         node_cap: int = NODE_CAP) -> float:
    """Smallest k*dt at which the quantized system reaches the goal box.

    The displacement is final.x - init.x.  A cheap coarse pass (larger
    step) first tightens the search horizon; the fine pass then prunes
    every state whose optimistic time to go overshoots it.  Desk-scale
    instances only; exceeding the node cap raises SearchBudgetExceeded,
    which is distinct from plain infeasibility.
    """
    if dt <= 0.0:
        raise ValueError("dt must be > 0")
    jm, am, vm = limits.jmax, limits.amax, limits.vmax
    a0, v0 = init.a, init.v
    af, vf = final.a, final.v
    D = final.x - init.x
    ts0, s0 = _stop_time_sweep(a0, v0, jm, am)
    tsf, sf = _stop_time_sweep(-af, vf, jm, am)
    t_ub0 = ts0 + tsf + abs(D - s0 - sf) / vm + 2.0 * (vm / am + am / jm)
    dt_c = max(dt, t_ub0 / 120.0)
    if dt_c > dt * 1.5:
        t_c, _ = _search(a0, v0, af, vf, D, dt_c, t_ub0 + 10 * dt_c, limits, node_cap)
        t_ub = (t_c + 10.0 * dt_c + 4.0 * dt) if t_c is not None else (t_ub0 + 10 * dt_c)
    else:
        t_ub = t_ub0 + 10 * dt
    t, _ = _search(a0, v0, af, vf, D, dt, t_ub, limits, node_cap)
    if t is None:
        t, _ = _search(a0, v0, af, vf, D, dt, 2.0 * t_ub + 0.5, limits, node_cap)
    if t is None:
        raise RuntimeError("oracle found no trajectory within its horizon")
    return t
