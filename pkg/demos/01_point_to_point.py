"""Point-to-point motions, from one axis to a synchronized straight line.

Run:  python demos/01_point_to_point.py
"""
import numpy as np

from softmotion import (KinematicLimits, check_limits, evaluate, plan_ptp_1d,
                        plan_ptp_nd, ptp_saturation_threshold, ptp_times)

limits = KinematicLimits(jmax=0.9, amax=0.3, vmax=0.15)

# --- a single axis ---------------------------------------------------------
# Move 0.15 m from rest to rest.  The planner returns at most seven
# constant-jerk segments; this distance is long enough to reach both the
# acceleration plateau and the velocity cruise.
profile = plan_ptp_1d(0.15, limits)
tt = ptp_times(0.15, limits)
print("distance 0.15 m:  Tj=%.4f  Ta=%.4f  Tv=%.4f  total=%.4f s"
      % (tt.tj, tt.ta, tt.tv, profile.duration))
print(f"{'seg':>3} {'jerk':>7} {'duration':>9} {'end vel':>9} {'end pos':>9}")
for k, seg in enumerate(profile.segments):
    end = seg.end
    print(f"{k:>3} {seg.jerk:>7.2f} {seg.duration:>9.4f} {end.v:>9.4f} {end.x:>9.4f}")
print("limits respected:", check_limits(profile, limits).ok)

# Below the saturation threshold the cruise disappears; short moves never
# even reach the acceleration bound.
d_sat = ptp_saturation_threshold(limits)
print(f"\nsaturation threshold: {d_sat:.4f} m")
for d in (0.01, 0.0667, d_sat, 0.3):
    tt = ptp_times(d, limits)
    print(f"  d={d:7.4f} m -> Tj={tt.tj:.4f} Ta={tt.ta:.4f} Tv={tt.tv:.4f} "
          f"total={tt.total:.4f} s")

# --- three axes, one straight line -----------------------------------------
# All axes share the same progress profile, so the path is an exact line
# and every axis finishes at the same instant; the dominant axis runs at
# the full limits.
p0 = np.array([0.0, 0.0, 0.0])
pf = np.array([0.15, 0.075, -0.04])
profiles = plan_ptp_nd(p0, pf, limits)
T = profiles[0].duration
print(f"\nstraight-line move {p0} -> {pf}: duration {T:.4f} s")
print(f"{'t':>6} {'x':>8} {'y':>8} {'z':>8}")
for t in np.linspace(0.0, T, 7):
    pos = [evaluate(p, t)[0].x for p in profiles]
    print(f"{t:>6.2f} {pos[0]:>8.4f} {pos[1]:>8.4f} {pos[2]:>8.4f}")
frac = [(evaluate(p, T / 3)[0].x - a) / (b - a)
        for p, a, b in zip(profiles, p0, pf)]
print("normalized progress at T/3 per axis:", np.round(frac, 9))
