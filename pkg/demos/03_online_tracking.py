"""Online velocity tracking: replanning toward the reference every tick.

Each 10 ms tick the axis replans from its current state to the reference
velocity over exactly the critical-length displacement, which joins the
reference without overshoot; a constant reference is reached in minimal
time and held exactly.

Run:  python demos/03_online_tracking.py
"""
from softmotion import KinematicLimits, OnlineTracker

limits = KinematicLimits(jmax=0.9, amax=0.3, vmax=0.15)
tracker = OnlineTracker(limits, n_axes=1, dt=0.01)

# a scripted reference: step up, hold, reverse, stop
schedule = [(0.0, 0.15), (1.5, -0.10), (3.0, 0.0)]
print(f"{'t':>5} {'ref':>6} {'vel':>9} {'acc':>9} {'pos':>9}")
state = None
for k in range(1, 451):
    t = k * tracker.dt
    ref = [v for t0, v in schedule if t0 <= t][-1]
    (state,) = tracker.tick([ref])
    if k % 25 == 0:
        print(f"{t:>5.2f} {ref:>6.2f} {state.v:>9.5f} {state.a:>9.5f} "
              f"{state.x:>9.5f}")

print("\nfinal state: v=%.2e a=%.2e (settled exactly)" % (state.v, state.a))
