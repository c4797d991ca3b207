"""
Screening actions against the three unsafe situations
=====================================================

Before an action reaches the vehicle it passes a rule-based shield. The
shield looks at the MPC prediction for the requested action and at
constant-velocity forecasts of the mainline cars, and replaces the action
when one of three situations shows up:

  1. a merge that would put the ego abreast of a mainline car at the
     same forecast stage (replaced by SLOWER),
  2. a right turn after the merge is already done (replaced by IDLE),
  3. holding or gaining speed while boxed in beside the car occupying
     the target lane (replaced by SLOWER).
"""

import numpy as np

from rampmerge.mpc import PredictedStates
from rampmerge.shield import ShieldConfig, shield
from rampmerge.vehicles import DiscreteAction, VehicleState

cfg = ShieldConfig()
print("thresholds: d_x=%.1f m, d_y=%.1f m, sigma=%d of N=%d stages"
      % (cfg.d_x, cfg.d_y, cfg.sigma, cfg.N))


def left_prediction(x0, v, y_from=5.0):
    # a stylized merge path: constant speed, lateral position easing
    # from the ramp to the mainline centerline over the first stages
    k = np.arange(1, cfg.N + 1)
    y = np.maximum(0.0, y_from - 1.7 * k)
    return PredictedStates(action=DiscreteAction.LEFT, sigma=cfg.sigma,
                           dt=cfg.dt, x=x0 + k * v * cfg.dt, y=y,
                           v=np.full(cfg.N, float(v)), phi=np.zeros(cfg.N))


ego = VehicleState(x=80.0, y=5.0, v=20.0, phi=0.0)
pred = left_prediction(ego.x, ego.v)

# situation 1: a car at the ego's flank moves with it, so the two stay
# abreast at every stage of the forecast; the merge is replaced
flank = VehicleState(x=77.0, y=0.0, v=20.0)
out = shield(DiscreteAction.LEFT, pred, [flank], False, cfg, ego)
print("merge beside a flanking car  -> %-6s (%s)"
      % (out.safe_action.name, out.situation.name))

# the same car one full gap back crosses the ego's path seconds later;
# matched in time there is no conflict and the merge goes through
trailing = VehicleState(x=50.0, y=0.0, v=20.0)
out = shield(DiscreteAction.LEFT, pred, [trailing], False, cfg, ego)
print("merge ahead of a trailing car -> %-6s (%s)"
      % (out.safe_action.name, out.situation.name))

# a faster car that closes the gap within the horizon is a conflict
# even though it is well behind right now
closing = VehicleState(x=55.0, y=0.0, v=28.0)
out = shield(DiscreteAction.LEFT, pred, [closing], False, cfg, ego)
print("merge into a closing car      -> %-6s (%s)"
      % (out.safe_action.name, out.situation.name))

# situation 2: RIGHT after the merge would leave the road
merged_ego = VehicleState(x=200.0, y=0.0, v=20.0, phi=0.0)
out = shield(DiscreteAction.RIGHT, pred, [], True, cfg, merged_ego)
print("right turn after merging      -> %-6s (%s)"
      % (out.safe_action.name, out.situation.name))

# situation 3: the lane beside the ego is occupied by a car pacing it;
# keeping speed (IDLE) or speeding up would stay boxed in forever, so
# the shield forces a drop back
occupier = VehicleState(x=83.0, y=0.0, v=20.5)
x_obj = occupier.x + cfg.sigma * occupier.v * cfg.dt
idle_pred = PredictedStates(action=DiscreteAction.IDLE, sigma=cfg.sigma,
                            dt=cfg.dt, x=np.full(cfg.N, x_obj - 4.0),
                            y=np.full(cfg.N, 5.0),
                            v=np.full(cfg.N, 20.0), phi=np.zeros(cfg.N))
out = shield(DiscreteAction.IDLE, idle_pred, [occupier], False, cfg, ego)
print("pacing the occupying car      -> %-6s (%s)"
      % (out.safe_action.name, out.situation.name))

# the shield is idempotent: its own substitute always passes unchanged,
# and it never injects a LEFT, so it cannot force a merge
out2 = shield(out.safe_action, idle_pred, [occupier], False, cfg, ego)
print("re-screening the substitute   -> %-6s (replaced=%s)"
      % (out2.safe_action.name, out2.replaced))
