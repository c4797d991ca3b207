"""
Planning a lane change with the linearized bicycle model
========================================================

Discrete decisions (FASTER, SLOWER, LEFT, RIGHT, IDLE) are too coarse to
drive a vehicle directly. Each one is expanded into a reference
trajectory, and a finite-horizon tracker built on the linearized
kinematic bicycle solves a box-constrained QP for the accelerations and
steering angles that follow it. The first control of the horizon is
applied, the rest is thrown away.
"""

import numpy as np

from rampmerge.mpc import (
    BicycleParams,
    DiscreteAction,
    MpcPlanner,
    RoadGeometry,
    linearize,
    discretize,
    reference_speed,
)
from rampmerge.vehicles import VehicleState

geo = RoadGeometry()
planner = MpcPlanner(geo)

# the ego sits on the ramp centerline at highway speed
ego = VehicleState(x=90.0, y=geo.ramp_center, v=20.0, phi=0.0)
print("ego starts at (x=%.0f, y=%.0f) doing %.0f m/s" % (ego.x, ego.y, ego.v))

# each action maps to a different reference speed; LEFT and RIGHT keep
# the speed and move the lateral reference to the neighboring lane
for action in DiscreteAction:
    print("  %-6s -> reference speed %.1f m/s"
          % (action.name, reference_speed(ego.v, action)))

# plan the merge: the prediction is the closed-loop rollout of the
# bicycle under the QP controls, reported at each half-second stage
plan = planner.plan(ego, DiscreteAction.LEFT)
print("first control: accel %+.3f m/s^2, steer %+.4f rad"
      % (plan.control.accel, plan.control.steer))
print("QP stats: %d iterations, KKT residual %.2e"
      % (plan.stats.iterations, plan.stats.kkt_residual))
print("stage  x       y      v      phi")
for k, (x, y, v, phi) in enumerate(zip(plan.prediction.x, plan.prediction.y,
                                       plan.prediction.v,
                                       plan.prediction.phi), start=1):
    print("  %2d  %6.1f  %5.2f  %5.2f  %+7.4f" % (k, x, y, v, phi))

# the tracker is built from first principles: Jacobians of the bicycle
# dynamics at the reference, then forward-Euler discretization
A, B = linearize((20.0, 0.0, 0.0), BicycleParams())
A_d, B_d = discretize(A, B, 0.5)
print("continuous A:\n", np.round(A, 4))
print("discrete A (dt=0.5):\n", np.round(A_d, 4))

# a lane change completes within the horizon: the predicted lateral
# position settles on the mainline centerline, overshooting it by
# centimeters at most
y_path = plan.prediction.y
print("lateral overshoot below target: %.4f m"
      % max(0.0, float(geo.main_center - y_path.min())))
