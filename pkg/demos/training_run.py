"""
Training a constrained policy end to end
========================================

A short end-to-end run of the full stack: the discrete soft actor-critic
with a cost critic and a Lagrange multiplier, the MPC tracker turning
decisions into controls, and the shield screening each decision. A few
thousand steps are nowhere near convergence; the point is to watch the
moving parts interact and the logs accumulate.
"""

import tempfile
from pathlib import Path

import numpy as np

from rampmerge.fuzzy import infer_cost_limit
from rampmerge.harness import (
    RunConfig,
    build_trainer,
    make_env,
    read_metrics,
    rolling_mean,
    run_training,
)

out_dir = Path(tempfile.mkdtemp(prefix="merge_demo_"))

# the run is described by one config object; the cost limit is not set
# directly but inferred from the density label and risk preference
cfg = RunConfig(variant="sacd-lambda-tm", density="medium", risk_level=50.0,
                train_steps=3000)
print("variant %s, density %s, risk %.0f%%"
      % (cfg.variant, cfg.density, cfg.risk_level))
print("inferred cost limit eta = %.4f" % cfg.resolved_eta())
print("(same as calling infer_cost_limit: %.4f)"
      % infer_cost_limit(0.75, 50.0))

# train one seed; metrics stream to a CSV next to the checkpoint
art = run_training(cfg, seed=0, out_dir=out_dir, log_every=1000)
print("metrics at", art["metrics"])
print("checkpoint at", art["checkpoint"])

# the metrics file has one row per finished episode; read_metrics
# returns one array per column
data = read_metrics(art["metrics"])
returns = data["episode_return"]
costs = data["episode_cost"]
crashes = data["crash"]
print("%d episodes in %d steps" % (len(returns), cfg.train_steps))
for lo in range(0, len(returns) - 20, max(1, (len(returns) - 20) // 4)):
    print("  episodes %3d+: return %6.2f  cost %5.2f  crash rate %.2f"
          % (lo, np.mean(returns[lo:lo + 20]), np.mean(costs[lo:lo + 20]),
             np.mean(crashes[lo:lo + 20])))

# rolling means are what the acceptance plots use
smooth = rolling_mean(costs, window=50)
print("rolling(50) episode cost, first/last: %.3f / %.3f"
      % (smooth[0], smooth[-1]))

# the multiplier reacts to the constraint: it grows while episode cost
# exceeds eta and relaxes otherwise; the temperature decays as the
# policy sharpens
print("final lambda %.3f, final xi %.3f"
      % (data["lambda"][-1], data["xi"][-1]))

# the checkpoint restores bit-exact state for later evaluation
trainer = build_trainer(cfg, seed=0)
trainer.load(art["checkpoint"])
env = make_env(cfg.density)
obs = env.reset(7)
from rampmerge.pipeline import encode_observation
a = trainer.act(encode_observation(obs), greedy=True)
print("greedy action in the first state of episode 7:", a)
