"""
Evaluating a policy and checking the replacement guarantee
==========================================================

After training, three questions matter: how often does the ego merge
safely, how does that hold up in traffic it was not trained on, and do
the shield's replacements actually point toward lower expected cost?
The last one is the defining property of the safety layer: whenever the
shield swaps an action, the cost critic should rate the substitute no
worse than the original.
"""

import tempfile
from pathlib import Path

from rampmerge.harness import (
    RunConfig,
    build_trainer,
    cross_density_matrix,
    evaluate,
    run_training,
    theorem1_check,
)

out_dir = Path(tempfile.mkdtemp(prefix="merge_eval_"))

# a short training run stands in for a real checkpoint (swap in a longer
# one for meaningful rates)
cfg = RunConfig(variant="sacd-lambda-tm", train_steps=2000)
art = run_training(cfg, seed=0, out_dir=out_dir)
trainer = build_trainer(cfg, seed=0)
trainer.load(art["checkpoint"])

# evaluation runs fresh episodes with the shield active and reports the
# fraction that reach the goal with a small accumulated cost
report = evaluate(trainer, density="medium", episodes=20, seed=424)
print("success rate    %.2f" % report.success_rate)
print("collision rate  %.2f" % report.collision_rate)
print("average cost    %.3f" % report.average_cost)
print("average time    %.1f s" % report.average_time_s)

# collecting the replacement events exposes what the shield overrode:
# (observation, raw action, substitute, situation, prediction)
report2 = evaluate(trainer, density="medium", episodes=20, seed=424,
                   collect_replacements=True)
events = report2.replacements
print("%d replacement events collected" % len(events))

# the cost critic should agree with the shield: across the collected
# events, Q_c(s, substitute) <= Q_c(s, raw) nearly always
if events:
    frac = theorem1_check(trainer, events)
    print("non-increasing-cost fraction: %.3f" % frac)

# generalization across traffic levels: the matrix evaluates one
# snapshot per training density under every density label (rows:
# trained-on, columns: evaluated-on); with a single snapshot standing
# in for all three, one row tells the story
densities = ("low", "medium", "high")
matrix = cross_density_matrix({d: trainer for d in densities}, densities,
                              episodes=10, seed=99)
print("success when evaluated on low/medium/high:",
      ["%.2f" % v for v in matrix[1]])
