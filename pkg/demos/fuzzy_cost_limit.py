"""
Inferring a cost limit from risk preference and traffic density
===============================================================

The constraint threshold used during training is not hand-picked: it comes
out of a small Mamdani controller. Two crisp inputs (how aggressive the
user wants the ego to drive, how dense the mainline traffic is) pass
through the membership functions, a 3x3 rule table, and centroid
defuzzification, and the scalar that falls out becomes the cost limit.
"""

import numpy as np

from rampmerge.fuzzy import (
    DEFAULT_SYSTEM,
    defuzzify_centroid,
    evaluate_rules,
    fuzzify,
    infer_cost_limit,
)

# fuzzification: a density of 0.57 sits on the flank between "low" and
# "medium", a 45% risk preference between "conservative" and "neutral"
density = 0.57
risk = 45.0
mu_d = fuzzify(density, DEFAULT_SYSTEM.density)
mu_r = fuzzify(risk, DEFAULT_SYSTEM.risk)
print("density memberships:", {k: round(v, 3) for k, v in mu_d.items()})
print("risk memberships:   ", {k: round(v, 3) for k, v in mu_r.items()})

# each rule fires at the min of its two antecedents; rules sharing an
# output label are OR-ed together with max
act = evaluate_rules(mu_d, mu_r, DEFAULT_SYSTEM.rules)
print("rule activations:   ", {k: round(v, 3) for k, v in act.items()})

# the clipped output sets are merged pointwise and the centroid of the
# resulting shape is the crisp cost limit
eta = defuzzify_centroid(act, DEFAULT_SYSTEM.cost)
print("defuzzified eta:     %.6f" % eta)
print("one-call equivalent: %.6f" % infer_cost_limit(density, risk))

# corners of the rule table behave like the table says: a cautious user
# in dense traffic gets a tight limit, an aggressive one in light
# traffic gets a loose limit
for d, r, label in ((1.0, 0.0, "high density, conservative"),
                    (0.5, 100.0, "low density, aggressive"),
                    (0.75, 50.0, "medium density, neutral")):
    print("eta(%.2f, %5.1f%%) = %.4f   # %s"
          % (d, r, infer_cost_limit(d, r), label))

# the surface is smooth in between; sweep a line through the input space
for r in np.linspace(0, 100, 5):
    etas = [infer_cost_limit(d, r) for d in np.linspace(0.5, 1.0, 6)]
    print("risk %5.1f%%:" % r, " ".join("%.4f" % e for e in etas))
