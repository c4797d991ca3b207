"""Print the trace CSV of a fixed-seed scripted episode to stdout.

This is the headless reference the client parity test compares against:
the same seed and action sequence driven through the session server must
produce byte-identical CSV text.

Usage: headless_trace.py SEED DENSITY [ACTION,ACTION,...]

The listed actions are consumed one per decision window; after the list
runs out the policy holds IDLE until the episode ends.
"""

import sys

from rampmerge.bridge import parse_action, trace_csv_text
from rampmerge.harness import make_env
from rampmerge.pipeline import build_planner, rollout
from rampmerge.vehicles import DiscreteAction


def main() -> None:
    seed = int(sys.argv[1])
    density = sys.argv[2]
    names = sys.argv[3].split(",") if len(sys.argv) > 3 and sys.argv[3] else []
    queue = iter(int(parse_action(name)) for name in names)
    env = make_env(density)
    result = rollout(env, lambda vec: next(queue, int(DiscreteAction.IDLE)),
                     build_planner(env), seed=seed)
    sys.stdout.write(trace_csv_text(result.trace))


if __name__ == "__main__":
    main()
