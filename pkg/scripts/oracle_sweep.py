"""Compare the iterative solvers with the dense oracles on random networks."""

import argparse
import time
import warnings

import numpy as np

from discoord import ConvergenceConfig, solve
from discoord.errors import ZeroCapacityWarning
from discoord.oracle import distribution_fixed_point, generation_fixed_point
from discoord.random_scenarios import random_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--min-nodes", type=int, default=2)
    ap.add_argument("--max-nodes", type=int, default=8)
    ap.add_argument("--tol", type=float, default=1e-10)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    cfg = ConvergenceConfig(tolerance=args.tol)
    gen_err, flow_err, rounds = [], [], []
    warnings.simplefilter("ignore", ZeroCapacityWarning)
    t0 = time.perf_counter()
    for _ in range(args.count):
        s = random_scenario(rng, args.min_nodes, args.max_nodes)
        sol = solve(s, cfg)
        gen_err.append(np.max(np.abs(sol.generation.delta_e - generation_fixed_point(s))))
        ref = distribution_fixed_point(s, sol.generation.delta_e)
        flow_err.append(np.max(np.abs(sol.distribution.flows - ref), initial=0.0))
        rounds.append((sol.generation.rounds_used, sol.distribution.rounds_used))
    elapsed = time.perf_counter() - t0

    rounds = np.array(rounds)
    print(f"scenarios:          {args.count} ({args.min_nodes}-{args.max_nodes} nodes, seed {args.seed})")
    print(f"max |dE - oracle|:  {max(gen_err):.3e}")
    print(f"max |h - oracle|:   {max(flow_err):.3e}")
    print(f"rounds gen  median/max: {int(np.median(rounds[:, 0]))}/{rounds[:, 0].max()}")
    print(f"rounds dist median/max: {int(np.median(rounds[:, 1]))}/{rounds[:, 1].max()}")
    print(f"elapsed:            {elapsed:.2f} s")


if __name__ == "__main__":
    main()
