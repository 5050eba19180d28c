"""Run the four shipped scenarios and compare against the reference figures."""

from pathlib import Path

import numpy as np

from discoord import load_scenario, solve

ROOT = Path(__file__).resolve().parent.parent / "scenarios"

# reference generation, listed flows (receiver, sender) -> value, total flow
REFERENCE = {
    1: (
        [3.5294, 10.5882, 10.5882, 10.5882, 14.1176, 10.5882],
        {(1, 2): 1.6298, (3, 2): 3.9584, (3, 5): 2.5768, (4, 3): 7.1234, (4, 5): 9.7001, (4, 6): 0.5882, (5, 1): 0.1593},
        25.7360,
    ),
    2: (
        [0] * 6,
        {(2, 1): 15.4146, (3, 2): 7.4146, (3, 5): 12.3902, (4, 3): 6.8049, (4, 5): 19.1951, (5, 1): 6.5854, (6, 4): 13.0},
        80.8049,
    ),
    3: (
        [5, 15, 15, 15, 20, 15],
        {(1, 2): 16.5854, (1, 5): 8.7480, (2, 3): 1.9187, (4, 3): 2.1382, (4, 6): 9.6667, (5, 3): 5.6098, (5, 4): 3.4715},
        48.1382,
    ),
    4: (
        [0] * 6,
        {(2, 1): 13.6585, (3, 2): 8.6585, (3, 5): 7.5610, (4, 3): 6.2195, (4, 5): 13.7805, (5, 1): 11.3415, (6, 4): 10.0},
        71.2195,
    ),
}


def main():
    print(f"{'case':<6}{'regime':<14}{'max |dE err|':>14}{'max |flow err|':>16}{'total flow':>12}{'residual':>10}{'rounds':>12}")
    for k, (delta, flows, total) in REFERENCE.items():
        s = load_scenario(ROOT / f"case{k}.json")
        sol = solve(s)
        dist = sol.distribution
        d_err = np.max(np.abs(sol.generation.delta_e - delta))
        f_err = max(abs(dist.flow(i, j) - v) for (i, j), v in flows.items())
        rounds = f"{sol.generation.rounds_used}/{dist.rounds_used}"
        print(
            f"case{k:<2}{sol.regime.tag.value:<14}{d_err:>14.2e}{f_err:>16.2e}"
            f"{dist.total_flow:>12.4f}{dist.residuals.mean():>10.4f}{rounds:>12}"
        )
        assert abs(dist.total_flow - total) < 1e-3


if __name__ == "__main__":
    main()
