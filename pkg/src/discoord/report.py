"""End-to-end pipeline (generate, then distribute) and its text renderings."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .config import ConvergenceConfig
from .distribution import FlowResult, run_distribution
from .generation import GenerationResult, run_generation
from .scenario import DemandRegime, Scenario, validate


@dataclass(frozen=True)
class RunReport:
    regime: DemandRegime
    delta_e: tuple[float, ...]
    flows: tuple[tuple[int, int, float], ...]  # (source, sink, magnitude > 0)
    achieved: tuple[float, ...]
    residuals: tuple[float, ...]
    total_flow: float
    rounds: tuple[int, int]  # (generation, distribution)
    converged: tuple[bool, bool]
    node_count: int

    @property
    def all_converged(self) -> bool:
        return all(self.converged)


@dataclass(frozen=True)
class Solution:
    scenario: Scenario
    regime: DemandRegime
    generation: GenerationResult
    distribution: FlowResult

    def report(self) -> RunReport:
        gen, dist = self.generation, self.distribution
        return RunReport(
            regime=self.regime,
            delta_e=tuple(map(float, gen.delta_e)),
            flows=tuple(dist.directed_flows()),
            achieved=tuple(map(float, dist.achieved)),
            residuals=tuple(map(float, dist.residuals)),
            total_flow=dist.total_flow,
            rounds=(gen.rounds_used, dist.rounds_used),
            converged=(gen.converged, dist.converged),
            node_count=self.scenario.node_count,
        )


def solve(s: Scenario, cfg: ConvergenceConfig | None = None) -> Solution:
    """Validate, compute generation, then feed it to the distribution phase.

    A generation phase that runs out of rounds still hands its (bounded)
    partial answer to distribution, so callers always get a full report.
    """
    cfg = cfg or ConvergenceConfig()
    regime = validate(s)
    gen = run_generation(s, cfg)
    dist = run_distribution(s, gen.delta_e, cfg)
    return Solution(s, regime, gen, dist)


def _fmt(x: float) -> str:
    text = f"{x:.4f}"
    return "0.0000" if text == "-0.0000" else text


def format_report(r: RunReport) -> str:
    lines = [f"regime: {r.regime.tag.value}"]
    lines.append(f"no_generation_needed: {'yes' if r.regime.no_generation_needed else 'no'}")
    lines.append(f"min_supply: {_fmt(r.regime.min_supply)}")
    lines.append(f"demand: {_fmt(r.regime.demand)}")
    lines.append(f"max_supply: {_fmt(r.regime.max_supply)}")
    lines.append("")
    lines.append("generated:")
    lines += [f"  P{i} {_fmt(v)}" for i, v in enumerate(r.delta_e, start=1)]
    lines.append("")
    lines.append("flows:")
    lines += [f"  P{src} -> P{dst} {_fmt(m)}" for src, dst, m in r.flows]
    lines.append("")
    lines.append("achieved:")
    lines += [f"  P{i} {_fmt(v)}" for i, v in enumerate(r.achieved, start=1)]
    lines.append("")
    lines.append("residuals:")
    lines += [f"  P{i} {_fmt(v)}" for i, v in enumerate(r.residuals, start=1)]
    lines.append("")
    lines.append(f"total_generated: {_fmt(sum(r.delta_e))}")
    lines.append(f"total_flow: {_fmt(r.total_flow)}")
    lines.append(f"rounds: generation={r.rounds[0]} distribution={r.rounds[1]}")
    lines.append(
        "converged: generation={} distribution={}".format(*("yes" if c else "no" for c in r.converged))
    )
    return "\n".join(lines) + "\n"


def emit_flow_dot(r: RunReport) -> str:
    out = ["digraph flows {", "  rankdir=LR;"]
    out += [f'  {i} [label="P{i}"];' for i in range(1, r.node_count + 1)]
    for src, dst, m in sorted(r.flows):
        out.append(f'  {src} -> {dst} [label="{_fmt(m)}"];')
    out.append("}")
    return "\n".join(out) + "\n"


TRACE_HEADER = ("phase", "round", "node", "edge", "z", "w", "g", "h")


def trace_csv(sol: Solution) -> str:
    """Both phases' sampled states as one CSV, unused columns left blank."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    for t, node, z, w in sol.generation.trace:
        writer.writerow(("generation", t, node, "", repr(z), repr(w), "", ""))
    for t, item, v in sol.distribution.trace:
        if "-" in item:
            writer.writerow(("distribution", t, "", item, "", "", "", repr(v)))
        else:
            writer.writerow(("distribution", t, item, "", "", "", repr(v), ""))
    return buf.getvalue()


def parse_report_numbers(text: str) -> dict:
    """Read the per-node sections and flows back out of :func:`format_report` output."""
    sections: dict = {}
    current = None
    for line in text.splitlines():
        if line.endswith(":") and not line.startswith(" "):
            current = line[:-1]
            sections[current] = []
        elif line.startswith("  ") and current is not None:
            parts = line.split()
            if current == "flows":
                sections[current].append((int(parts[0][1:]), int(parts[2][1:]), float(parts[3])))
            else:
                sections[current].append(float(parts[1]))
        elif ":" in line:
            key, _, value = line.partition(":")
            sections[key] = value.strip()
            current = None
    return {k: (np.array(v) if isinstance(v, list) and k != "flows" else v) for k, v in sections.items()}
