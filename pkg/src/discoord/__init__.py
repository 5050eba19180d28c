"""Distributed energy generation and distribution over neighbour-only consensus."""

from .config import ConvergenceConfig
from .distribution import (
    DistributionState,
    FlowResult,
    achieved_energies,
    distribution_step,
    init_distribution,
    residual_errors,
    run_distribution,
)
from .errors import *  # noqa: F401,F403
from .generation import GenerationResult, GenerationState, generation_step, init_generation, run_generation
from .graph import Graph, build_graph, generation_weight, is_connected, metropolis_weight, neighbors
from .report import RunReport, emit_flow_dot, format_report, solve
from .scenario import (
    DemandRegime,
    Regime,
    Scenario,
    classify,
    load_scenario,
    make_scenario,
    parse_scenario,
    serialize_scenario,
    validate,
)

__version__ = "0.1.0"
