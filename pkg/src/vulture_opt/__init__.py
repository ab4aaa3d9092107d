"""Vulture-inspired metaheuristic optimization.

A population-based minimizer with three optional, independently toggleable
improvements (chaotic-elite initialization, periodic inertia damping, and a
mirrored-candidate competition), a catalogue of 23 classical test functions,
nonparametric comparison statistics, and a campaign harness with a CLI.
"""

from .benchmarks import (BenchmarkSpec, Problem, evaluate, external_problem,
                         problem, registry)
from .core import (EvaluationError, Population, RandomSource, SearchSpace,
                   Vulture, clamp, uniform, update_leaders)
from .engine import (VARIANT_FLAGS, RunRecord, VariantConfig, initialize, run,
                     step, variant_config)
from .harness import (Campaign, ComplexityResult, complexity_protocol,
                      compute_stats, emit_results, load_campaign,
                      read_results_csv, run_campaign)
from .kernel import (AvoaParams, HungerState, exploit_stage1_step,
                     exploit_stage2_step, explore_step, hunger_rate,
                     levy_flight, select_leader)
from .stats import (ResultTable, avg_std, friedman_avg_ranks,
                    significance_symbol, wilcoxon_ranksum_p)
from .strategies import (HenonParams, WeightParams, elite_merge, henon_init,
                         henon_sequence, inertia_weight, reverse_candidate,
                         rlc_select)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core
    "EvaluationError", "SearchSpace", "Vulture", "Population", "RandomSource",
    "clamp", "uniform", "update_leaders",
    # kernel
    "AvoaParams", "HungerState", "hunger_rate", "select_leader",
    "explore_step", "exploit_stage1_step", "exploit_stage2_step", "levy_flight",
    # strategies
    "HenonParams", "WeightParams", "henon_sequence", "henon_init",
    "elite_merge", "inertia_weight", "reverse_candidate", "rlc_select",
    # engine
    "VARIANT_FLAGS", "VariantConfig", "RunRecord", "variant_config",
    "initialize", "step", "run",
    # benchmarks
    "BenchmarkSpec", "Problem", "registry", "evaluate", "problem",
    "external_problem",
    # stats
    "ResultTable", "avg_std", "friedman_avg_ranks", "wilcoxon_ranksum_p",
    "significance_symbol",
    # harness
    "Campaign", "ComplexityResult", "load_campaign", "run_campaign",
    "compute_stats", "emit_results", "read_results_csv", "complexity_protocol",
]
