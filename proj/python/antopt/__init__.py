"""Archive-based continuous ant colony optimizer with selection and
distance-metric variants, plus swarm and differential-evolution baselines."""

from ._core import (
    ArgumentError,
    ConfigError,
    EvaluationError,
    IoError,
    RandomSource,
    aco_run,
    benchmark_functions,
    bhs,
    bounds,
    column_distance,
    de_run,
    evaluate,
    probabilities_from_fitness,
    probabilities_from_weights,
    pso_run,
    rank_weights,
    rmse,
    rws,
    sample_gaussian,
    sus,
)

__all__ = [
    "ArgumentError",
    "ConfigError",
    "EvaluationError",
    "IoError",
    "RandomSource",
    "aco_run",
    "benchmark_functions",
    "bhs",
    "bounds",
    "column_distance",
    "de_run",
    "evaluate",
    "probabilities_from_fitness",
    "probabilities_from_weights",
    "pso_run",
    "rank_weights",
    "rmse",
    "rws",
    "sample_gaussian",
    "sus",
]
