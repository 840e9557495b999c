"""Mutual-information feature selection lab.

Eight sequential forward selection criteria evaluated over
interchangeable backends: an analytic oracle with exact entropies and
mutual informations (including symbolic +inf and indeterminate forms),
and a histogram estimator over generated samples.
"""

from .estimation import Sample, estimated_provider
from .oracle import FeatureId, Scenario, ScenarioSpec, oracle_provider
from .selection import Method, MethodSpec, SelectionTrace, select_all
from .simlab import ExperimentConfig, run_experiment
from .xreal import XReal, finite, indeterminate

__all__ = [
    "ExperimentConfig",
    "FeatureId",
    "Method",
    "MethodSpec",
    "Sample",
    "Scenario",
    "ScenarioSpec",
    "SelectionTrace",
    "XReal",
    "estimated_provider",
    "finite",
    "indeterminate",
    "oracle_provider",
    "run_experiment",
    "select_all",
]
