"""Meme and Variations: a seed-reproducible model of cultural evolution.

A society of grid agents invents, imitates, and mentally simulates
six-body-part action ideas; the harness reruns the published experiments as
seeded sweeps with CSV output.
"""

from .fitness import FitnessParams, fitness, movement_score, optimal_set, symmetry_score
from .ideas import (
    Allele,
    AlleleVector,
    BodyPart,
    IdeaPattern,
    allele_value,
    enumerate_idea_space,
    quantize,
    quantize_idea,
)
from .society import ConfigError, MetricsRecord, Society, SocietyConfig, run
from .variation import MutationParams, OperatorState, mutate

__version__ = "0.1.0"

__all__ = [
    "Allele",
    "AlleleVector",
    "BodyPart",
    "ConfigError",
    "FitnessParams",
    "IdeaPattern",
    "MetricsRecord",
    "MutationParams",
    "OperatorState",
    "Society",
    "SocietyConfig",
    "allele_value",
    "enumerate_idea_space",
    "fitness",
    "movement_score",
    "mutate",
    "optimal_set",
    "quantize",
    "quantize_idea",
    "run",
    "symmetry_score",
    "__version__",
]
