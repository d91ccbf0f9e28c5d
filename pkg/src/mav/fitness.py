"""Action fitness: movement, limb anti-symmetry, and head-stability terms."""
from __future__ import annotations

from dataclasses import dataclass

from .ideas import (
    AlleleVector,
    Allele,
    BodyPart,
    IdeaPattern,
    LIMB_PAIRS,
    enumerate_idea_space,
    idea_from_alleles,
    quantize,
)

MOVING_PARTS = tuple(p for p in BodyPart if p is not BodyPart.HEAD)


@dataclass(frozen=True)
class FitnessParams:
    """Weight constant for the three fitness terms."""

    mu: float = 2.5

    def __post_init__(self) -> None:
        if self.mu <= 0:
            raise ValueError("mu must be positive")


DEFAULT_PARAMS = FitnessParams()


def movement_score(idea: IdeaPattern) -> float:
    """Total movement mass over the five non-head parts, normalized to [0, 1]."""
    return sum(abs(idea[p]) for p in MOVING_PARTS) / (len(MOVING_PARTS) * 0.5)


def symmetry_score(idea: IdeaPattern) -> float:
    """Fraction of limb pairs moving anti-symmetrically (one up, one down)."""
    hits = 0
    for left, right in LIMB_PAIRS:
        pair = {quantize(idea[left]), quantize(idea[right])}
        if pair == {Allele.UP, Allele.DOWN}:
            hits += 1
    return hits / len(LIMB_PAIRS)


def head_term(idea: IdeaPattern) -> int:
    """1 if the head is (quantized) stationary, else 0."""
    return 1 if quantize(idea[BodyPart.HEAD]) is Allele.STATIONARY else 0


def fitness(
    idea: IdeaPattern,
    params: FitnessParams = DEFAULT_PARAMS,
    backend: str = "analytic",
) -> float:
    """F = mu*a_m + 2*mu*a_s + mu*i.

    backend="network" reads the movement term off the concept layer of the
    agent memory network instead of the analytic movement mass; the symmetry
    and head terms are always analytic.
    """
    if backend == "analytic":
        a_m = movement_score(idea)
    elif backend == "network":
        from .network import concept_activations

        a_m = concept_activations(idea).movement
    else:
        raise ValueError(f"unknown fitness backend {backend!r}")
    a_s = symmetry_score(idea)
    i = head_term(idea)
    return params.mu * a_m + 2.0 * params.mu * a_s + params.mu * i


def fitness_table(params: FitnessParams = DEFAULT_PARAMS) -> dict[AlleleVector, float]:
    """Analytic fitness of every one of the 729 allele vectors."""
    return {
        vec: fitness(idea_from_alleles(vec), params)
        for vec in enumerate_idea_space()
    }


def optimal_set(params: FitnessParams = DEFAULT_PARAMS) -> set[AlleleVector]:
    """Argmax set of the fitness table (the eight optimal actions)."""
    table = fitness_table(params)
    best = max(table.values())
    return {vec for vec, f in table.items() if f == best}
