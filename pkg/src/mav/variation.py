"""Idea mutation with experience-tuned direction biases.

Each agent carries two probabilities: how likely a mutation event is to
produce movement rather than rest (forward vs back mutation), and how likely
a mutating limb is to copy its counterpart's direction rather than oppose it.
Both drift in 0.1 steps as the agent adopts fitter actions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .ideas import (
    Allele,
    AlleleVector,
    BodyPart,
    COUNTERPART,
    LIMB_PAIRS,
)

BIAS_STEP = 0.1


@dataclass(frozen=True)
class OperatorState:
    """Per-agent mutation biases; back-mutation probability is 1 - p_fm."""

    p_fm: float = 0.5
    p_same: float = 0.5

    def __post_init__(self) -> None:
        if not (0.0 <= self.p_fm <= 1.0 and 0.0 <= self.p_same <= 1.0):
            raise ValueError("operator probabilities must lie in [0, 1]")


@dataclass(frozen=True)
class MutationParams:
    """Global per-locus mutation probability and the knowledge-operator switch."""

    rate: float = 0.17
    knowledge_ops: bool = True

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError("mutation rate must lie in [0, 1]")


def _clamp(p: float) -> float:
    return min(1.0, max(0.0, p))


def mutate(
    idea: AlleleVector,
    state: OperatorState,
    params: MutationParams,
    rng: random.Random,
) -> AlleleVector:
    """Mutate each locus independently against a snapshot of `idea`.

    On a mutation event the locus becomes a movement allele with probability
    p_fm, else stationary. A mutating limb whose counterpart (in the
    snapshot) is moving copies that direction with probability p_same and
    opposes it otherwise; all other loci pick up/down evenly. With the
    knowledge operators off, both biases act as fixed 0.5.
    """
    p_fm = state.p_fm if params.knowledge_ops else 0.5
    p_same = state.p_same if params.knowledge_ops else 0.5
    result = list(idea)
    for locus in BodyPart:
        if rng.random() >= params.rate:
            continue
        if rng.random() < p_fm:
            direction = rng.random()
            partner = COUNTERPART.get(locus)
            if partner is not None and idea[partner] is not Allele.STATIONARY:
                same = direction < p_same
                result[locus] = idea[partner] if same else _opposite(idea[partner])
            else:
                result[locus] = Allele.UP if direction < 0.5 else Allele.DOWN
        else:
            result[locus] = Allele.STATIONARY
    return tuple(result)


def _opposite(allele: Allele) -> Allele:
    return Allele.DOWN if allele is Allele.UP else Allele.UP


def update_movement_bias(
    state: OperatorState, a_m_old: float, a_m_new: float
) -> OperatorState:
    """Shift p_fm by 0.1 toward whichever movement level won out."""
    if a_m_new > a_m_old:
        return replace(state, p_fm=_clamp(state.p_fm + BIAS_STEP))
    if a_m_new < a_m_old:
        return replace(state, p_fm=_clamp(state.p_fm - BIAS_STEP))
    return state


def update_symmetry_bias(state: OperatorState, fitter: AlleleVector) -> OperatorState:
    """Shift p_same by 0.1 per limb pair of the adopted action, arms then legs.

    A pair moving in one shared direction raises p_same, an anti-symmetric
    pair lowers it, and a pair with a stationary member leaves it alone.
    """
    p_same = state.p_same
    for left, right in LIMB_PAIRS:
        a, b = fitter[left], fitter[right]
        if a is Allele.STATIONARY or b is Allele.STATIONARY:
            continue
        if a is b:
            p_same = _clamp(p_same + BIAS_STEP)
        else:
            p_same = _clamp(p_same - BIAS_STEP)
    return replace(state, p_same=p_same)
