"""Per-agent autoassociative memory.

Six input/output units (one per body part) with trainable weights between
them, plus six fixed-wired concept units: arms, legs, left, right, movement,
symmetry. Only the 6x6 input/output weight matrix is trained (generalized
delta rule); all concept wiring is frozen at +/-1.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .fitness import symmetry_score
from .ideas import IdeaPattern, N_LOCI

N_IO = N_LOCI
N_HIDDEN = 6

ARMS, LEGS, LEFT, RIGHT, MOVEMENT, SYMMETRY = range(N_HIDDEN)


def _frozen(rows: list[list[float]]) -> np.ndarray:
    arr = np.array(rows, dtype=float)
    arr.setflags(write=False)
    return arr


# Concept unit <-> input/output unit wiring (rows: concept units; columns:
# LA, RA, LL, RL, Head, Tail). +1 to positive instances of the concept, -1 to
# the opposing parts, 0 where unconnected. The movement unit connects to every
# part and receives absolute values (the least you can move is not at all).
# The symmetry unit's wiring is withheld from training; its activation is
# produced analytically (see concept_activations).
CONCEPT_WIRING = _frozen(
    [
        [1.0, 1.0, -1.0, -1.0, 0.0, 0.0],  # arms
        [-1.0, -1.0, 1.0, 1.0, 0.0, 0.0],  # legs
        [1.0, -1.0, 1.0, -1.0, 0.0, 0.0],  # left
        [-1.0, 1.0, -1.0, 1.0, 0.0, 0.0],  # right
        [1.0, 1.0, 1.0, 1.0, 1.0, 1.0],  # movement (abs inputs)
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],  # symmetry (analytic)
    ]
)

# Negative links between concept units representing opposite concepts.
MUTUAL_WIRING = _frozen(
    [
        [0.0, -1.0, 0.0, 0.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ]
)

INIT_WEIGHT_RANGE = 0.1


@dataclass(frozen=True)
class NetworkParams:
    """Sigmoid gain/bias, training passes, and learning rate."""

    beta: float = 0.15
    theta: float = 0.5
    epochs: int = 50
    eta: float = 10.0  # calibrated: smallest rate that round-trips all 729 ideas

    def __post_init__(self) -> None:
        if self.beta <= 0 or self.eta < 0 or self.epochs < 1:
            raise ValueError("beta must be positive, eta non-negative, epochs >= 1")


DEFAULT_PARAMS = NetworkParams()


class ConceptActivations(NamedTuple):
    arms: float
    legs: float
    left: float
    right: float
    movement: float
    symmetry: float


@dataclass
class NetworkState:
    """Trainable weights, frozen wiring, and the last propagated activations."""

    weights: np.ndarray  # (6, 6): weights[i, j] = line from io unit i to io unit j
    io_hidden: np.ndarray  # frozen +/-1 wiring, concept x io
    hidden_hidden: np.ndarray  # frozen negative links between opposing concepts
    activations: np.ndarray  # (12,): io outputs then concept units, last pass
    trained: bool = False
    first_error: float = float("nan")
    last_error: float = float("nan")


def unit_activation(net_input: float, params: NetworkParams = DEFAULT_PARAMS) -> float:
    """Sigmoid response 1 / (1 + exp(-beta * (net + theta)))."""
    return 1.0 / (1.0 + math.exp(-params.beta * (net_input + params.theta)))


def output_delta(t: float, a: float) -> float:
    """Error signal of an input/output unit: (t - a) * a * (1 - a)."""
    return (t - a) * a * (1.0 - a)


def hidden_delta(a: float, downstream: Iterable[tuple[float, float]]) -> float:
    """Error contribution of a concept unit: a * (1 - a) * sum(delta * weight)."""
    return a * (1.0 - a) * sum(d * w for d, w in downstream)


def target_pattern(idea: IdeaPattern) -> np.ndarray:
    """Map an idea onto unit space: t = locus value + 0.5, in [0, 1]."""
    return np.asarray(idea, dtype=float) + 0.5


def _sigmoid(net: np.ndarray, params: NetworkParams) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-params.beta * (net + params.theta)))


def _propagate(
    weights: np.ndarray, x: np.ndarray, params: NetworkParams
) -> tuple[np.ndarray, np.ndarray]:
    """Two-stage flow: concept units from clamped inputs, then io outputs."""
    hidden_net = CONCEPT_WIRING @ x
    hidden_net[MOVEMENT] = CONCEPT_WIRING[MOVEMENT] @ np.abs(x)
    hidden = _sigmoid(hidden_net, params)
    out_net = x @ weights + hidden @ CONCEPT_WIRING
    outputs = _sigmoid(out_net, params)
    return outputs, hidden


def new_network(rng: random.Random, params: NetworkParams = DEFAULT_PARAMS) -> NetworkState:
    """Fresh memory with small random trainable weights from the given stream."""
    weights = np.array(
        [
            [rng.uniform(-INIT_WEIGHT_RANGE, INIT_WEIGHT_RANGE) for _ in range(N_IO)]
            for _ in range(N_IO)
        ]
    )
    rest = np.zeros(N_IO)
    outputs, hidden = _propagate(weights, rest, params)
    return NetworkState(
        weights=weights,
        io_hidden=CONCEPT_WIRING,
        hidden_hidden=MUTUAL_WIRING,
        activations=np.concatenate([outputs, hidden]),
    )


def learn(
    state: NetworkState, target: np.ndarray, params: NetworkParams = DEFAULT_PARAMS
) -> NetworkState:
    """Train the identity map on `target` for `params.epochs` passes.

    Inputs are clamped to the zero-centered pattern (target - 0.5) so that
    every idea, including all-parts-down, drives the trainable weights; the
    output side is trained against `target` itself.
    """
    t = np.asarray(target, dtype=float)
    x = t - 0.5
    weights = state.weights.copy()
    first_error = float("nan")
    for epoch in range(params.epochs):
        outputs, _ = _propagate(weights, x, params)
        delta = (t - outputs) * outputs * (1.0 - outputs)
        if epoch == 0:
            first_error = float(np.sum((t - outputs) ** 2))
        weights += params.eta * np.outer(x, delta)
    outputs, hidden = _propagate(weights, x, params)
    return NetworkState(
        weights=weights,
        io_hidden=state.io_hidden,
        hidden_hidden=state.hidden_hidden,
        activations=np.concatenate([outputs, hidden]),
        trained=True,
        first_error=first_error,
        last_error=float(np.sum((t - outputs) ** 2)),
    )


def recall(state: NetworkState) -> IdeaPattern:
    """Read the stored idea back out of the output activations."""
    values = np.clip(state.activations[:N_IO] - 0.5, -0.5, 0.5)
    return tuple(float(v) for v in values)


def concept_activations(
    idea: IdeaPattern, params: NetworkParams = DEFAULT_PARAMS
) -> ConceptActivations:
    """Concept-unit readout of an idea through the fixed wiring.

    The opposing-concept links feed a second pass; the symmetry slot is the
    analytic anti-symmetry score.
    """
    x = np.asarray(idea, dtype=float)
    net = CONCEPT_WIRING @ x
    net[MOVEMENT] = CONCEPT_WIRING[MOVEMENT] @ np.abs(x)
    first = _sigmoid(net, params)
    second = _sigmoid(net + MUTUAL_WIRING @ first, params)
    return ConceptActivations(
        arms=float(second[ARMS]),
        legs=float(second[LEGS]),
        left=float(second[LEFT]),
        right=float(second[RIGHT]),
        movement=float(second[MOVEMENT]),
        symmetry=symmetry_score(idea),
    )
