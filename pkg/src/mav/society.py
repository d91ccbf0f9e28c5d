"""The agent society: toroidal grid, per-iteration protocol, metrics.

Every iteration each agent acquires an idea by creating (mutating its own)
or imitating (copying a fitter neighbor's action), updates its mutation
biases, and implements the result. All observations read the embodiments
from the start of the iteration and all embodiments commit together, so the
outcome is independent of agent processing order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import network as network_mod
from . import variation
from .fitness import FitnessParams, fitness as fitness_fn, fitness_table, movement_score
from .ideas import (
    AlleleVector,
    IdeaPattern,
    N_LOCI,
    REST_ALLELES,
    REST_IDEA,
    idea_from_alleles,
    quantize_idea,
)
from .seeding import derive_seed


class ConfigError(ValueError):
    """Invalid simulation or experiment configuration."""


# Moore neighborhood offsets (row, col), fixed scan order.
NEIGHBOR_OFFSETS = (
    (-1, 0),  # N
    (-1, 1),  # NE
    (0, 1),  # E
    (1, 1),  # SE
    (1, 0),  # S
    (1, -1),  # SW
    (0, -1),  # W
    (-1, -1),  # NW
)


def neighbors(position: tuple[int, int], dims: tuple[int, int]) -> list[tuple[int, int]]:
    """The eight surrounding cells with toroidal wraparound, in fixed order."""
    row, col = position
    rows, cols = dims
    return [((row + dr) % rows, (col + dc) % cols) for dr, dc in NEIGHBOR_OFFSETS]


@dataclass(frozen=True)
class SocietyConfig:
    rows: int = 10
    cols: int = 10
    p_create: float = 0.5
    mutation_rate: float = 0.17
    mental_simulation: bool = True
    imitation_enabled: bool = True
    knowledge_ops: bool = True
    iterations: int = 200
    seed: int = 0
    memory_backend: str = "direct"
    fitness_backend: str = "analytic"

    def validate(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ConfigError("grid must be at least 1x1")
        if not 0.0 <= self.p_create <= 1.0:
            raise ConfigError("p_create must lie in [0, 1]")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ConfigError("mutation_rate must lie in [0, 1]")
        if self.iterations < 0:
            raise ConfigError("iterations must be non-negative")
        if self.memory_backend not in ("direct", "network"):
            raise ConfigError(f"unknown memory backend {self.memory_backend!r}")
        if self.fitness_backend not in ("analytic", "network"):
            raise ConfigError(f"unknown fitness backend {self.fitness_backend!r}")


@dataclass
class PendingEvaluation:
    """Displaced action awaiting the deferred fitness comparison (no mental
    simulation): the new action must run for one iteration first."""

    previous_idea: IdeaPattern
    previous_fitness: float


@dataclass
class Agent:
    id: int
    position: tuple[int, int]
    rng: random.Random
    choice_rng: random.Random
    current_idea: IdeaPattern = REST_IDEA
    current_alleles: AlleleVector = REST_ALLELES
    embodiment: IdeaPattern = REST_IDEA
    embodiment_alleles: AlleleVector = REST_ALLELES
    operators: variation.OperatorState = field(default_factory=variation.OperatorState)
    memory: network_mod.NetworkState | None = None
    pending: PendingEvaluation | None = None


@dataclass(frozen=True)
class MetricsRecord:
    iteration: int
    mean_fitness: float
    max_fitness_current: float
    max_fitness_so_far: float
    diversity: int
    mean_locus_activation: tuple[float, ...]


class Society:
    """A running simulation; `tick` advances one iteration."""

    def __init__(self, config: SocietyConfig):
        config.validate()
        self.config = config
        self.iteration = 0
        self.fitness_params = FitnessParams()
        self.net_params = network_mod.NetworkParams()
        self.mutation_params = variation.MutationParams(
            rate=config.mutation_rate, knowledge_ops=config.knowledge_ops
        )
        # Under the direct memory backend ideas stay on the 729 canonical
        # points, so analytic fitness reduces to a table lookup.
        self._fitness_cache: dict[AlleleVector, float] | None = None
        if config.memory_backend == "direct" and config.fitness_backend == "analytic":
            self._fitness_cache = fitness_table(self.fitness_params)
        self.agents = [
            self._new_agent(i, (i // config.cols, i % config.cols))
            for i in range(config.rows * config.cols)
        ]
        self._neighbor_ids = [
            [
                pos[0] * config.cols + pos[1]
                for pos in neighbors(agent.position, (config.rows, config.cols))
            ]
            for agent in self.agents
        ]
        self.max_fitness_so_far = max(
            self._fitness_value(a.embodiment, a.embodiment_alleles)
            for a in self.agents
        )

    def _new_agent(self, agent_id: int, position: tuple[int, int]) -> Agent:
        agent = Agent(
            id=agent_id,
            position=position,
            rng=random.Random(derive_seed(self.config.seed, "agent", agent_id)),
            choice_rng=random.Random(derive_seed(self.config.seed, "choice", agent_id)),
        )
        if self.config.memory_backend == "network":
            agent.memory = network_mod.new_network(agent.rng, self.net_params)
            self._store(agent, REST_IDEA, REST_ALLELES)
            agent.embodiment = agent.current_idea
            agent.embodiment_alleles = agent.current_alleles
        return agent

    def _fitness_value(self, idea: IdeaPattern, alleles: AlleleVector) -> float:
        if self._fitness_cache is not None:
            return self._fitness_cache[alleles]
        return fitness_fn(
            idea, self.fitness_params, backend=self.config.fitness_backend
        )

    def _store(self, agent: Agent, idea: IdeaPattern, alleles: AlleleVector) -> None:
        """Commit an adopted idea to the agent's memory."""
        if agent.memory is not None:
            agent.memory = network_mod.learn(
                agent.memory, network_mod.target_pattern(idea), self.net_params
            )
            agent.current_idea = network_mod.recall(agent.memory)
            agent.current_alleles = quantize_idea(agent.current_idea)
        else:
            agent.current_idea = idea
            agent.current_alleles = alleles

    def _update_operators(
        self, agent: Agent, old: IdeaPattern, new: IdeaPattern, new_alleles: AlleleVector
    ) -> None:
        if not self.config.knowledge_ops:
            return
        agent.operators = variation.update_movement_bias(
            agent.operators,
            movement_score(old),
            movement_score(new),
        )
        agent.operators = variation.update_symmetry_bias(agent.operators, new_alleles)

    def _resolve_pending(self, agent: Agent) -> None:
        """Deferred selection: keep the implemented action only if it beat
        the action it displaced; biases update only on a confirmed win."""
        pending = agent.pending
        agent.pending = None
        realized = self._fitness_value(agent.current_idea, agent.current_alleles)
        if realized > pending.previous_fitness:
            self._update_operators(
                agent, pending.previous_idea, agent.current_idea, agent.current_alleles
            )
        else:
            self._store(agent, pending.previous_idea, quantize_idea(pending.previous_idea))
        agent.embodiment = agent.current_idea
        agent.embodiment_alleles = agent.current_alleles

    def _create(self, agent: Agent, own_fitness: float) -> None:
        candidate_alleles = variation.mutate(
            agent.current_alleles, agent.operators, self.mutation_params, agent.rng
        )
        candidate = idea_from_alleles(candidate_alleles)
        if self.config.mental_simulation:
            if self._fitness_value(candidate, candidate_alleles) > own_fitness:
                old = agent.current_idea
                self._store(agent, candidate, candidate_alleles)
                self._update_operators(agent, old, candidate, candidate_alleles)
        else:
            agent.pending = PendingEvaluation(agent.current_idea, own_fitness)
            self._store(agent, candidate, candidate_alleles)

    def _imitate(
        self,
        agent: Agent,
        own_fitness: float,
        snapshot: list[tuple[IdeaPattern, AlleleVector, float]],
    ) -> None:
        neighbor_ids = self._neighbor_ids[agent.id]
        if self.config.mental_simulation:
            order = list(neighbor_ids)
            agent.rng.shuffle(order)
            for other in order:
                idea, alleles, observed_fitness = snapshot[other]
                if observed_fitness > own_fitness:
                    old = agent.current_idea
                    self._store(agent, idea, alleles)
                    self._update_operators(agent, old, idea, alleles)
                    return
            # no fitter neighbor: the agent does nothing
        else:
            other = neighbor_ids[agent.rng.randrange(len(neighbor_ids))]
            idea, alleles, _ = snapshot[other]
            agent.pending = PendingEvaluation(agent.current_idea, own_fitness)
            self._store(agent, idea, alleles)

    def tick(self, order: list[int] | None = None) -> MetricsRecord:
        """Advance one iteration; `order` only permutes processing for tests."""
        config = self.config
        indices = order if order is not None else range(len(self.agents))
        if not config.mental_simulation:
            for i in indices:
                if self.agents[i].pending is not None:
                    self._resolve_pending(self.agents[i])
        snapshot = [
            (a.embodiment, a.embodiment_alleles,
             self._fitness_value(a.embodiment, a.embodiment_alleles))
            for a in self.agents
        ]
        for i in indices:
            agent = self.agents[i]
            if not config.imitation_enabled:
                create = True
            else:
                create = agent.choice_rng.random() < config.p_create
            if create:
                self._create(agent, snapshot[i][2])
            else:
                self._imitate(agent, snapshot[i][2], snapshot)
        for agent in self.agents:
            agent.embodiment = agent.current_idea
            agent.embodiment_alleles = agent.current_alleles
        self.iteration += 1
        return self.compute_metrics()

    def compute_metrics(self) -> MetricsRecord:
        values = [
            self._fitness_value(a.embodiment, a.embodiment_alleles)
            for a in self.agents
        ]
        best = max(values)
        self.max_fitness_so_far = max(self.max_fitness_so_far, best)
        actions = {
            a.embodiment_alleles
            for a in self.agents
            if any(a.embodiment_alleles)
        }
        n = len(self.agents)
        means = tuple(
            sum(a.embodiment[k] for a in self.agents) / n for k in range(N_LOCI)
        )
        return MetricsRecord(
            iteration=self.iteration,
            mean_fitness=sum(values) / n,
            max_fitness_current=best,
            max_fitness_so_far=self.max_fitness_so_far,
            diversity=len(actions),
            mean_locus_activation=means,
        )


def run(config: SocietyConfig) -> list[MetricsRecord]:
    """Simulate `config.iterations` ticks from the all-immobile start.

    Returns one record per iteration index 0..iterations, where record 0 is
    the initial society before any updates.
    """
    society = Society(config)
    records = [society.compute_metrics()]
    for _ in range(config.iterations):
        records.append(society.tick())
    return records
