import itertools

import pytest
from hypothesis import given, strategies as st

from mav.fitness import (
    FitnessParams,
    fitness,
    fitness_table,
    head_term,
    movement_score,
    optimal_set,
    symmetry_score,
)
from mav.ideas import Allele, BodyPart, enumerate_idea_space, idea_from_alleles


def reference_fitness(values):
    """Independent scoring straight from raw locus values (test oracle)."""
    a_m = sum(abs(v) for i, v in enumerate(values) if i != 4) / 2.5

    def q(v):
        if v > 0.25:
            return 1
        if v < -0.25:
            return -1
        return 0

    pairs = ((values[0], values[1]), (values[2], values[3]))
    a_s = sum(1 for a, b in pairs if {q(a), q(b)} == {1, -1}) / 2
    i = 1 if q(values[4]) == 0 else 0
    return 2.5 * a_m + 5.0 * a_s + 2.5 * i


locus_values = st.floats(-0.5, 0.5, allow_nan=False)
ideas = st.tuples(*[locus_values] * 6)


@given(ideas)
def test_fitness_matches_reference(idea):
    assert fitness(idea) == pytest.approx(reference_fitness(idea), abs=1e-12)


def test_movement_score_examples():
    assert movement_score((0.0,) * 6) == 0.0
    assert movement_score((0.5, -0.5, 0.5, -0.5, 0.0, 0.5)) == 1.0
    assert movement_score((0.5, 0.0, 0.0, 0.0, 0.0, 0.0)) == pytest.approx(0.2)


def test_symmetry_score_examples():
    assert symmetry_score((0.5, -0.5, -0.5, 0.5, 0.0, 0.0)) == 1.0
    assert symmetry_score((0.5, 0.5, 0.5, -0.5, 0.0, 0.0)) == 0.5
    assert symmetry_score((0.0,) * 6) == 0.0


def test_head_term_examples():
    assert head_term((0.0,) * 6) == 1
    assert head_term((0.0, 0.0, 0.0, 0.0, 0.5, 0.0)) == 0
    assert head_term((0.0, 0.0, 0.0, 0.0, 0.1, 0.0)) == 1


def test_fitness_examples():
    assert fitness((0.0,) * 6) == 2.5
    assert fitness((0.5, -0.5, 0.5, -0.5, 0.0, 0.5)) == 10.0
    assert fitness((0.5,) * 6) == 2.5


def test_brute_force_extremes():
    table = {vec: reference_fitness(idea_from_alleles(vec)) for vec in enumerate_idea_space()}
    assert max(table.values()) == 10.0
    assert min(table.values()) == 0.0
    assert sum(1 for f in table.values() if f == 10.0) == 8
    # implementation agrees with the oracle everywhere
    assert fitness_table() == pytest.approx(table)


def test_optimal_set_properties():
    best = optimal_set()
    assert len(best) == 8
    assert all(vec[BodyPart.HEAD] is Allele.STATIONARY for vec in best)
    # tail-flip pairs: flipping tail direction maps the set onto itself
    flip = {Allele.UP: Allele.DOWN, Allele.DOWN: Allele.UP}
    for vec in best:
        flipped = vec[:5] + (flip[vec[5]],)
        assert flipped in best


def test_head_overdominance():
    """Among vectors differing only at the head, stationary strictly wins."""
    for rest in itertools.product(list(Allele), repeat=5):
        by_head = {
            head: fitness(idea_from_alleles(rest[:4] + (head,) + rest[4:]))
            for head in Allele
        }
        assert by_head[Allele.STATIONARY] > by_head[Allele.UP]
        assert by_head[Allele.STATIONARY] > by_head[Allele.DOWN]


def test_tail_underdominance():
    """Among vectors differing only at the tail, both extremes tie and win."""
    for rest in itertools.product(list(Allele), repeat=5):
        by_tail = {
            tail: fitness(idea_from_alleles(rest + (tail,)))
            for tail in Allele
        }
        assert by_tail[Allele.UP] == by_tail[Allele.DOWN]
        assert by_tail[Allele.UP] > by_tail[Allele.STATIONARY]


def test_epistasis_between_arm_loci():
    """The payoff of LeftArm=Up depends on RightArm's allele (gap 2*mu/2)."""
    def gain(right_arm):
        base = (Allele.STATIONARY, right_arm, Allele.STATIONARY,
                Allele.STATIONARY, Allele.STATIONARY, Allele.STATIONARY)
        up = (Allele.UP,) + base[1:]
        return fitness(idea_from_alleles(up)) - fitness(idea_from_alleles(base))

    assert gain(Allele.DOWN) - gain(Allele.UP) == pytest.approx(2.5)
    assert gain(Allele.DOWN) > gain(Allele.UP)


@given(ideas)
def test_arm_leg_swap_invariance(idea):
    swapped = (idea[2], idea[3], idea[0], idea[1], idea[4], idea[5])
    assert fitness(swapped) == pytest.approx(fitness(idea))


@given(ideas)
def test_fitness_bounds(idea):
    assert 0.0 <= fitness(idea) <= 10.0 + 1e-12


def test_mu_must_be_positive():
    with pytest.raises(ValueError):
        FitnessParams(mu=0.0)
