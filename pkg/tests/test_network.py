import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mav.fitness import symmetry_score
from mav.ideas import enumerate_idea_space, idea_from_alleles, quantize_idea
from mav.network import (
    CONCEPT_WIRING,
    MOVEMENT,
    MUTUAL_WIRING,
    NetworkParams,
    concept_activations,
    hidden_delta,
    learn,
    new_network,
    output_delta,
    recall,
    target_pattern,
    unit_activation,
)

PARAMS = NetworkParams()


def test_unit_activation_pinned_points():
    # net = -theta zeroes the exponent
    assert unit_activation(-0.5) == pytest.approx(0.5, abs=1e-15)
    # direct evaluation with beta = 0.15, theta = 0.5
    expected = 1.0 / (1.0 + math.exp(-0.15 * 0.5))
    assert unit_activation(0.0) == pytest.approx(expected, abs=1e-15)
    assert unit_activation(0.0) == pytest.approx(0.51874, abs=1e-5)
    assert unit_activation(1e6) == pytest.approx(1.0, abs=1e-12)


@given(st.floats(-50, 50))
def test_unit_activation_monotone(net):
    assert unit_activation(net + 1e-3) > unit_activation(net)


def test_output_delta_examples():
    assert output_delta(0.7, 0.7) == 0.0
    assert output_delta(1.0, 0.5) == pytest.approx(0.125)
    assert output_delta(0.0, 1.0 - 1e-12) == pytest.approx(0.0, abs=1e-11)


def test_hidden_delta_examples():
    assert hidden_delta(0.3, [(0.0, 1.0), (0.0, -1.0)]) == 0.0
    assert hidden_delta(0.5, [(0.4, 1.0)]) == pytest.approx(0.1)
    assert hidden_delta(1.0, [(0.9, 1.0)]) == 0.0


def _logistic(x):
    return 1.0 / (1.0 + math.exp(-x))


@settings(max_examples=50)
@given(
    st.floats(0.05, 0.95),
    st.floats(0.05, 0.95),
)
def test_output_delta_matches_finite_differences(t, a):
    """delta = -dE/da * a(1-a) with E = (t-a)^2/2, dE/da by central diff."""
    h = 1e-6
    dE_da = (0.5 * (t - (a + h)) ** 2 - 0.5 * (t - (a - h)) ** 2) / (2 * h)
    assert output_delta(t, a) == pytest.approx(-dE_da * a * (1 - a), abs=1e-4)


@settings(max_examples=50)
@given(
    st.floats(0.05, 0.95),
    st.lists(
        st.tuples(st.floats(0.05, 0.95), st.floats(-2, 2), st.sampled_from([-1.0, 1.0])),
        min_size=1,
        max_size=6,
    ),
)
def test_hidden_delta_matches_finite_differences(a_h, downstream_spec):
    """Propagate a hidden activation through logistic outputs and compare
    the backpropagated error signal against a central difference."""
    targets = [t for t, _, _ in downstream_spec]
    biases = [c for _, c, _ in downstream_spec]
    weights = [w for _, _, w in downstream_spec]

    def loss(a):
        outs = [_logistic(c + w * a) for c, w in zip(biases, weights)]
        return 0.5 * sum((t - o) ** 2 for t, o in zip(targets, outs))

    h = 1e-6
    dL_da = (loss(a_h + h) - loss(a_h - h)) / (2 * h)
    outs = [_logistic(c + w * a_h) for c, w in zip(biases, weights)]
    downstream = [
        (output_delta(t, o), w) for t, o, w in zip(targets, outs, weights)
    ]
    assert hidden_delta(a_h, downstream) == pytest.approx(
        -a_h * (1 - a_h) * dL_da, abs=1e-4
    )


def test_fixed_wiring_values():
    nonzero = CONCEPT_WIRING[CONCEPT_WIRING != 0]
    assert set(np.unique(nonzero)) <= {-1.0, 1.0}
    assert set(np.unique(MUTUAL_WIRING[MUTUAL_WIRING != 0])) == {-1.0}
    # frozen arrays reject writes
    with pytest.raises(ValueError):
        CONCEPT_WIRING[0, 0] = 2.0


def test_zero_eta_leaves_weights_unchanged():
    rng = random.Random(5)
    params = NetworkParams(eta=0.0)
    state = new_network(rng, params)
    before = state.weights.copy()
    after = learn(state, target_pattern((0.5, -0.5, 0.0, 0.0, 0.5, 0.0)), params)
    np.testing.assert_array_equal(before, after.weights)


def test_learn_is_deterministic_and_keeps_fixed_weights():
    state = new_network(random.Random(11), PARAMS)
    wiring_before = state.io_hidden.copy()
    mutual_before = state.hidden_hidden.copy()
    target = target_pattern(idea_from_alleles(enumerate_idea_space()[500]))
    first = learn(state, target, PARAMS)
    second = learn(state, target, PARAMS)
    np.testing.assert_array_equal(first.weights, second.weights)
    np.testing.assert_array_equal(first.io_hidden, wiring_before)
    np.testing.assert_array_equal(first.hidden_hidden, mutual_before)


def test_error_decreases_over_training():
    rng = random.Random(23)
    for _ in range(5):
        idea = tuple(rng.uniform(-0.5, 0.5) for _ in range(6))
        state = learn(new_network(rng, PARAMS), target_pattern(idea), PARAMS)
        assert state.last_error <= state.first_error


def test_rest_pattern_round_trip():
    state = new_network(random.Random(1), PARAMS)
    trained = learn(state, target_pattern((0.0,) * 6), PARAMS)
    assert quantize_idea(recall(trained)) == quantize_idea((0.0,) * 6)


def test_sampled_pattern_round_trips():
    """Spot check; the full 729-pattern sweep runs in the acceptance suite."""
    rng = random.Random(77)
    space = enumerate_idea_space()
    for vec in rng.sample(space, 40):
        idea = idea_from_alleles(vec)
        trained = learn(new_network(rng, PARAMS), target_pattern(idea), PARAMS)
        assert quantize_idea(recall(trained)) == vec


def test_recall_clamps_readout():
    state = new_network(random.Random(2), PARAMS)
    state.activations[:6] = 1.0
    assert recall(state) == (0.5,) * 6


def test_target_pattern_affine_map():
    idea = (0.5, -0.5, 0.0, 0.25, -0.25, 0.1)
    t = target_pattern(idea)
    np.testing.assert_allclose(t, np.asarray(idea) + 0.5)
    np.testing.assert_allclose(t - 0.5, np.asarray(idea))


def test_concept_activations_rest_movement():
    acts = concept_activations((0.0,) * 6)
    assert acts.movement == pytest.approx(unit_activation(0.0), abs=1e-12)
    assert acts.movement == pytest.approx(0.51874, abs=1e-5)


@given(st.tuples(*[st.floats(-0.5, 0.5, allow_nan=False)] * 6))
def test_concept_movement_sign_flip_invariant(idea):
    flipped = tuple(-v for v in idea)
    assert concept_activations(idea).movement == pytest.approx(
        concept_activations(flipped).movement
    )


def test_concept_movement_monotone_in_magnitude():
    idea = [0.1, -0.2, 0.0, 0.3, 0.0, -0.1]
    base = concept_activations(tuple(idea)).movement
    idea[1] = -0.4
    assert concept_activations(tuple(idea)).movement > base


def test_concept_symmetry_slot_is_analytic():
    idea = (0.5, -0.5, 0.5, 0.5, 0.0, 0.0)
    assert concept_activations(idea).symmetry == symmetry_score(idea)


def test_params_validation():
    with pytest.raises(ValueError):
        NetworkParams(beta=0.0)
    with pytest.raises(ValueError):
        NetworkParams(epochs=0)
    with pytest.raises(ValueError):
        NetworkParams(eta=-0.1)
