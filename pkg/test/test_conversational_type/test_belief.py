import numpy as np
import pytest

from selfmonitor.conversational_type import (
    ConversationalType,
    ConvTypeBelief,
    Hypothesis,
    Transition,
    bayes_update,
    conformity_likelihood,
)
from selfmonitor.conversational_type.failures import InvalidBelief, StateCountMismatch


def graded_type(name: str, value: float) -> ConversationalType:
    return ConversationalType(
        name, ("s",), "s", frozenset({"s"}), conformity_overrides={"move": value}
    )


def test_bayes_update_example():
    belief = ConvTypeBelief.from_priors([graded_type("a", 0.8), graded_type("b", 0.0)], [0.98, 0.02])
    posterior = bayes_update(belief, "move", ["s", "s"])
    assert posterior.probabilities == pytest.approx((0.9888, 0.0112), abs=1e-4)
    assert posterior.conv_prob == posterior.probabilities[0]


def test_zero_prior_stays_zero():
    belief = ConvTypeBelief.from_priors([graded_type("a", -0.5), graded_type("b", 1.0)], [1.0, 0.0])
    assert bayes_update(belief, "move", ["s", "s"]).probabilities == (1.0, 0.0)


def test_identical_conformity_keeps_the_prior():
    belief = ConvTypeBelief.from_priors([graded_type("a", 0.3), graded_type("b", 0.3)], [0.7, 0.3])
    assert bayes_update(belief, "move", ["s", "s"]).probabilities == (0.7, 0.3)


def test_bakery_order_moves_mass_to_the_bakery_type(belief):
    posterior = bayes_update(belief, "order", belief.initial_states())
    assert posterior.conv_prob > belief.conv_prob
    assert posterior.most_probable_index == 0
    assert sum(posterior.probabilities) == pytest.approx(1.0, abs=1e-12)


def test_bayes_update_is_normalized_on_random_beliefs():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        count = int(rng.integers(1, 5))
        values = rng.uniform(-1.0, 1.0, size=count)
        prior = rng.dirichlet(np.ones(count))
        prior = prior / prior.sum()
        types = [graded_type(f"t{i}", float(v)) for i, v in enumerate(values)]
        belief = ConvTypeBelief.from_priors(types, prior)
        posterior = bayes_update(belief, "move", ["s"] * count)
        assert sum(posterior.probabilities) == pytest.approx(1.0, abs=1e-9)
        assert all(p >= 0.0 for p in posterior.probabilities)


def test_likelihood_is_clamped_and_monotone():
    assert conformity_likelihood(-1.0) == 0.01
    assert conformity_likelihood(1.0) == 1.0
    assert conformity_likelihood(0.0) == 0.5
    grid = np.linspace(-1.0, 1.0, 41)
    likelihoods = [conformity_likelihood(v) for v in grid]
    assert likelihoods == sorted(likelihoods)


def test_belief_is_validated(bakery):
    with pytest.raises(InvalidBelief):
        ConvTypeBelief(())
    with pytest.raises(InvalidBelief):
        ConvTypeBelief((Hypothesis(bakery, 0.5),))
    with pytest.raises(InvalidBelief):
        ConvTypeBelief((Hypothesis(bakery, 1.0),), active_index=1)
    with pytest.raises(StateCountMismatch):
        bayes_update(ConvTypeBelief.certain(bakery), "order", ["init", "init"])


def test_certain_belief(bakery):
    belief = ConvTypeBelief.certain(bakery)
    assert belief.conv_prob == 1.0
    assert belief.active is bakery
    assert belief.initial_states() == ("init",)
