import copy

import pytest

from selfmonitor.adapters.scenario_file import load_scenario
from selfmonitor.simulation import (
    Trace,
    TerminationReason,
    run,
    replay,
    selection_seed,
)
from selfmonitor.simulation.failures import ReplayMismatch, InvalidScenario, UnknownAgent
from selfmonitor.utils import InvalidSeed, first_index_of_max
from ..dataset.bakery import REGIME_1_RHO


@pytest.fixture
def scenario(bakery_config):
    return load_scenario(bakery_config)


@pytest.fixture
def sampling_scenario(bakery_config):
    config = copy.deepcopy(bakery_config)
    for agent in config.agents:
        agent.policy = "sample"
    return load_scenario(config)


def test_bakery_dialogue_reaches_payment(scenario):
    trace = run(scenario)
    assert trace.termination is TerminationReason.FINAL_STATE
    assert [event.agent for event in trace.events] == ["baker", "customer"]
    assert trace.events[0].selected == 0
    assert trace.events[0].move.text == "1.90"
    assert trace.events[1].move.label == "pay"
    assert trace.events[1].conv_state == "done"


def test_customer_updates_its_estimate_of_the_baker(scenario):
    trace = run(scenario)
    first = trace.events[0]
    assert first.space.probabilities[0] == max(first.space.probabilities)
    assert first.conv_state == "awaiting-payment"
    customer_view = trace.events[0].other_character.to_list()
    assert customer_view == pytest.approx([0.0, 0.15, -0.05, -0.2, 0.35], abs=1e-12)


def test_turn_limit(bakery_config):
    config = copy.deepcopy(bakery_config)
    config.max_turns = 1
    trace = run(load_scenario(config))
    assert len(trace) == 1
    assert trace.termination is TerminationReason.TURN_LIMIT


def test_missing_move_space_ends_the_dialogue(bakery_config):
    config = copy.deepcopy(bakery_config)
    config.agents[1].move_spaces = []
    trace = run(load_scenario(config))
    assert len(trace) == 1
    assert trace.termination is TerminationReason.EMPTY_MOVE_SPACE


def test_runs_are_byte_identical(sampling_scenario):
    assert run(sampling_scenario, seed=5).to_json_lines() == run(sampling_scenario, seed=5).to_json_lines()


def test_sampled_selections_depend_on_the_seed(sampling_scenario):
    traces = {tuple(run(sampling_scenario, seed=seed).selections) for seed in range(30)}
    assert len(traces) > 1


def test_trace_invariants(sampling_scenario, scenario):
    for seed in range(20):
        trace = run(sampling_scenario, seed=seed)
        assert len(trace) <= sampling_scenario.max_turns
        assert [event.turn for event in trace.events] == list(range(len(trace)))
        for event in trace.events:
            assert sum(event.space.probabilities) == pytest.approx(1.0, abs=1e-9)
    for event in run(scenario).events:
        assert event.selected == first_index_of_max(event.space.probabilities)


def test_replay_reproduces_the_trace(sampling_scenario):
    for seed in range(10):
        trace = run(sampling_scenario, seed=seed)
        replayed = replay(sampling_scenario, Trace.from_json_lines(trace.to_json_lines()))
        assert replayed == trace
        assert [e.conv_prob for e in replayed.events] == [e.conv_prob for e in trace.events]
        assert [e.other_character for e in replayed.events] == [e.other_character for e in trace.events]


def test_replay_detects_a_different_scenario(scenario, bakery_config):
    trace = run(scenario)
    config = copy.deepcopy(bakery_config)
    config.agents[0].update_rate = 0.9
    with pytest.raises(ReplayMismatch):
        replay(load_scenario(config), trace)


def test_trace_json_lines_round_trip(scenario):
    trace = run(scenario, seed=3)
    text = trace.to_json_lines()
    restored = Trace.from_json_lines(text)
    assert restored == trace
    assert restored.to_json_lines() == text


def test_transcript(scenario):
    transcript = run(scenario).transcript().splitlines()
    assert transcript[0] == "customer: 2 croissants [order]"
    assert transcript[1].startswith("baker: 1.90 [price-quote, p=")
    assert transcript[-1] == "(final-state after 2 turns)"


def test_selection_seeds_are_distinct_per_turn_and_agent():
    seeds = {selection_seed(1, agent, turn) for agent in (11, 23) for turn in range(20)}
    assert len(seeds) == 40
    assert selection_seed(1, 11, 0) == selection_seed(1, 11, 0)


def test_scenario_structure_is_checked(scenario):
    with pytest.raises(UnknownAgent):
        scenario.agent("miller")
    with pytest.raises(InvalidScenario):
        type(scenario)(
            name="solo",
            conversational_types=scenario.conversational_types,
            priors=scenario.priors,
            agents=scenario.agents[:1],
            opening=scenario.opening,
        )


def test_baker_scores_its_replies_at_the_prior_conv_prob(scenario):
    first = run(scenario).events[0]
    assert list(first.space.rhos) == pytest.approx(REGIME_1_RHO, abs=1e-3)
    assert [row.factors.conf_mass for row in first.space.rows] == pytest.approx(
        [0.8 * 0.98, -0.98, 0.3 * 0.98, 0.7 * 0.98], abs=1e-9
    )


def test_negative_seeds_are_rejected(sampling_scenario):
    with pytest.raises(InvalidSeed):
        run(sampling_scenario, seed=-1)
    with pytest.raises(InvalidSeed):
        selection_seed(0, -3, 0)
