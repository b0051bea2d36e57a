from __future__ import annotations

import logging

import numpy as np
from typing_extensions import Optional, Sequence

from .failures import SimulationError, ReplayMismatch
from .scenario import Scenario, AgentSpec
from .trace import Trace, TraceEvent, TerminationReason
from ..decision import SelfMonitor, SelectionPolicy, ScoredMoveSpace
from ..dialogue_state import (
    InformationState,
    integrate_move,
    record_own_move,
    goals_reached,
)
from ..utils import check_seed

logger = logging.getLogger(__name__)


def selection_seed(run_seed: int, agent_seed: int, turn: int) -> int:
    """
    :return: The seed of a sampled selection, derived from the run, the agent and the turn.
    """
    entropy = [check_seed(run_seed), check_seed(agent_seed), check_seed(turn)]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])


def _select(agent: AgentSpec, space: ScoredMoveSpace, run_seed: int, turn: int) -> int:
    monitor = SelfMonitor(agent.weights, agent.policy)
    if agent.policy is SelectionPolicy.SAMPLE:
        return monitor.select(space, selection_seed(run_seed, agent.seed, turn))
    return monitor.select(space)


def run(
    scenario: Scenario,
    seed: int = 0,
    forced_selections: Optional[Sequence[int]] = None,
) -> Trace:
    """
    Simulate a dialogue between the two agents of a scenario.

    After the scripted opening, the agents alternate: the speaker scores its move space for its current state,
    selects a move and records it, then the listener integrates the move. The dialogue ends when the listener's active
    conversational type reaches a termination, when the speaker has no moves for its state, or after max_turns turns.

    :param scenario: The scenario to simulate.
    :param seed: The run seed, combined with the agent seeds for sampled selections.
    :param forced_selections: Move indices to use instead of the agents' policies, one per turn.
    :return: The trace of the dialogue.
    """
    check_seed(seed)
    states = scenario.initial_states()
    opener = scenario.opening.agent
    listener = scenario.other(opener).name
    opening = scenario.opening.move.to_record(opener)
    states[opener] = record_own_move(states[opener], opening)
    states[listener] = integrate_move(states[listener], opening)

    speaker = listener
    listener = opener
    events = []
    termination = TerminationReason.TURN_LIMIT
    if goals_reached(states[speaker]):
        termination = TerminationReason.FINAL_STATE
    else:
        for turn in range(scenario.max_turns):
            agent = scenario.agent(speaker)
            state: InformationState = states[speaker]
            moves = agent.move_space(state.conv_state)
            if not moves:
                termination = TerminationReason.EMPTY_MOVE_SPACE
                break
            candidates = [m.to_candidate(state.active_type, state.conv_state) for m in moves]
            space = SelfMonitor(agent.weights, agent.policy).evaluate(
                candidates,
                state.private.self_character,
                state.private.other_character,
                state.conv_prob,
            )
            if forced_selections is None:
                selected = _select(agent, space, seed, turn)
            else:
                if turn >= len(forced_selections):
                    raise SimulationError(message=f"No forced selection for turn {turn}.")
                selected = forced_selections[turn]
                if not 0 <= selected < len(space):
                    raise SimulationError(
                        message=f"Forced selection {selected} at turn {turn} is outside of the move space."
                    )
            record = moves[selected].to_record(speaker)
            states[speaker] = record_own_move(states[speaker], record)
            heard = integrate_move(states[listener], record)
            states[listener] = heard
            belief = heard.private.belief
            events.append(
                TraceEvent(
                    turn=turn,
                    agent=speaker,
                    space=space,
                    selected=selected,
                    conv_state=heard.conv_state,
                    conv_prob=heard.conv_prob,
                    other_character=heard.private.other_character,
                    most_probable_type=belief.types[belief.most_probable_index].name,
                )
            )
            if goals_reached(heard):
                termination = TerminationReason.FINAL_STATE
                break
            speaker, listener = listener, speaker

    logger.info(
        f"Scenario '{scenario.name}' ended with {termination.value} after {len(events)} turns."
    )
    return Trace(scenario.name, seed, opening, tuple(events), termination)


def replay(scenario: Scenario, trace: Trace) -> Trace:
    """
    Re-run a scenario with the selections recorded in a trace and check that every recorded value is reproduced.

    :param scenario: The scenario the trace was recorded from.
    :param trace: The recorded trace.
    :return: The replayed trace, equal to the recorded one.
    """
    replayed = run(scenario, trace.seed, trace.selections)
    if len(replayed) != len(trace):
        raise ReplayMismatch(min(len(replayed), len(trace)), "length")
    for original, again in zip(trace.events, replayed.events):
        for field_name in ("agent", "conv_state", "conv_prob", "other_character", "space"):
            if getattr(original, field_name) != getattr(again, field_name):
                raise ReplayMismatch(original.turn, field_name)
    if replayed.termination != trace.termination:
        raise ReplayMismatch(len(trace), "termination")
    return replayed
