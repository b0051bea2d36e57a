from __future__ import annotations

from dataclasses import dataclass, field

from typing_extensions import Tuple, Optional, Dict, Mapping

from .failures import InvalidScenario, UnknownAgent
from ..conversational_type import ConversationalType, ConvTypeBelief
from ..decision import MoveCandidate, SelectionPolicy, Weights, resolve_conformity
from ..dialogue_state import (
    MoveRecord,
    InformationState,
    init_information_state,
    DEFAULT_UPDATE_RATE,
)
from ..persona import TraitVector


@dataclass(frozen=True)
class MoveSpec:
    """
    An authored move: what the agent can say and what saying it commits to.
    """

    label: str
    text: str
    vector: TraitVector
    conformity: Optional[float] = None
    """
    Authored conformity of this move, when absent the conversational type decides.
    """
    facts: Tuple[str, ...] = field(default_factory=tuple)
    raises: Tuple[str, ...] = field(default_factory=tuple)
    resolves: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.label:
            raise InvalidScenario("a move has an empty label.")
        if self.conformity is not None and not -1.0 <= self.conformity <= 1.0:
            raise InvalidScenario(
                f"the conformity {self.conformity} of move '{self.label}' is outside of [-1, 1]."
            )
        for name in ("facts", "raises", "resolves"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def to_candidate(self, ct: ConversationalType, state: str) -> MoveCandidate:
        return MoveCandidate(
            label=self.label,
            text=self.text,
            vector=self.vector,
            conformity=resolve_conformity(self.label, ct, state, self.conformity),
        )

    def to_record(self, speaker: str) -> MoveRecord:
        return MoveRecord(
            label=self.label,
            speaker=speaker,
            text=self.text,
            vector=self.vector,
            facts=self.facts,
            raises=self.raises,
            resolves=self.resolves,
        )


@dataclass(frozen=True)
class AgentSpec:
    """
    A dialogue participant: its initial information state, how it selects moves and what it can say.
    """

    name: str
    self_character: TraitVector
    other_prior: TraitVector
    """
    The prior estimate of the other agent's character type.
    """
    weights: Weights
    update_rate: float = DEFAULT_UPDATE_RATE
    goals: Tuple[str, ...] = field(default_factory=tuple)
    policy: SelectionPolicy = SelectionPolicy.ARGMAX
    seed: int = 0
    """
    The agent's part of the seed of every sampled selection.
    """
    move_spaces: Mapping[str, Tuple[MoveSpec, ...]] = field(default_factory=dict)
    """
    The authored move space per state of the active conversational type.
    """

    def __post_init__(self):
        if not self.name:
            raise InvalidScenario("an agent has an empty name.")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise InvalidScenario(
                f"the seed of '{self.name}' must be a non-negative integer, got {self.seed!r}."
            )
        object.__setattr__(
            self, "move_spaces", {state: tuple(moves) for state, moves in self.move_spaces.items()}
        )
        for state, moves in self.move_spaces.items():
            if not moves:
                raise InvalidScenario(f"the move space of '{self.name}' in state '{state}' is empty.")

    def move_space(self, state: str) -> Tuple[MoveSpec, ...]:
        """
        :return: The moves authored for the state, empty if there are none.
        """
        return self.move_spaces.get(state, ())


@dataclass(frozen=True)
class Opening:
    """
    The scripted first move of the dialogue.
    """

    agent: str
    move: MoveSpec


@dataclass(frozen=True)
class Scenario:
    """
    A two agent dialogue set-up: the candidate conversational types, the agents and the opening move.
    """

    name: str
    conversational_types: Tuple[ConversationalType, ...]
    priors: Tuple[float, ...]
    """
    Every agent's prior over the conversational types, the first type is the active one.
    """
    agents: Tuple[AgentSpec, AgentSpec]
    opening: Opening
    max_turns: int = 10

    def __post_init__(self):
        object.__setattr__(self, "conversational_types", tuple(self.conversational_types))
        object.__setattr__(self, "priors", tuple(float(p) for p in self.priors))
        object.__setattr__(self, "agents", tuple(self.agents))
        if len(self.agents) != 2:
            raise InvalidScenario(f"a dialogue needs exactly two agents, got {len(self.agents)}.")
        if self.agents[0].name == self.agents[1].name:
            raise InvalidScenario(f"both agents are named '{self.agents[0].name}'.")
        if self.max_turns < 1:
            raise InvalidScenario(f"max_turns must be at least 1, got {self.max_turns}.")
        if len(self.priors) != len(self.conversational_types):
            raise InvalidScenario(
                f"{len(self.priors)} priors for {len(self.conversational_types)} conversational types."
            )
        self.agent(self.opening.agent)
        self.belief()
        active = self.active_type
        for agent in self.agents:
            for state in agent.move_spaces:
                if state not in active.states:
                    raise InvalidScenario(
                        f"'{agent.name}' has a move space for '{state}', which is not a state of '{active.name}'."
                    )

    @property
    def active_type(self) -> ConversationalType:
        return self.conversational_types[0]

    def belief(self) -> ConvTypeBelief:
        return ConvTypeBelief.from_priors(self.conversational_types, self.priors)

    def agent(self, name: str) -> AgentSpec:
        for agent in self.agents:
            if agent.name == name:
                return agent
        raise UnknownAgent(name)

    def other(self, name: str) -> AgentSpec:
        """
        :return: The agent that is not the named one.
        """
        self.agent(name)
        return self.agents[1] if self.agents[0].name == name else self.agents[0]

    def initial_states(self) -> Dict[str, InformationState]:
        """
        :return: The information state of every agent before the opening move.
        """
        belief = self.belief()
        return {
            agent.name: init_information_state(
                self_character=agent.self_character,
                other_prior=agent.other_prior,
                goals=agent.goals,
                belief=belief,
                weights=agent.weights,
                rate=agent.update_rate,
                owner=agent.name,
                interlocutor=self.other(agent.name).name,
            )
            for agent in self.agents
        }
