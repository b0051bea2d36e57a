from __future__ import annotations

import logging
from dataclasses import dataclass, field

import rustworkx as rx
from typing_extensions import Tuple, Dict, FrozenSet, Set, Optional, Any, Self, Iterable

from .failures import (
    UnknownState,
    InvalidConversationalType,
    NonDeterministicTransition,
    ConformityOutOfRange,
)
from ..adapters.json_serializer import SubclassJSONSerializer

logger = logging.getLogger(__name__)

ON_TYPE_CONFORMITY = 1.0
"""
Conformity of a move that has a transition from the current state and no override.
"""

OFF_TYPE_CONFORMITY = -1.0
"""
Conformity of a move that has neither a transition from the current state nor an override.
"""


@dataclass(frozen=True)
class Transition(SubclassJSONSerializer):
    """
    A conversational rule: the move `label` made in state `source` leads to state `target`.
    """

    source: str
    label: str
    target: str

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "source": self.source,
            "label": self.label,
            "target": self.target,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(source=data["source"], label=data["label"], target=data["target"])


@dataclass(frozen=True)
class AdvanceResult:
    """
    The outcome of following a move in a conversational type.
    """

    state: str
    """
    The state after the move.
    """
    off_type: bool
    """
    Whether no transition matched the move, in which case the state did not change.
    """


@dataclass(frozen=True)
class ConversationalType(SubclassJSONSerializer):
    """
    A conversational type as a deterministic labeled transition system over move labels with a conformity table.
    """

    name: str
    states: Tuple[str, ...]
    init_state: str
    final_states: FrozenSet[str]
    transitions: Tuple[Transition, ...] = field(default_factory=tuple)
    qnud: Tuple[str, ...] = field(default_factory=tuple)
    """
    Labels of the questions that may be discussed in this type, in priority order.
    """
    conformity_overrides: Dict[str, float] = field(default_factory=dict)
    """
    Graded conformity per move label, taking precedence over the transition based fallback.
    """

    _transition_table: Dict[Tuple[str, str], str] = field(
        init=False, repr=False, compare=False, default=None
    )
    _state_graph: rx.PyDiGraph = field(
        init=False, repr=False, compare=False, default=None
    )
    _state_index: Dict[str, int] = field(
        init=False, repr=False, compare=False, default=None
    )

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "final_states", frozenset(self.final_states))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "qnud", tuple(self.qnud))
        object.__setattr__(
            self,
            "conformity_overrides",
            {label: float(v) for label, v in self.conformity_overrides.items()},
        )
        self._check_structure()
        self._build_state_graph()

    def _check_structure(self):
        state_set = set(self.states)
        if len(state_set) != len(self.states):
            raise InvalidConversationalType(self.name, "duplicate state names.")
        if self.init_state not in state_set:
            raise InvalidConversationalType(
                self.name, f"init state '{self.init_state}' is not a state."
            )
        if not self.final_states:
            raise InvalidConversationalType(self.name, "there are no final states.")
        unknown_finals = self.final_states - state_set
        if unknown_finals:
            raise InvalidConversationalType(
                self.name, f"final states {sorted(unknown_finals)} are not states."
            )
        for transition in self.transitions:
            for endpoint in (transition.source, transition.target):
                if endpoint not in state_set:
                    raise InvalidConversationalType(
                        self.name,
                        f"transition {transition.source} -{transition.label}-> {transition.target} "
                        f"uses unknown state '{endpoint}'.",
                    )
        for label, value in self.conformity_overrides.items():
            if not -1.0 <= value <= 1.0:
                raise ConformityOutOfRange(self.name, label=label, value=value)

    def _build_state_graph(self):
        graph = rx.PyDiGraph()
        state_index = {state: graph.add_node(state) for state in self.states}
        table: Dict[Tuple[str, str], str] = {}
        for transition in self.transitions:
            key = (transition.source, transition.label)
            if key in table:
                raise NonDeterministicTransition(
                    self.name, source=transition.source, label=transition.label
                )
            table[key] = transition.target
            graph.add_edge(
                state_index[transition.source],
                state_index[transition.target],
                transition.label,
            )
        object.__setattr__(self, "_transition_table", table)
        object.__setattr__(self, "_state_graph", graph)
        object.__setattr__(self, "_state_index", state_index)

    def ensure_state(self, state: str) -> str:
        """
        :param state: The state to check.
        :return: The state if it is a member of this type's states.
        """
        if state not in self._state_index:
            raise UnknownState(self.name, state)
        return state

    def has_transition(self, state: str, move_label: str) -> bool:
        return (self.ensure_state(state), move_label) in self._transition_table

    def labels_from(self, state: str) -> Set[str]:
        """
        :return: The move labels that have a transition out of the given state.
        """
        self.ensure_state(state)
        return {label for source, label in self._transition_table if source == state}

    def reachable_states(self, start: Optional[str] = None) -> Set[str]:
        """
        :param start: The state to start from, defaults to the init state.
        :return: All states that can be reached from the start state, including the start state.
        """
        start = self.ensure_state(start or self.init_state)
        descendants = rx.descendants(self._state_graph, self._state_index[start])
        return {start} | {self._state_graph[index] for index in descendants}

    def to_dot(self) -> str:
        """
        :return: The transition system in graphviz DOT format, final states are drawn as double circles.
        """
        return self._state_graph.to_dot(
            lambda state: dict(
                label=f'"{state}"',
                shape=(
                    "doublecircle" if state in self.final_states else "circle"
                ),
            ),
            lambda label: dict(label=f'"{label}"'),
            dict(rankdir="LR"),
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "name": self.name,
            "states": list(self.states),
            "init_state": self.init_state,
            "final_states": sorted(self.final_states),
            "transitions": [t.to_json() for t in self.transitions],
            "qnud": list(self.qnud),
            "conformity_overrides": dict(self.conformity_overrides),
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            name=data["name"],
            states=tuple(data["states"]),
            init_state=data["init_state"],
            final_states=frozenset(data["final_states"]),
            transitions=tuple(Transition._from_json(t) for t in data["transitions"]),
            qnud=tuple(data["qnud"]),
            conformity_overrides=dict(data["conformity_overrides"]),
        )


def conformity(ct: ConversationalType, move_label: str, current_state: str) -> float:
    """
    The degree to which a move conforms to the conversational type in the current state.

    :param ct: The conversational type.
    :param move_label: The label of the move.
    :param current_state: The state the move would be made in.
    :return: The override for the label if there is one, otherwise 1 if the move has a transition and -1 if not.
    """
    ct.ensure_state(current_state)
    if move_label in ct.conformity_overrides:
        return ct.conformity_overrides[move_label]
    if ct.has_transition(current_state, move_label):
        return ON_TYPE_CONFORMITY
    return OFF_TYPE_CONFORMITY


def follow(ct: ConversationalType, current_state: str, move_label: str) -> AdvanceResult:
    """
    Follow a move in the conversational type, reporting whether the move was off-type.
    """
    target = ct._transition_table.get((ct.ensure_state(current_state), move_label))
    if target is None:
        logger.debug(
            f"Move '{move_label}' is off-type in state '{current_state}' of '{ct.name}'."
        )
        return AdvanceResult(state=current_state, off_type=True)
    return AdvanceResult(state=target, off_type=False)


def advance(ct: ConversationalType, current_state: str, move_label: str) -> str:
    """
    :return: The state after the move, the current state if the move has no transition.
    """
    return follow(ct, current_state, move_label).state


def is_final(ct: ConversationalType, state: str) -> bool:
    """
    :return: True if the state is one of the type's terminations.
    """
    return ct.ensure_state(state) in ct.final_states


def advance_all(
    types: Iterable[ConversationalType], states: Iterable[str], move_label: str
) -> Tuple[str, ...]:
    """
    Advance each conversational type from its own current state.
    """
    return tuple(advance(ct, state, move_label) for ct, state in zip(types, states))
