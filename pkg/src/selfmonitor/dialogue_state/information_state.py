from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace

from sortedcontainers import SortedSet
from typing_extensions import Tuple, Optional, Dict, Any, Self, Iterable

from .failures import NoSnapshotAvailable, InvalidMoveRecord, DialogueStateError
from .gameboard import Gameboard, MoveRecord
from ..adapters.json_serializer import SubclassJSONSerializer, from_json
from ..conversational_type import (
    ConvTypeBelief,
    ConversationalType,
    bayes_update,
    advance_all,
    is_final,
)
from ..decision import Weights
from ..persona import TraitVector, CharacterUpdate, ema_update, validate
from ..persona.failures import UpdateRateOutOfRange

logger = logging.getLogger(__name__)

DEFAULT_UPDATE_RATE = 0.5


@dataclass(frozen=True)
class PrivateState(SubclassJSONSerializer):
    """
    The private part of an information state.
    """

    self_character: TraitVector
    other_character: TraitVector
    """
    The current estimate of the other participant's character type.
    """
    goals: SortedSet = field(default_factory=SortedSet)
    """
    Propositions the participant wants realized.
    """
    belief: ConvTypeBelief = None
    weights: Weights = field(default_factory=Weights.uniform)
    """
    The weights the SelfMonitor fixed for this participant.
    """
    update_rate: float = DEFAULT_UPDATE_RATE
    """
    The rate of the other character type update.
    """
    tmp: Optional[PrivateState] = None
    """
    A backup of the previous private state, one level deep.
    """

    def __post_init__(self):
        object.__setattr__(self, "goals", SortedSet(self.goals))
        if self.belief is None:
            raise DialogueStateError(message="A private state needs a conversational type belief.")
        if not 0.0 <= self.update_rate <= 1.0:
            raise UpdateRateOutOfRange(self.update_rate)
        if self.tmp is not None and self.tmp.tmp is not None:
            object.__setattr__(self, "tmp", replace(self.tmp, tmp=None))

    def snapshot(self) -> PrivateState:
        """
        :return: A copy of this state without its own backup, suitable to be stored as backup.
        """
        return replace(self, tmp=None)

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "self_character": self.self_character.to_list(),
            "other_character": self.other_character.to_list(),
            "goals": list(self.goals),
            "belief": self.belief.to_json(),
            "weights": self.weights.to_json(),
            "update_rate": self.update_rate,
            "tmp": None if self.tmp is None else self.tmp.to_json(),
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        tmp = data["tmp"]
        return cls(
            self_character=TraitVector.from_sequence(data["self_character"]),
            other_character=TraitVector.from_sequence(data["other_character"]),
            goals=SortedSet(data["goals"]),
            belief=ConvTypeBelief._from_json(data["belief"]),
            weights=Weights._from_json(data["weights"]),
            update_rate=data["update_rate"],
            tmp=None if tmp is None else PrivateState._from_json(tmp),
        )


@dataclass(frozen=True)
class InformationState(SubclassJSONSerializer):
    """
    The total state of one dialogue participant: its private state, its view of the gameboard and where the dialogue
    stands in each candidate conversational type.
    """

    owner: str
    """
    The participant this information state belongs to.
    """
    interlocutor: str
    private: PrivateState
    dgb: Gameboard
    conv_states: Tuple[str, ...]
    """
    The current state within every candidate conversational type, in candidate order.
    """

    def __post_init__(self):
        object.__setattr__(self, "conv_states", tuple(self.conv_states))
        if {self.owner, self.interlocutor} != {self.dgb.speaker, self.dgb.addressee}:
            raise DialogueStateError(
                message=f"The gameboard participants ({self.dgb.speaker}, {self.dgb.addressee}) are not "
                f"({self.owner}, {self.interlocutor})."
            )
        belief = self.private.belief
        if len(self.conv_states) != len(belief.candidates):
            raise DialogueStateError(
                message=f"{len(self.conv_states)} conversational states for {len(belief.candidates)} candidates."
            )
        for ct, state in zip(belief.types, self.conv_states):
            ct.ensure_state(state)

    @property
    def active_type(self) -> ConversationalType:
        return self.private.belief.active

    @property
    def conv_state(self) -> str:
        """
        The current state within the active conversational type.
        """
        return self.conv_states[self.private.belief.active_index]

    @property
    def conv_prob(self) -> float:
        return self.private.belief.conv_prob

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "owner": self.owner,
            "interlocutor": self.interlocutor,
            "private": self.private.to_json(),
            "dgb": self.dgb.to_json(),
            "conv_states": list(self.conv_states),
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            owner=data["owner"],
            interlocutor=data["interlocutor"],
            private=PrivateState._from_json(data["private"]),
            dgb=Gameboard._from_json(data["dgb"]),
            conv_states=tuple(data["conv_states"]),
        )


def init_information_state(
    self_character: TraitVector,
    other_prior: TraitVector,
    goals: Iterable[str],
    belief: ConvTypeBelief,
    weights: Weights,
    rate: float = DEFAULT_UPDATE_RATE,
    owner: str = "self",
    interlocutor: str = "other",
) -> InformationState:
    """
    Assemble the information state of a participant before anything was said.

    :param self_character: The participant's own character type.
    :param other_prior: The prior estimate of the other participant's character type.
    :param goals: The propositions the participant wants realized.
    :param belief: The belief over candidate conversational types.
    :param weights: The SelfMonitor weights.
    :param rate: The rate of the other character type update.
    :param owner: The name of the participant.
    :param interlocutor: The name of the other participant.
    :return: A state with an empty gameboard, at the init state of every candidate type and without backup.
    """
    private = PrivateState(
        self_character=validate(self_character),
        other_character=validate(other_prior),
        goals=SortedSet(goals),
        belief=belief,
        weights=weights,
        update_rate=rate,
    )
    return InformationState(
        owner=owner,
        interlocutor=interlocutor,
        private=private,
        dgb=Gameboard(speaker=owner, addressee=interlocutor),
        conv_states=belief.initial_states(),
    )


def integrate_move(
    state: InformationState,
    incoming: MoveRecord,
    character_update: CharacterUpdate = ema_update,
) -> InformationState:
    """
    Integrate a move of the other participant.

    The update runs in a fixed order: backup of the private state, gameboard update, other character type update,
    conversational type belief update and finally the transition of every candidate type.

    :param state: The state before the move, left unchanged.
    :param incoming: The move made by the other participant, with the character type it expresses.
    :param character_update: The update of the other character type estimate.
    :return: The state after the move.
    """
    if incoming.speaker != state.interlocutor:
        raise InvalidMoveRecord(
            incoming.label,
            f"it was made by '{incoming.speaker}' and not by the interlocutor '{state.interlocutor}'.",
        )
    if incoming.vector is None:
        raise InvalidMoveRecord(
            incoming.label, "an incoming move needs an observed character type vector."
        )
    private = state.private
    backup = private.snapshot()
    dgb = state.dgb.with_move(incoming, addressee=state.owner)
    other_character = character_update(
        private.other_character, incoming.vector, private.update_rate
    )
    belief = bayes_update(private.belief, incoming.label, state.conv_states)
    conv_states = advance_all(belief.types, state.conv_states, incoming.label)
    logger.debug(
        f"{state.owner} integrated '{incoming.label}': {state.conv_state} -> "
        f"{conv_states[belief.active_index]}, conv-prob {belief.conv_prob:.4f}"
    )
    return replace(
        state,
        private=replace(
            private, other_character=other_character, belief=belief, tmp=backup
        ),
        dgb=dgb,
        conv_states=conv_states,
    )


def record_own_move(state: InformationState, move: MoveRecord) -> InformationState:
    """
    Record a move the owner of the state made itself.

    The move enters the gameboard and the candidate types follow it; character types and the belief stay as they are.
    """
    if move.speaker != state.owner:
        raise InvalidMoveRecord(
            move.label,
            f"it was made by '{move.speaker}' and not by the owner '{state.owner}'.",
        )
    private = state.private
    return replace(
        state,
        private=replace(private, tmp=private.snapshot()),
        dgb=state.dgb.with_move(move, addressee=state.interlocutor),
        conv_states=advance_all(private.belief.types, state.conv_states, move.label),
    )


def rollback_to_tmp(state: InformationState) -> InformationState:
    """
    Restore the private state from its backup; the gameboard stays as it is.
    """
    if state.private.tmp is None:
        raise NoSnapshotAvailable()
    return replace(state, private=state.private.tmp)


def goals_reached(state: InformationState) -> bool:
    """
    :return: True if the dialogue reached a termination of the active conversational type.
    """
    return is_final(state.active_type, state.conv_state)


def to_canonical_text(state: InformationState) -> str:
    """
    :return: The state as JSON text with a stable field order.
    """
    return json.dumps(state.to_json(), indent=2, allow_nan=False) + "\n"


def from_canonical_text(text: str) -> InformationState:
    return from_json(json.loads(text))
