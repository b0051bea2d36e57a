from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from typing_extensions import Tuple, Dict, Any, Self, List

from .failures import SimulationError
from ..adapters.json_serializer import SubclassJSONSerializer, dumps_records, loads_records
from ..decision import ScoredMoveSpace, format_decimal
from ..dialogue_state import MoveRecord
from ..persona import TraitVector


class TerminationReason(str, Enum):
    FINAL_STATE = "final-state"
    """
    The active conversational type reached one of its terminations.
    """
    TURN_LIMIT = "turn-limit"
    EMPTY_MOVE_SPACE = "empty-move-space"
    """
    The speaker has no authored moves for the state the dialogue is in.
    """


@dataclass(frozen=True)
class TraceEvent(SubclassJSONSerializer):
    """
    One turn of a simulated dialogue: the speaker's scored move space and selection, and the listener's state after
    integrating the selected move.
    """

    turn: int
    agent: str
    """
    The speaker of the turn.
    """
    space: ScoredMoveSpace
    selected: int
    conv_state: str
    """
    The listener's state within its active conversational type after the move.
    """
    conv_prob: float
    """
    The listener's conv-prob after the move.
    """
    other_character: TraitVector
    """
    The listener's estimate of the speaker's character type after the move.
    """
    most_probable_type: str = ""
    """
    The name of the conversational type the listener considers most probable after the move.
    """

    @property
    def move(self):
        return self.space[self.selected].candidate

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "turn": self.turn,
            "agent": self.agent,
            "space": self.space.to_json(),
            "selected": self.selected,
            "conv_state": self.conv_state,
            "conv_prob": self.conv_prob,
            "other_character": self.other_character.to_list(),
            "most_probable_type": self.most_probable_type,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            turn=data["turn"],
            agent=data["agent"],
            space=ScoredMoveSpace._from_json(data["space"]),
            selected=data["selected"],
            conv_state=data["conv_state"],
            conv_prob=data["conv_prob"],
            other_character=TraitVector.from_sequence(data["other_character"]),
            most_probable_type=data["most_probable_type"],
        )


@dataclass(frozen=True)
class TraceHeader(SubclassJSONSerializer):
    """
    The first record of a serialized trace.
    """

    scenario: str
    seed: int
    opening: MoveRecord

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "scenario": self.scenario,
            "seed": self.seed,
            "opening": self.opening.to_json(),
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(data["scenario"], data["seed"], MoveRecord._from_json(data["opening"]))


@dataclass(frozen=True)
class TraceTermination(SubclassJSONSerializer):
    """
    The last record of a serialized trace.
    """

    reason: TerminationReason
    turns: int

    def to_json(self) -> Dict[str, Any]:
        return {**super().to_json(), "reason": self.reason.value, "turns": self.turns}

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(TerminationReason(data["reason"]), data["turns"])


@dataclass(frozen=True)
class Trace:
    """
    The record of one simulated dialogue.
    """

    scenario: str
    seed: int
    opening: MoveRecord
    events: Tuple[TraceEvent, ...] = field(default_factory=tuple)
    termination: TerminationReason = TerminationReason.TURN_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        for expected, event in enumerate(self.events):
            if event.turn != expected:
                raise SimulationError(
                    message=f"Trace turns are not contiguous: expected turn {expected}, got {event.turn}."
                )

    def __len__(self):
        return len(self.events)

    @property
    def selections(self) -> List[int]:
        return [event.selected for event in self.events]

    def transcript(self) -> str:
        """
        :return: The dialogue as readable lines, one per move, with the probability of every selected move.
        """
        lines = [f"{self.opening.speaker}: {self.opening.text} [{self.opening.label}]"]
        for event in self.events:
            move = event.move
            probability = format_decimal(event.space[event.selected].probability)
            lines.append(f"{event.agent}: {move.text} [{move.label}, p={probability}]")
        lines.append(f"({self.termination.value} after {len(self.events)} turns)")
        return "\n".join(lines) + "\n"

    def to_json_lines(self) -> str:
        return dumps_records(
            [
                TraceHeader(self.scenario, self.seed, self.opening),
                *self.events,
                TraceTermination(self.termination, len(self.events)),
            ]
        )

    @classmethod
    def from_json_lines(cls, text: str) -> Trace:
        records = loads_records(text)
        if len(records) < 2:
            raise SimulationError(message="A trace needs a header and a termination record.")
        header, *events, termination = records
        if not isinstance(header, TraceHeader) or not isinstance(termination, TraceTermination):
            raise SimulationError(message="A trace starts with its header and ends with its termination.")
        if termination.turns != len(events) or not all(isinstance(e, TraceEvent) for e in events):
            raise SimulationError(message="The trace events do not match the termination record.")
        return cls(header.scenario, header.seed, header.opening, tuple(events), termination.reason)
