from __future__ import annotations

from dataclasses import dataclass, field

from sortedcontainers import SortedSet
from typing_extensions import Tuple, Optional, Dict, Any, Self, Iterable

from .failures import InvalidMoveRecord, InvalidGameboard
from ..adapters.json_serializer import SubclassJSONSerializer
from ..persona import TraitVector


@dataclass(frozen=True)
class MoveRecord(SubclassJSONSerializer):
    """
    A dialogue move as it is recorded on the gameboard.
    """

    label: str
    speaker: str
    text: str = ""
    vector: Optional[TraitVector] = None
    """
    The character type the move expresses, as predicted by an external predictor.
    """
    facts: Tuple[str, ...] = field(default_factory=tuple)
    """
    Propositions the move commits to.
    """
    raises: Tuple[str, ...] = field(default_factory=tuple)
    """
    Questions the move puts under discussion.
    """
    resolves: Tuple[str, ...] = field(default_factory=tuple)
    """
    Questions the move removes from discussion.
    """

    def __post_init__(self):
        for name in ("facts", "raises", "resolves"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.label:
            raise InvalidMoveRecord(self.label, "the label is empty.")
        if not self.speaker:
            raise InvalidMoveRecord(self.label, "the speaker is empty.")
        if self.vector is not None and not isinstance(self.vector, TraitVector):
            raise InvalidMoveRecord(self.label, "the vector is not a TraitVector.")

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "label": self.label,
            "speaker": self.speaker,
            "text": self.text,
            "vector": None if self.vector is None else self.vector.to_list(),
            "facts": list(self.facts),
            "raises": list(self.raises),
            "resolves": list(self.resolves),
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        vector = data["vector"]
        return cls(
            label=data["label"],
            speaker=data["speaker"],
            text=data["text"],
            vector=None if vector is None else TraitVector.from_sequence(vector),
            facts=tuple(data["facts"]),
            raises=tuple(data["raises"]),
            resolves=tuple(data["resolves"]),
        )


@dataclass(frozen=True)
class Gameboard(SubclassJSONSerializer):
    """
    The public part of an information state.
    """

    speaker: str
    addressee: str
    utterance_time: int = 0
    """
    The number of integrated moves.
    """
    facts: SortedSet = field(default_factory=SortedSet)
    pending: Tuple[MoveRecord, ...] = field(default_factory=tuple)
    """
    Moves not yet integrated. Moves are integrated atomically, so this is empty between updates.
    """
    moves: Tuple[MoveRecord, ...] = field(default_factory=tuple)
    """
    Integrated moves, the most recent first.
    """
    qud: Tuple[str, ...] = field(default_factory=tuple)
    """
    Questions under discussion in priority order, the most pressing first.
    """

    def __post_init__(self):
        object.__setattr__(self, "facts", SortedSet(self.facts))
        object.__setattr__(self, "pending", tuple(self.pending))
        object.__setattr__(self, "moves", tuple(self.moves))
        object.__setattr__(self, "qud", tuple(self.qud))
        if self.speaker == self.addressee:
            raise InvalidGameboard(
                f"speaker and addressee are both '{self.speaker}'."
            )
        if self.utterance_time != len(self.moves):
            raise InvalidGameboard(
                f"utterance time {self.utterance_time} differs from the {len(self.moves)} integrated moves."
            )
        if any(move in self.moves for move in self.pending):
            raise InvalidGameboard("a pending move is already integrated.")

    @property
    def latest_move(self) -> Optional[MoveRecord]:
        return self.moves[0] if self.moves else None

    def with_move(self, move: MoveRecord, addressee: str) -> Gameboard:
        """
        :return: A new gameboard with the move integrated and the move's speaker as current speaker.
        """
        return Gameboard(
            speaker=move.speaker,
            addressee=addressee,
            utterance_time=self.utterance_time + 1,
            facts=SortedSet(self.facts) | SortedSet(move.facts),
            pending=(),
            moves=(move,) + self.moves,
            qud=_updated_qud(self.qud, move.raises, move.resolves),
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "speaker": self.speaker,
            "addressee": self.addressee,
            "utterance_time": self.utterance_time,
            "facts": list(self.facts),
            "pending": [m.to_json() for m in self.pending],
            "moves": [m.to_json() for m in self.moves],
            "qud": list(self.qud),
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            speaker=data["speaker"],
            addressee=data["addressee"],
            utterance_time=data["utterance_time"],
            facts=SortedSet(data["facts"]),
            pending=tuple(MoveRecord._from_json(m) for m in data["pending"]),
            moves=tuple(MoveRecord._from_json(m) for m in data["moves"]),
            qud=tuple(data["qud"]),
        )


def _updated_qud(
    qud: Tuple[str, ...], raises: Iterable[str], resolves: Iterable[str]
) -> Tuple[str, ...]:
    resolved = set(resolves)
    raised = tuple(q for q in raises if q not in resolved)
    remaining = tuple(q for q in qud if q not in resolved and q not in raised)
    return raised + remaining
