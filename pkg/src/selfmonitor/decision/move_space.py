from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN

from typing_extensions import Tuple, Dict, Any, Self, List, Iterable

from .failures import InvalidMoveCandidate, InvalidScoredMoveSpace, EmptyMoveSpace
from ..adapters.json_serializer import (
    SubclassJSONSerializer,
    dumps_records,
    loads_records,
)
from ..persona import TraitVector
from ..utils import sums_to_one


@dataclass(frozen=True)
class MoveCandidate(SubclassJSONSerializer):
    """
    One possible next dialogue move.
    """

    label: str
    """
    The move label, the key into the conversational type's transitions and conformity table.
    """
    text: str
    """
    The surface form of the move.
    """
    vector: TraitVector
    """
    The character type the move expresses.
    """
    conformity: float
    """
    The degree in [-1, 1] to which the move fits the conversational type.
    """

    def __post_init__(self):
        if not self.label:
            raise InvalidMoveCandidate(self.label, "the label is empty.")
        if not isinstance(self.vector, TraitVector):
            raise InvalidMoveCandidate(self.label, "the vector is not a TraitVector.")
        if not (math.isfinite(self.conformity) and -1.0 <= self.conformity <= 1.0):
            raise InvalidMoveCandidate(
                self.label, f"conformity {self.conformity} is outside of [-1, 1]."
            )

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "label": self.label,
            "text": self.text,
            "vector": self.vector.to_list(),
            "conformity": self.conformity,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            label=data["label"],
            text=data["text"],
            vector=TraitVector.from_sequence(data["vector"]),
            conformity=data["conformity"],
        )


@dataclass(frozen=True)
class DecisionFactors(SubclassJSONSerializer):
    """
    One row of the decision factor matrix: the affinity of a move to the self character type, the affinity to the
    other character type, and the conformity weighted by the conv-prob.
    """

    s_self: float
    s_other: float
    conf_mass: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.s_self, self.s_other, self.conf_mass)

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "s_self": self.s_self,
            "s_other": self.s_other,
            "conf_mass": self.conf_mass,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(data["s_self"], data["s_other"], data["conf_mass"])


@dataclass(frozen=True)
class ScoredMove(SubclassJSONSerializer):
    """
    A move candidate with its decision factors, its score and its selection probability.
    """

    candidate: MoveCandidate
    factors: DecisionFactors
    rho: float
    probability: float

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "candidate": self.candidate.to_json(),
            "factors": self.factors.to_json(),
            "rho": self.rho,
            "probability": self.probability,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            candidate=MoveCandidate._from_json(data["candidate"]),
            factors=DecisionFactors._from_json(data["factors"]),
            rho=data["rho"],
            probability=data["probability"],
        )


TABLE_COLUMNS = ("label", "s_self", "s_other", "d*p", "rho", "probability")


def format_decimal(value: float, digits: int = 4) -> str:
    """
    :return: The value with a fixed number of fractional digits, rounded half to even.
    """
    quantum = Decimal(1).scaleb(-digits)
    rounded = Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if rounded.is_zero():
        rounded = abs(rounded)
    return f"{rounded:.{digits}f}"


@dataclass(frozen=True)
class ScoredMoveSpace(SubclassJSONSerializer):
    """
    A move space after scoring, in the order of the input moves.
    """

    rows: Tuple[ScoredMove, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise EmptyMoveSpace()
        if not sums_to_one(self.probabilities):
            raise InvalidScoredMoveSpace(
                f"probabilities {list(self.probabilities)} do not sum to 1."
            )

    @property
    def probabilities(self) -> Tuple[float, ...]:
        return tuple(row.probability for row in self.rows)

    @property
    def rhos(self) -> Tuple[float, ...]:
        return tuple(row.rho for row in self.rows)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(row.candidate.label for row in self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, index: int) -> ScoredMove:
        return self.rows[index]

    def table_rows(self) -> List[Tuple[str, ...]]:
        return [
            (
                row.candidate.label,
                *(format_decimal(v) for v in row.factors.as_tuple()),
                format_decimal(row.rho),
                format_decimal(row.probability),
            )
            for row in self.rows
        ]

    def to_table(self) -> str:
        """
        :return: A human readable, aligned table with 4 fractional digits.
        """
        return render_table(TABLE_COLUMNS, self.table_rows())

    def to_json_lines(self) -> str:
        return dumps_records(self.rows)

    @classmethod
    def from_json_lines(cls, text: str) -> ScoredMoveSpace:
        return cls(tuple(loads_records(text)))

    def to_json(self) -> Dict[str, Any]:
        return {**super().to_json(), "rows": [row.to_json() for row in self.rows]}

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(tuple(ScoredMove._from_json(row) for row in data["rows"]))


def render_table(header: Iterable[str], rows: Iterable[Iterable[str]]) -> str:
    """
    Render rows of strings as a left aligned first column and right aligned remaining columns.
    """
    header = tuple(header)
    rows = [tuple(row) for row in rows]
    widths = [
        max(len(str(cell)) for cell in column) for column in zip(header, *rows)
    ]

    def render(cells):
        first, *rest = cells
        parts = [str(first).ljust(widths[0])]
        parts += [str(cell).rjust(width) for cell, width in zip(rest, widths[1:])]
        return "  ".join(parts).rstrip()

    lines = [render(header), render("-" * w for w in widths)]
    lines += [render(row) for row in rows]
    return "\n".join(lines) + "\n"
