from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from typing_extensions import Tuple, Dict, Any, Self, Sequence

from .failures import InvalidObservation
from ..adapters.json_serializer import SubclassJSONSerializer
from ..decision import DecisionFactors


@dataclass(frozen=True)
class Observation(SubclassJSONSerializer):
    """
    One observed choice: the decision factors of every candidate move and the index of the move actually taken.
    """

    factors: Tuple[DecisionFactors, ...]
    chosen: int

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise InvalidObservation("there are no candidate moves.")
        if not 0 <= self.chosen < len(self.factors):
            raise InvalidObservation(
                f"chosen index {self.chosen} is out of range for {len(self.factors)} candidates."
            )
        for row in self.factors:
            if not all(math.isfinite(v) for v in row.as_tuple()):
                raise InvalidObservation(f"factor row {row.as_tuple()} is not finite.")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], chosen: int) -> Observation:
        """
        Create an observation from raw factor rows (s_self, s_other, conf_mass).
        """
        factors = []
        for row in rows:
            if len(row) != 3:
                raise InvalidObservation(f"factor row {list(row)} does not have 3 columns.")
            factors.append(DecisionFactors(*(float(v) for v in row)))
        return cls(tuple(factors), int(chosen))

    @property
    def is_informative(self) -> bool:
        return len(self.factors) >= 2

    def factor_matrix(self) -> np.ndarray:
        """
        :return: The decision factor matrix with one row per candidate.
        """
        return np.array([row.as_tuple() for row in self.factors], dtype=float)

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "factors": [list(row.as_tuple()) for row in self.factors],
            "chosen": self.chosen,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls.from_rows(data["factors"], data["chosen"])
