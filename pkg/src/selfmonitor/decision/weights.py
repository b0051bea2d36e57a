from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from typing_extensions import Tuple, Dict, Any, Self, Sequence

from .failures import WeightsNotOnSimplex
from ..adapters.json_serializer import SubclassJSONSerializer

SIMPLEX_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Weights(SubclassJSONSerializer):
    """
    The weights the SelfMonitor gives to the self character type (alpha), the other character type (beta) and the
    conformity with the conversational type (gamma).
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        values = self.as_tuple()
        if not all(math.isfinite(v) and v >= 0.0 for v in values):
            raise WeightsNotOnSimplex(values)
        if abs(math.fsum(values) - 1.0) > SIMPLEX_TOLERANCE:
            raise WeightsNotOnSimplex(values)

    @classmethod
    def normalized(cls, alpha: float, beta: float, gamma: float) -> Weights:
        """
        Rescale hand-authored, non-negative weights so that they sum to 1.
        """
        values = (float(alpha), float(beta), float(gamma))
        total = math.fsum(values)
        if total <= 0.0 or any(v < 0.0 for v in values):
            raise WeightsNotOnSimplex(values)
        return cls(*(v / total for v in values))

    @classmethod
    def from_sequence(cls, values: Sequence[float], normalize: bool = False) -> Weights:
        alpha, beta, gamma = (float(v) for v in values)
        if normalize:
            return cls.normalized(alpha, beta, gamma)
        return cls(alpha, beta, gamma)

    @classmethod
    def uniform(cls) -> Weights:
        return cls(1.0 / 3.0, 1.0 / 3.0, 1.0 - 2.0 / 3.0)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.as_tuple(), dtype=float)

    def l1_distance(self, other: Weights) -> float:
        return float(np.abs(self.as_array() - other.as_array()).sum())

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(data["alpha"], data["beta"], data["gamma"])
