from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from typing_extensions import Sequence, Tuple, Callable, List, ClassVar

from .failures import (
    WrongTraitDimension,
    TraitComponentOutOfRange,
    NonFiniteTraitComponent,
    UpdateRateOutOfRange,
)

TRAIT_NAMES: Tuple[str, ...] = (
    "openness",
    "conscientiousness",
    "extroversion",
    "agreeableness",
    "neuroticism",
)
"""
The fixed serialization order [o, c, e, a, n].
"""

TRAIT_LOWER_BOUND = -1.0
TRAIT_UPPER_BOUND = 1.0


def validate_components(values: Sequence[float]) -> Tuple[float, ...]:
    """
    Check that the values form a valid trait vector.

    :param values: The components in [o, c, e, a, n] order.
    :return: The components as a tuple of floats.
    """
    if len(values) != len(TRAIT_NAMES):
        raise WrongTraitDimension(len(values))
    components = tuple(float(v) for v in values)
    for index, value in enumerate(components):
        if not math.isfinite(value):
            raise NonFiniteTraitComponent(index, value)
        if not TRAIT_LOWER_BOUND <= value <= TRAIT_UPPER_BOUND:
            raise TraitComponentOutOfRange(index, value)
    return components


def clamp_components(values: Sequence[float]) -> Tuple[float, ...]:
    """
    :return: The values clamped to the trait range.
    """
    return tuple(
        min(TRAIT_UPPER_BOUND, max(TRAIT_LOWER_BOUND, float(v))) for v in values
    )


@dataclass(frozen=True)
class TraitVector:
    """
    A Big Five (OCEAN) character type vector.

    It is used for the self character type, the estimated character type of the other participant and the character
    type a single dialogue move expresses.
    """

    openness: float = 0.0
    conscientiousness: float = 0.0
    extroversion: float = 0.0
    agreeableness: float = 0.0
    neuroticism: float = 0.0

    dimension: ClassVar[int] = len(TRAIT_NAMES)

    def __post_init__(self):
        validate_components(self.to_list())

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> TraitVector:
        """
        Create a trait vector from components in [o, c, e, a, n] order.
        """
        return cls(*validate_components(values))

    @classmethod
    def zeros(cls) -> TraitVector:
        return cls()

    def to_list(self) -> List[float]:
        return [getattr(self, name) for name in TRAIT_NAMES]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.to_list(), dtype=float)

    def trait(self, name: str) -> float:
        """
        :param name: One of the OCEAN trait names.
        :return: The value of that trait.
        """
        if name not in TRAIT_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def __iter__(self):
        return iter(self.to_list())

    def __len__(self):
        return self.dimension


def validate(vector: TraitVector | Sequence[float]) -> TraitVector:
    """
    Validate a trait vector or raw components.

    :param vector: The vector to check.
    :return: The valid trait vector.
    """
    if isinstance(vector, TraitVector):
        values = vector.to_list()
    else:
        values = list(vector)
    return TraitVector(*validate_components(values))


def cosine_similarity(a: TraitVector, b: TraitVector) -> float:
    """
    The affinity of two character type vectors.

    A vector with zero norm carries no evidence of affinity either way, so its similarity to anything is 0.

    :return: The cosine of the angle between the two vectors, in [-1, 1].
    """
    a_array, b_array = a.as_array(), b.as_array()
    norm_product = float(np.linalg.norm(a_array) * np.linalg.norm(b_array))
    if norm_product == 0.0:
        return 0.0
    similarity = float(np.dot(a_array, b_array)) / norm_product
    return min(1.0, max(-1.0, similarity))


def ema_update(previous: TraitVector, observed: TraitVector, rate: float) -> TraitVector:
    """
    Update the estimated character type of the other participant by an exponential moving average.

    :param previous: The estimate before the observation.
    :param observed: The character type the latest observed move expresses.
    :param rate: How much weight the observation gets, 0 keeps the previous estimate and 1 replaces it.
    :return: The updated estimate.
    """
    if not (0.0 <= rate <= 1.0):
        raise UpdateRateOutOfRange(rate)
    if rate == 0.0:
        return previous
    if rate == 1.0 or previous == observed:
        return observed
    blended = (1.0 - rate) * previous.as_array() + rate * observed.as_array()
    return TraitVector.from_sequence(clamp_components(blended))


CharacterUpdate = Callable[[TraitVector, TraitVector, float], TraitVector]
"""
Signature of the update applied to the other character type when a move is observed.
"""
