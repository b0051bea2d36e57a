"""
Synthetic choice data for checking that the weight estimators recover the weights that generated the choices.

The factor rows are those of the baker's reply to "2 croissants" in the bakery dialogue, with the baker's self
character of the first weight regime.
"""

from __future__ import annotations

import numpy as np
from typing_extensions import List, Tuple

from .failures import EstimationError
from .observation import Observation
from ..decision import MoveCandidate, Weights, decision_factors, softmax
from ..persona import TraitVector
from ..utils import check_seed

BAKERY_SELF_CHARACTER = TraitVector(0.0, 0.3, 0.0, 0.0, 0.5)
"""
The baker's character: slightly conscientious, relatively high neuroticism.
"""
BAKERY_OTHER_CHARACTER = TraitVector(0.0, 0.0, -0.1, -0.4, 0.2)
"""
The baker's estimate of the customer after hearing "2 croissants".
"""
BAKERY_CONV_PROB = 0.98
BAKERY_WEIGHTS = Weights(0.1, 0.1, 0.8)

BAKERY_REPLIES: Tuple[MoveCandidate, ...] = (
    MoveCandidate("price-quote", "1.90", TraitVector(0.0, 0.0, -0.1, -0.4, 0.2), 0.8),
    MoveCandidate(
        "eject-customer",
        "Get out of the bakery, you're not wearing a mask.",
        TraitVector(0.3, -0.5, 0.0, -0.7, 0.8),
        -1.0,
    ),
    MoveCandidate(
        "request-politeness", "Please would be nice.", TraitVector(0.2, 0.0, 0.3, 0.7, -0.2), 0.3
    ),
    MoveCandidate(
        "price-quote-polite",
        "1.90 and please would be nice.",
        TraitVector(0.5, 0.6, 0.4, 0.7, -0.4),
        0.7,
    ),
)


def bakery_factor_rows() -> np.ndarray:
    """
    :return: The decision factor matrix of the baker's four replies, one row per reply.
    """
    return np.array(
        [
            decision_factors(
                move, BAKERY_SELF_CHARACTER, BAKERY_OTHER_CHARACTER, BAKERY_CONV_PROB
            ).as_tuple()
            for move in BAKERY_REPLIES
        ]
    )


def generate_synthetic_observations(
    planted: Weights, n: int, seed: int, jitter: float = 1.0
) -> List[Observation]:
    """
    Sample choices from the softmax of the scores under planted weights.

    Each observation perturbs the bakery factor rows by independent uniform noise in [-jitter, jitter] and clips them
    to [-1, 1], so that the weights are identifiable from the choices.

    :param planted: The weights that generate the choices.
    :param n: The number of observations.
    :param seed: The seed of the random generator.
    :param jitter: The half width of the uniform noise on every factor.
    :return: The observations, in sampling order.
    """
    if n < 0 or jitter < 0:
        raise EstimationError(message=f"Cannot sample {n} observations with jitter {jitter}.")
    rng = np.random.default_rng(check_seed(seed))
    base = bakery_factor_rows()
    observations = []
    for _ in range(n):
        rows = np.clip(base + rng.uniform(-jitter, jitter, size=base.shape), -1.0, 1.0)
        probabilities = softmax((rows @ planted.as_array()).tolist())
        chosen = int(rng.choice(len(rows), p=probabilities))
        observations.append(Observation.from_rows(rows.tolist(), chosen))
    return observations
