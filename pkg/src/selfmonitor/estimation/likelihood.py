from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp
from typing_extensions import Sequence, List, Optional

from .failures import InvalidPrior
from .observation import Observation
from ..decision import Weights

GRID_CHUNK_SIZE = 256
"""
Number of weight vectors evaluated at once, bounds the memory of the utility tensor.
"""


@dataclass
class ObservationBatch:
    """
    Observations with the same number of candidates stacked into arrays.
    """

    factors: np.ndarray
    """
    Shape (observations, candidates, 3).
    """
    chosen: np.ndarray
    """
    Shape (observations,).
    """


def batch_observations(observations: Sequence[Observation]) -> List[ObservationBatch]:
    """
    Group observations by their number of candidates, in increasing order of that number.
    """
    groups = defaultdict(list)
    for observation in observations:
        groups[len(observation.factors)].append(observation)
    return [
        ObservationBatch(
            factors=np.stack([o.factor_matrix() for o in groups[size]]),
            chosen=np.array([o.chosen for o in groups[size]], dtype=int),
        )
        for size in sorted(groups)
    ]


def log_likelihood_on_grid(
    batches: Sequence[ObservationBatch], weight_grid: np.ndarray
) -> np.ndarray:
    """
    Evaluate the choice log-likelihood for many weight vectors at once.

    :param batches: The batched observations.
    :param weight_grid: Weight vectors of shape (points, 3), not required to be on the simplex.
    :return: The log-likelihood per weight vector.
    """
    weight_grid = np.atleast_2d(np.asarray(weight_grid, dtype=float))
    totals = np.zeros(len(weight_grid))
    for start in range(0, len(weight_grid), GRID_CHUNK_SIZE):
        chunk = weight_grid[start : start + GRID_CHUNK_SIZE]
        for batch in batches:
            utilities = batch.factors @ chunk.T
            chosen_utilities = np.take_along_axis(
                utilities, batch.chosen[:, None, None], axis=1
            )[:, 0, :]
            totals[start : start + len(chunk)] += (
                chosen_utilities - logsumexp(utilities, axis=1)
            ).sum(axis=0)
    return totals


def check_prior(concentration: Optional[float]):
    if concentration is not None and not concentration >= 1.0:
        raise InvalidPrior(concentration)


def log_prior(weight_grid: np.ndarray, concentration: Optional[float]) -> np.ndarray:
    """
    The Dirichlet-style log-prior (concentration - 1) * sum(log w), zero when no concentration is given.
    """
    weight_grid = np.atleast_2d(np.asarray(weight_grid, dtype=float))
    if concentration is None or concentration == 1.0:
        return np.zeros(len(weight_grid))
    with np.errstate(divide="ignore"):
        return (concentration - 1.0) * np.log(np.clip(weight_grid, 0.0, None)).sum(axis=1)


def log_likelihood(observations: Sequence[Observation], w: Weights) -> float:
    """
    The log-probability of the observed choices when moves are chosen by the softmax of their scores.

    :param observations: The observed choices.
    :param w: The SelfMonitor weights.
    :return: The sum over observations of the log-probability of the chosen move.
    """
    return float(log_likelihood_on_grid(batch_observations(observations), w.as_array())[0])


def objective(
    observations: Sequence[Observation],
    w: Weights,
    concentration: Optional[float] = None,
) -> float:
    """
    The fitting objective: the log-likelihood plus the optional log-prior.
    """
    check_prior(concentration)
    return log_likelihood(observations, w) + float(log_prior(w.as_array(), concentration)[0])


def log_likelihood_gradient(
    batches: Sequence[ObservationBatch],
    weights: np.ndarray,
    concentration: Optional[float] = None,
) -> np.ndarray:
    """
    The gradient of the objective with respect to the unconstrained weight vector.
    """
    gradient = np.zeros(3)
    for batch in batches:
        utilities = batch.factors @ weights
        utilities -= utilities.max(axis=1, keepdims=True)
        probabilities = np.exp(utilities)
        probabilities /= probabilities.sum(axis=1, keepdims=True)
        chosen_rows = batch.factors[np.arange(len(batch.chosen)), batch.chosen]
        expected_rows = np.einsum("nk,nkf->nf", probabilities, batch.factors)
        gradient += (chosen_rows - expected_rows).sum(axis=0)
    if concentration is not None and concentration != 1.0:
        gradient += (concentration - 1.0) / np.clip(weights, 1e-12, None)
    return gradient
