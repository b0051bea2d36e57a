from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from typing_extensions import Sequence, Optional, Tuple, List, Dict, Any, Self

from .failures import NoInformativeObservations, InvalidGridStep, EstimationError
from .likelihood import (
    batch_observations,
    log_likelihood_on_grid,
    log_likelihood_gradient,
    log_prior,
    check_prior,
    ObservationBatch,
)
from .observation import Observation
from ..adapters.json_serializer import SubclassJSONSerializer
from ..decision import Weights

logger = logging.getLogger(__name__)

NEAR_TIE_TOLERANCE = 1e-9
"""
Grid values closer than this to the best value count as competing optima.
"""
EXACT_TIE_TOLERANCE = 1e-12
"""
Grid values closer than this to the best value are ties, resolved by the smallest (alpha, beta).
"""
WEIGHT_SHIFT_THRESHOLD = 0.3
"""
L1 distance between the weights of consecutive windows above which a weight shift is reported.
"""


class FitMethod(str, Enum):
    GRID = "grid"
    GRADIENT = "gradient"


@dataclass(frozen=True)
class FitResult(SubclassJSONSerializer):
    """
    The SelfMonitor weights that best explain a set of observed choices.
    """

    weights: Weights
    log_likelihood: float
    """
    The log-likelihood of the observations at the weights.
    """
    iterations: int
    converged: bool
    identifiable: bool
    """
    False if clearly different weights explain the observations equally well.
    """
    method: FitMethod = FitMethod.GRID
    objective: Optional[float] = None
    """
    The maximized objective, the log-likelihood plus the log-prior. Equal to the log-likelihood without prior.
    """

    def __post_init__(self):
        if self.objective is None:
            object.__setattr__(self, "objective", self.log_likelihood)

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "weights": list(self.weights.as_tuple()),
            "log_likelihood": self.log_likelihood,
            "iterations": self.iterations,
            "converged": self.converged,
            "identifiable": self.identifiable,
            "method": self.method.value,
            "objective": self.objective,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            weights=Weights.from_sequence(data["weights"]),
            log_likelihood=data["log_likelihood"],
            iterations=data["iterations"],
            converged=data["converged"],
            identifiable=data["identifiable"],
            method=FitMethod(data["method"]),
            objective=data["objective"],
        )


@dataclass(frozen=True)
class SimplexGrid:
    """
    The points (alpha, beta, 1 - alpha - beta) with alpha and beta on a regular step, alpha varying slowest.
    """

    step: float
    indices: np.ndarray = field(repr=False)
    """
    Integer grid coordinates (i, j) of shape (points, 2).
    """
    points: np.ndarray = field(repr=False)
    """
    The weight vectors of shape (points, 3).
    """

    @classmethod
    def with_step(cls, step: float) -> SimplexGrid:
        if not (math.isfinite(step) and 0.0 < step <= 0.5):
            raise InvalidGridStep(step)
        count = int(math.floor(1.0 / step + 1e-9))
        indices = [
            (i, j)
            for i in range(count + 1)
            for j in range(count + 1)
            if (i + j) * step <= 1.0 + 1e-9
        ]
        indices = np.array(indices, dtype=int)
        alpha = indices[:, 0] * step
        beta = indices[:, 1] * step
        gamma = np.clip(1.0 - alpha - beta, 0.0, None)
        return cls(step, indices, np.column_stack([alpha, beta, gamma]))

    def __len__(self):
        return len(self.points)

    def adjacent(self, first: int, second: int) -> bool:
        """
        :return: True if the two grid points are equal or neighbours on the triangular grid.
        """
        di, dj = self.indices[second] - self.indices[first]
        return abs(di) <= 1 and abs(dj) <= 1 and abs(di + dj) <= 1

    def weights_at(self, index: int) -> Weights:
        alpha, beta, gamma = (float(v) for v in self.points[index])
        return Weights.normalized(alpha, beta, gamma)


def simplex_grid(step: float) -> SimplexGrid:
    return SimplexGrid.with_step(step)


def project_onto_simplex(values: np.ndarray) -> np.ndarray:
    """
    Euclidean projection of a vector onto the probability simplex.

    :param values: The vector to project.
    :return: The closest vector with non-negative components that sum to 1.
    """
    values = np.asarray(values, dtype=float)
    sorted_values = np.sort(values)[::-1]
    cumulative = np.cumsum(sorted_values) - 1.0
    positions = np.arange(1, len(values) + 1)
    support = np.nonzero(sorted_values - cumulative / positions > 0)[0][-1]
    threshold = cumulative[support] / (support + 1)
    return np.maximum(values - threshold, 0.0)


def _informative_count(observations: Sequence[Observation]) -> int:
    count = sum(1 for o in observations if o.is_informative)
    if count == 0:
        raise NoInformativeObservations()
    return count


def _objective_values(
    batches: Sequence[ObservationBatch],
    points: np.ndarray,
    dirichlet_concentration: Optional[float],
) -> Tuple[np.ndarray, np.ndarray]:
    likelihoods = log_likelihood_on_grid(batches, points)
    return likelihoods, likelihoods + log_prior(points, dirichlet_concentration)


def fit_grid(
    observations: Sequence[Observation],
    step: float = 0.02,
    dirichlet_concentration: Optional[float] = None,
) -> FitResult:
    """
    Find the weights that maximize the likelihood of the observed choices by exhaustive search on a simplex grid.

    :param observations: The observed choices.
    :param step: The grid step of alpha and beta.
    :param dirichlet_concentration: When given, the log-prior (concentration - 1) * sum(log w) is added to the
        log-likelihood.
    :return: The best grid point. Ties go to the smallest (alpha, beta).
    """
    grid = simplex_grid(step)
    _informative_count(observations)
    check_prior(dirichlet_concentration)
    batches = batch_observations(observations)
    likelihoods, objectives = _objective_values(batches, grid.points, dirichlet_concentration)

    best_value = objectives.max()
    best = int(np.nonzero(objectives >= best_value - EXACT_TIE_TOLERANCE)[0][0])
    competitors = np.nonzero(objectives >= objectives[best] - NEAR_TIE_TOLERANCE)[0]
    identifiable = all(grid.adjacent(best, int(other)) for other in competitors)

    weights = grid.weights_at(best)
    likelihood = float(log_likelihood_on_grid(batches, weights.as_array())[0])
    objective = likelihood + float(log_prior(weights.as_array(), dirichlet_concentration)[0])
    logger.info(
        f"Grid fit over {len(grid)} points: weights {weights.as_tuple()}, "
        f"log-likelihood {likelihood:.6f}, identifiable {identifiable}."
    )
    return FitResult(
        weights=weights,
        log_likelihood=likelihood,
        iterations=len(grid),
        converged=True,
        identifiable=identifiable,
        method=FitMethod.GRID,
        objective=objective,
    )


def fit_gradient(
    observations: Sequence[Observation],
    max_iterations: int = 1000,
    tolerance: float = 1e-8,
    dirichlet_concentration: Optional[float] = None,
    initial_step: float = 0.1,
) -> FitResult:
    """
    Refine the grid fit by projected gradient ascent on the simplex.

    The ascent starts at the optimum of a grid fit with step `initial_step` and uses the fixed step size
    1 / (number of informative observations), halved whenever a step does not improve the objective.

    :param observations: The observed choices.
    :param max_iterations: The maximum number of gradient steps.
    :param tolerance: The ascent has converged once the projected step is shorter than this.
    :param dirichlet_concentration: As in fit_grid.
    :param initial_step: The grid step of the initializing grid fit.
    :return: The refined fit, never worse than the initializer.
    """
    informative = _informative_count(observations)
    initial = fit_grid(observations, initial_step, dirichlet_concentration)
    if max_iterations <= 0:
        return FitResult(
            weights=initial.weights,
            log_likelihood=initial.log_likelihood,
            iterations=0,
            converged=False,
            identifiable=initial.identifiable,
            method=FitMethod.GRADIENT,
            objective=initial.objective,
        )

    batches = batch_observations(observations)

    def objective_at(w: np.ndarray) -> float:
        return float(_objective_values(batches, w, dirichlet_concentration)[1][0])

    current = initial.weights.as_array()
    current_value = objective_at(current)
    step_size = 1.0 / informative
    converged = False
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        gradient = log_likelihood_gradient(batches, current, dirichlet_concentration)
        candidate = project_onto_simplex(current + step_size * gradient)
        if np.linalg.norm(candidate - current) < tolerance:
            converged = True
            break
        candidate_value = objective_at(candidate)
        if candidate_value > current_value:
            current, current_value = candidate, candidate_value
        else:
            step_size /= 2.0

    current = np.clip(current, 0.0, None)
    weights = Weights.normalized(*(float(v) for v in current / current.sum()))
    likelihood = float(log_likelihood_on_grid(batches, weights.as_array())[0])
    objective = likelihood + float(log_prior(weights.as_array(), dirichlet_concentration)[0])
    if objective < initial.objective:
        weights, likelihood, objective = initial.weights, initial.log_likelihood, initial.objective
    if not converged:
        logger.warning(
            f"Projected gradient ascent did not converge within {max_iterations} iterations."
        )
    logger.info(
        f"Gradient fit after {iterations} iterations: weights {weights.as_tuple()}, "
        f"log-likelihood {likelihood:.6f}."
    )
    return FitResult(
        weights=weights,
        log_likelihood=likelihood,
        iterations=iterations,
        converged=converged,
        identifiable=initial.identifiable,
        method=FitMethod.GRADIENT,
        objective=objective,
    )


@dataclass(frozen=True)
class WindowFit(SubclassJSONSerializer):
    """
    The grid fit of one window of consecutive observations.
    """

    start: int
    """
    Index of the first observation in the window.
    """
    stop: int
    """
    Index one past the last observation in the window.
    """
    fit: Optional[FitResult]
    """
    None if the window holds no informative observation.
    """
    shift_from_previous: Optional[float] = None
    """
    L1 distance to the weights of the previous fitted window.
    """

    @property
    def weight_shift(self) -> bool:
        return self.shift_from_previous is not None and self.shift_from_previous > WEIGHT_SHIFT_THRESHOLD

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "start": self.start,
            "stop": self.stop,
            "fit": None if self.fit is None else self.fit.to_json(),
            "shift_from_previous": self.shift_from_previous,
            "weight_shift": self.weight_shift,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            start=data["start"],
            stop=data["stop"],
            fit=None if data["fit"] is None else FitResult.from_json(data["fit"]),
            shift_from_previous=data["shift_from_previous"],
        )


def detect_weight_shift(
    observations: Sequence[Observation], window: int, step: float = 0.02
) -> List[WindowFit]:
    """
    Refit disjoint windows of consecutive observations and compare the weights of consecutive fitted windows.
    A shift is only reported, its cause is not interpreted.

    :param observations: The observed choices in dialogue order.
    :param window: The number of observations per window, the last window may be shorter.
    :param step: The grid step of each window fit.
    :return: One entry per window.
    """
    if window < 1:
        raise EstimationError(message=f"The window size must be positive, got {window}.")
    _informative_count(observations)
    windows = []
    previous: Optional[FitResult] = None
    for start in range(0, len(observations), window):
        chunk = observations[start : start + window]
        if not any(o.is_informative for o in chunk):
            windows.append(WindowFit(start, start + len(chunk), None))
            continue
        fit = fit_grid(chunk, step)
        shift = None if previous is None else fit.weights.l1_distance(previous.weights)
        windows.append(WindowFit(start, start + len(chunk), fit, shift))
        if shift is not None and shift > WEIGHT_SHIFT_THRESHOLD:
            logger.info(
                f"Weight shift of {shift:.3f} between the windows ending and starting at observation {start}."
            )
        previous = fit
    return windows
