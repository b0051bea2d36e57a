"""
This module defines the custom exception types used by the decision package.
"""

from __future__ import annotations

from dataclasses import dataclass

from typing_extensions import Tuple

from ..utils import DataclassException


@dataclass
class DecisionError(DataclassException):
    """
    An error raised while scoring or selecting dialogue moves.
    """


@dataclass
class WeightsNotOnSimplex(DecisionError):
    """
    Raised when the SelfMonitor weights are negative or do not sum to 1.
    """

    weights: Tuple[float, float, float]

    def __post_init__(self):
        self.message = (
            f"Weights (alpha, beta, gamma) = {self.weights} violate the simplex constraint: "
            f"each must be >= 0 and alpha + beta + gamma must equal 1."
        )
        super().__post_init__()


@dataclass
class EmptyMoveSpace(DecisionError):
    """
    Raised when there is nothing to score or select from.
    """

    message: str = "The move space is empty."


@dataclass
class NonFiniteScore(DecisionError):
    """
    Raised when a score passed to the softmax is NaN or infinite.
    """

    index: int
    value: float

    def __post_init__(self):
        self.message = f"Score {self.index} is not finite ({self.value})."
        super().__post_init__()


@dataclass
class ConvProbOutOfRange(DecisionError):
    """
    Raised when the conv-prob is not a probability.
    """

    conv_prob: float

    def __post_init__(self):
        self.message = f"The conv-prob must lie in [0, 1], got {self.conv_prob}."
        super().__post_init__()


@dataclass
class InvalidMoveCandidate(DecisionError):
    """
    Raised when a move candidate is malformed.
    """

    label: str
    reason: str

    def __post_init__(self):
        self.message = f"Move candidate '{self.label}' is invalid: {self.reason}"
        super().__post_init__()


@dataclass
class InvalidScoredMoveSpace(DecisionError):
    """
    Raised when the probabilities of a scored move space do not form a distribution.
    """

    reason: str

    def __post_init__(self):
        self.message = f"Invalid scored move space: {self.reason}"
        super().__post_init__()


@dataclass
class MissingSeed(DecisionError):
    """
    Raised when a move should be sampled but no seed was given.
    """

    message: str = "Sampling a move needs a seed."
