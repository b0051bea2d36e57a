"""
This module defines the custom exception types used by the estimation package.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..utils import DataclassException


@dataclass
class EstimationError(DataclassException):
    """
    An error raised while back-engineering SelfMonitor weights from observed choices.
    """


@dataclass
class NoInformativeObservations(EstimationError):
    """
    Raised when no observation offers more than one candidate, so the choices carry no information about the weights.
    """

    message: str = "No observation has two or more candidate moves."


@dataclass
class InvalidObservation(EstimationError):
    """
    Raised when an observed choice is malformed.
    """

    reason: str

    def __post_init__(self):
        self.message = f"Invalid observation: {self.reason}"
        super().__post_init__()


@dataclass
class InvalidGridStep(EstimationError):
    """
    Raised when the step of the simplex grid is not in (0, 0.5].
    """

    step: float

    def __post_init__(self):
        self.message = f"The grid step must lie in (0, 0.5], got {self.step}."
        super().__post_init__()


@dataclass
class InvalidPrior(EstimationError):
    """
    Raised when the concentration of the log-prior on the weights is below 1.
    """

    concentration: float

    def __post_init__(self):
        self.message = f"The prior concentration must be >= 1, got {self.concentration}."
        super().__post_init__()
