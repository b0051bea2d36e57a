"""
This module defines the custom exception types used by the dialogue simulation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..utils import DataclassException


@dataclass
class SimulationError(DataclassException):
    """
    An error raised while setting up or running a simulated dialogue.
    """


@dataclass
class InvalidScenario(SimulationError):
    """
    Raised when a scenario violates one of its structural constraints.
    """

    reason: str

    def __post_init__(self):
        self.message = f"Invalid scenario: {self.reason}"
        super().__post_init__()


@dataclass
class UnknownAgent(SimulationError):
    name: str

    def __post_init__(self):
        self.message = f"No agent named '{self.name}' takes part in the scenario."
        super().__post_init__()


@dataclass
class ReplayMismatch(SimulationError):
    """
    Raised when replaying a trace does not reproduce what the trace recorded.
    """

    turn: int
    field_name: str
    """
    The recorded value that differs.
    """

    def __post_init__(self):
        self.message = f"Replay differs from the trace at turn {self.turn} in '{self.field_name}'."
        super().__post_init__()
