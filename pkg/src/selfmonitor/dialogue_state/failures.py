"""
This module defines the custom exception types used by the dialogue_state package.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..utils import DataclassException


@dataclass
class DialogueStateError(DataclassException):
    """
    An error related to the information state of a dialogue participant.
    """


@dataclass
class NoSnapshotAvailable(DialogueStateError):
    """
    Raised when rolling back an information state that has no backup of a previous private state.
    """

    message: str = "There is no previous private state to roll back to."


@dataclass
class InvalidMoveRecord(DialogueStateError):
    """
    Raised when a move record cannot be integrated into an information state.
    """

    label: str
    reason: str

    def __post_init__(self):
        self.message = f"Move '{self.label}' cannot be integrated: {self.reason}"
        super().__post_init__()


@dataclass
class InvalidGameboard(DialogueStateError):
    """
    Raised when the public part of an information state is inconsistent.
    """

    reason: str

    def __post_init__(self):
        self.message = f"Invalid dialogue gameboard: {self.reason}"
        super().__post_init__()
