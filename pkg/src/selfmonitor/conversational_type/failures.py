"""
This module defines the custom exception types used by the conversational_type package.
"""

from __future__ import annotations

from dataclasses import dataclass

from typing_extensions import Tuple

from ..utils import DataclassException


@dataclass
class ConversationalTypeError(DataclassException):
    """
    An error related to a conversational type or the belief over conversational types.
    """


@dataclass
class UnknownState(ConversationalTypeError):
    """
    Raised when a state is not a member of the conversational type's states.
    """

    conversational_type: str
    state: str

    def __post_init__(self):
        self.message = (
            f"State '{self.state}' is not a state of conversational type '{self.conversational_type}'."
        )
        super().__post_init__()


@dataclass
class InvalidConversationalType(ConversationalTypeError):
    """
    Raised when the structure of a conversational type is inconsistent.
    """

    conversational_type: str
    reason: str = None

    def __post_init__(self):
        self.message = f"Conversational type '{self.conversational_type}' is invalid: {self.reason}"
        super().__post_init__()


@dataclass
class NonDeterministicTransition(InvalidConversationalType):
    """
    Raised when two transitions leave the same state with the same move label.
    """

    source: str = None
    label: str = None

    def __post_init__(self):
        self.reason = f"more than one transition for ('{self.source}', '{self.label}')."
        super().__post_init__()


@dataclass
class ConformityOutOfRange(InvalidConversationalType):
    """
    Raised when a conformity override lies outside of [-1, 1].
    """

    label: str = None
    value: float = None

    def __post_init__(self):
        self.reason = f"conformity of '{self.label}' is {self.value}, which is outside of [-1, 1]."
        super().__post_init__()


@dataclass
class InvalidBelief(ConversationalTypeError):
    """
    Raised when a belief over conversational types is not a probability distribution over its candidates.
    """

    reason: str = None

    def __post_init__(self):
        self.message = f"Invalid conversational type belief: {self.reason}"
        super().__post_init__()


@dataclass
class StateCountMismatch(InvalidBelief):
    """
    Raised when the number of current states does not match the number of candidates.
    """

    states: Tuple[str, ...] = ()
    candidates: int = 0

    def __post_init__(self):
        self.reason = f"got {len(self.states)} current states for {self.candidates} candidates."
        super().__post_init__()
