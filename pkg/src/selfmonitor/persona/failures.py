"""
This module defines the custom exception types used by the persona package.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..utils import DataclassException


@dataclass
class TraitVectorError(DataclassException):
    """
    Raised when a character type vector cannot be used.
    """


@dataclass
class WrongTraitDimension(TraitVectorError):
    """
    Raised when a trait vector does not have exactly five components.
    """

    dimension: int
    """
    The number of components that was given.
    """

    def __post_init__(self):
        self.message = f"A trait vector has 5 components [o, c, e, a, n], got {self.dimension}."
        super().__post_init__()


@dataclass
class TraitComponentOutOfRange(TraitVectorError):
    """
    Raised when a trait component lies outside of [-1, 1].
    """

    index: int
    """
    The position of the offending component in [o, c, e, a, n] order.
    """
    value: float
    """
    The offending value.
    """

    def __post_init__(self):
        self.message = f"Trait component {self.index} is {self.value}, which is outside of [-1, 1]."
        super().__post_init__()


@dataclass
class NonFiniteTraitComponent(TraitVectorError):
    """
    Raised when a trait component is NaN or infinite.
    """

    index: int
    value: float

    def __post_init__(self):
        self.message = f"Trait component {self.index} is not finite ({self.value})."
        super().__post_init__()


@dataclass
class UpdateRateOutOfRange(TraitVectorError):
    """
    Raised when the rate of the other character update is outside of [0, 1].
    """

    rate: float

    def __post_init__(self):
        self.message = f"The character update rate must lie in [0, 1], got {self.rate}."
        super().__post_init__()
