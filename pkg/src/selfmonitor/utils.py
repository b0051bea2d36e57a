from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from typing_extensions import Iterable, Sequence


@dataclass
class DataclassException(Exception):
    """
    A base exception class for dataclass-based exceptions.
    The way this is used is by inheriting from it and setting the `message` field in the __post_init__ method,
    then calling the super().__post_init__() method.
    """

    message: str = field(kw_only=True, default=None)

    def __post_init__(self):
        super().__init__(self.message)


def get_full_class_name(cls):
    """
    Returns the full name of a class, including the module name.

    :param cls: The class.
    :return: The full name of the class
    """
    return cls.__module__ + "." + cls.__name__


def sums_to_one(values: Iterable[float], tolerance: float = 1e-9) -> bool:
    """
    :param values: The values to check.
    :param tolerance: The absolute tolerance on the sum.
    :return: True if the values sum to 1 within the tolerance.
    """
    return abs(math.fsum(values) - 1.0) <= tolerance


def first_index_of_max(values: Sequence[float]) -> int:
    """
    :param values: A nonempty sequence of values.
    :return: The index of the largest value, ties are broken by the lowest index.
    """
    best_index = 0
    for index, value in enumerate(values):
        if value > values[best_index]:
            best_index = index
    return best_index


@dataclass
class InvalidSeed(DataclassException):
    """
    Raised when a seed cannot seed numpy's generators.
    """

    seed: int

    def __post_init__(self):
        self.message = f"Seeds must be non-negative integers, got {self.seed!r}."
        super().__post_init__()


def check_seed(seed: int) -> int:
    """
    :param seed: A seed of a random generator.
    :return: The seed, if it is a non-negative integer.
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise InvalidSeed(seed)
    return int(seed)
