from __future__ import annotations

from enum import Enum

import numpy as np

from .move_space import ScoredMoveSpace
from ..utils import first_index_of_max, check_seed


class SelectionPolicy(Enum):
    """
    How a move is selected from the distribution over a scored move space.
    """

    ARGMAX = "argmax"
    """
    The most probable move, ties are broken by the lowest index.
    """
    SAMPLE = "sample"
    """
    A move drawn from the distribution with a seeded generator.
    """


def select_argmax(space: ScoredMoveSpace) -> int:
    """
    :return: The index of the most probable move, the lowest index on ties.
    """
    return first_index_of_max(space.probabilities)


def select_sample(space: ScoredMoveSpace, seed: int) -> int:
    """
    Draw a move index from the distribution of the scored move space.

    The draw uses numpy's PCG64 generator seeded with `seed` and inverts the cumulative distribution at one uniform
    variate, so the same space and seed always give the same index.
    """
    generator = np.random.default_rng(check_seed(seed))
    cumulative = np.cumsum(space.probabilities)
    index = int(np.searchsorted(cumulative, generator.random(), side="right"))
    return min(index, len(space) - 1)
