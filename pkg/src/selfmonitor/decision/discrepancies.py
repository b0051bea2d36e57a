"""
Published bakery scores that do not follow from their own inputs.

Two of the printed scores of the bakery regimes cannot be reproduced from the stated character vectors, conformities
and weights, while every other printed score reproduces to 2e-4. The engine uses the recomputed values.
"""

from __future__ import annotations

from dataclasses import dataclass

from typing_extensions import Tuple


@dataclass(frozen=True)
class PrintedValueDiscrepancy:
    regime: int
    """
    The bakery weight/character regime, 1 to 3.
    """
    move_index: int
    """
    The zero based index of the move in the baker's move space.
    """
    printed: float
    recomputed: float


KNOWN_SCORE_DISCREPANCIES: Tuple[PrintedValueDiscrepancy, ...] = (
    PrintedValueDiscrepancy(regime=1, move_index=1, printed=-0.7080, recomputed=-0.6694),
    PrintedValueDiscrepancy(regime=2, move_index=3, printed=0.6946, recomputed=0.6359),
)
