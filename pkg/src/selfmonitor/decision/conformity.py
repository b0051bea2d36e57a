from __future__ import annotations

import math

from typing_extensions import Optional

from .failures import InvalidMoveCandidate
from ..conversational_type import ConversationalType, conformity


def resolve_conformity(
    move_label: str,
    ct: ConversationalType,
    state: str,
    override: Optional[float] = None,
) -> float:
    """
    The conformity of a move as it enters a move space.

    :param move_label: The label of the move.
    :param ct: The active conversational type.
    :param state: The current state within the conversational type.
    :param override: A conformity authored for this very move, it takes precedence over the type's table.
    :return: The conformity in [-1, 1].
    """
    if override is None:
        return conformity(ct, move_label, state)
    ct.ensure_state(state)
    if not (math.isfinite(override) and -1.0 <= override <= 1.0):
        raise InvalidMoveCandidate(move_label, f"conformity {override} is outside of [-1, 1].")
    return float(override)
