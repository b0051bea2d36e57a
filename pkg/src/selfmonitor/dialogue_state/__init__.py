from .gameboard import MoveRecord, Gameboard
from .information_state import (
    DEFAULT_UPDATE_RATE,
    PrivateState,
    InformationState,
    init_information_state,
    integrate_move,
    record_own_move,
    rollback_to_tmp,
    goals_reached,
    to_canonical_text,
    from_canonical_text,
)
