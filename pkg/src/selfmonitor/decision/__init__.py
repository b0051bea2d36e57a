from .weights import Weights, SIMPLEX_TOLERANCE
from .move_space import (
    MoveCandidate,
    DecisionFactors,
    ScoredMove,
    ScoredMoveSpace,
    format_decimal,
    render_table,
)
from .scoring import decision_factors, weighted_score, score_move, softmax, score_space
from .selection import SelectionPolicy, select_argmax, select_sample
from .self_monitor import SelfMonitor
from .discrepancies import KNOWN_SCORE_DISCREPANCIES, PrintedValueDiscrepancy
from .conformity import resolve_conformity
