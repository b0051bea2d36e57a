from .conversational_type import (
    Transition,
    AdvanceResult,
    ConversationalType,
    conformity,
    follow,
    advance,
    advance_all,
    is_final,
)
from .belief import Hypothesis, ConvTypeBelief, bayes_update, conformity_likelihood
