from __future__ import annotations

import math

import numpy as np
from typing_extensions import Sequence, List

from .failures import EmptyMoveSpace, NonFiniteScore, ConvProbOutOfRange
from .move_space import MoveCandidate, DecisionFactors, ScoredMove, ScoredMoveSpace
from .weights import Weights
from ..persona import TraitVector, cosine_similarity


def decision_factors(
    move: MoveCandidate,
    self_char: TraitVector,
    other_char: TraitVector,
    conv_prob: float,
) -> DecisionFactors:
    """
    Compute the row of the decision factor matrix for one move.

    :param move: The move candidate.
    :param self_char: The self character type.
    :param other_char: The current estimate of the other's character type.
    :param conv_prob: The probability of the active conversational type.
    :return: The similarity to the self character type, the similarity to the other character type and the
        conformity weighted by the conv-prob.
    """
    if not (math.isfinite(conv_prob) and 0.0 <= conv_prob <= 1.0):
        raise ConvProbOutOfRange(conv_prob)
    return DecisionFactors(
        s_self=cosine_similarity(move.vector, self_char),
        s_other=cosine_similarity(move.vector, other_char),
        conf_mass=move.conformity * conv_prob,
    )


def weighted_score(factors: DecisionFactors, coefficients: Sequence[float]) -> float:
    """
    The linear score of a factor row without any constraint on the coefficients.
    """
    s_self, s_other, conf_mass = factors.as_tuple()
    alpha, beta, gamma = coefficients
    return alpha * s_self + beta * s_other + gamma * conf_mass


def score_move(factors: DecisionFactors, w: Weights) -> float:
    """
    :return: The score rho of a move under the SelfMonitor weights.
    """
    return weighted_score(factors, w.as_tuple())


def softmax(scores: Sequence[float]) -> List[float]:
    """
    Turn scores into a probability distribution, preserving their order.
    """
    if len(scores) == 0:
        raise EmptyMoveSpace()
    for index, score in enumerate(scores):
        if not math.isfinite(score):
            raise NonFiniteScore(index, score)
    values = np.asarray(scores, dtype=float)
    exponentials = np.exp(values - values.max())
    return (exponentials / exponentials.sum()).tolist()


def score_space(
    moves: Sequence[MoveCandidate],
    self_char: TraitVector,
    other_char: TraitVector,
    conv_prob: float,
    w: Weights,
) -> ScoredMoveSpace:
    """
    Score every move of a move space and turn the scores into selection probabilities.

    :return: The scored move space in the order of the given moves.
    """
    if not moves:
        raise EmptyMoveSpace()
    factors = [decision_factors(m, self_char, other_char, conv_prob) for m in moves]
    rhos = [score_move(f, w) for f in factors]
    probabilities = softmax(rhos)
    return ScoredMoveSpace(
        tuple(
            ScoredMove(candidate=m, factors=f, rho=r, probability=p)
            for m, f, r, p in zip(moves, factors, rhos, probabilities)
        )
    )
