from __future__ import annotations

from dataclasses import dataclass

from typing_extensions import Sequence, Optional

from .move_space import MoveCandidate, ScoredMoveSpace
from .scoring import score_space
from .failures import MissingSeed
from .selection import SelectionPolicy, select_argmax, select_sample
from .weights import Weights
from ..persona import TraitVector


@dataclass(frozen=True)
class SelfMonitor:
    """
    The mechanism of a dialogue participant that trades off its own character type, the other's character type and
    the conversational type when choosing its next move.
    """

    weights: Weights
    policy: SelectionPolicy = SelectionPolicy.ARGMAX

    def evaluate(
        self,
        moves: Sequence[MoveCandidate],
        self_char: TraitVector,
        other_char: TraitVector,
        conv_prob: float,
    ) -> ScoredMoveSpace:
        return score_space(moves, self_char, other_char, conv_prob, self.weights)

    def select(self, space: ScoredMoveSpace, seed: Optional[int] = None) -> int:
        """
        :param space: The scored move space.
        :param seed: The seed of the draw, required by the sampling policy.
        :return: The index of the selected move.
        """
        if self.policy is SelectionPolicy.SAMPLE:
            if seed is None:
                raise MissingSeed()
            return select_sample(space, seed)
        return select_argmax(space)
