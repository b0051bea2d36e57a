from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from typing_extensions import Tuple, Sequence, Dict, Any, Self

from .conversational_type import ConversationalType, conformity
from .failures import InvalidBelief, StateCountMismatch
from ..adapters.json_serializer import SubclassJSONSerializer
from ..utils import sums_to_one, first_index_of_max

MIN_LIKELIHOOD = 0.01
"""
Lower clamp of the conformity likelihood, a candidate never becomes impossible through evidence alone.
"""

MAX_LIKELIHOOD = 1.0


def conformity_likelihood(conformity_value: float) -> float:
    """
    Map a conformity in [-1, 1] monotonically to a likelihood in [0.01, 1].
    """
    return min(MAX_LIKELIHOOD, max(MIN_LIKELIHOOD, (conformity_value + 1.0) / 2.0))


@dataclass(frozen=True)
class Hypothesis(SubclassJSONSerializer):
    """
    One candidate conversational type together with its probability.
    """

    conversational_type: ConversationalType
    probability: float

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "conversational_type": self.conversational_type.to_json(),
            "probability": self.probability,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            conversational_type=ConversationalType._from_json(
                data["conversational_type"]
            ),
            probability=data["probability"],
        )


@dataclass(frozen=True)
class ConvTypeBelief(SubclassJSONSerializer):
    """
    The probabilistic conjecture of a participant about which conversational type classifies the interaction.

    The participant acts according to the active candidate, and the conv-prob is that candidate's mass.
    """

    candidates: Tuple[Hypothesis, ...]
    active_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        if not self.candidates:
            raise InvalidBelief("there are no candidates.")
        for hypothesis in self.candidates:
            if not (0.0 <= hypothesis.probability <= 1.0) or not math.isfinite(
                hypothesis.probability
            ):
                raise InvalidBelief(
                    f"probability {hypothesis.probability} of "
                    f"'{hypothesis.conversational_type.name}' is outside of [0, 1]."
                )
        if not sums_to_one(self.probabilities):
            raise InvalidBelief(
                f"probabilities {list(self.probabilities)} do not sum to 1."
            )
        if not 0 <= self.active_index < len(self.candidates):
            raise InvalidBelief(f"active index {self.active_index} is out of range.")

    @classmethod
    def from_priors(
        cls,
        types: Sequence[ConversationalType],
        priors: Sequence[float],
        active_index: int = 0,
    ) -> ConvTypeBelief:
        return cls(
            tuple(Hypothesis(ct, float(p)) for ct, p in zip(types, priors, strict=True)),
            active_index,
        )

    @classmethod
    def certain(cls, ct: ConversationalType) -> ConvTypeBelief:
        """
        :return: A belief that puts all mass on one conversational type.
        """
        return cls((Hypothesis(ct, 1.0),))

    @property
    def types(self) -> Tuple[ConversationalType, ...]:
        return tuple(h.conversational_type for h in self.candidates)

    @property
    def probabilities(self) -> Tuple[float, ...]:
        return tuple(h.probability for h in self.candidates)

    @property
    def active(self) -> ConversationalType:
        return self.candidates[self.active_index].conversational_type

    @property
    def conv_prob(self) -> float:
        """
        The probability that the active conversational type classifies the interaction.
        """
        return self.candidates[self.active_index].probability

    @property
    def most_probable_index(self) -> int:
        return first_index_of_max(self.probabilities)

    def initial_states(self) -> Tuple[str, ...]:
        return tuple(ct.init_state for ct in self.types)

    def to_json(self) -> Dict[str, Any]:
        return {
            **super().to_json(),
            "candidates": [h.to_json() for h in self.candidates],
            "active_index": self.active_index,
        }

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs) -> Self:
        return cls(
            tuple(Hypothesis._from_json(h) for h in data["candidates"]),
            data["active_index"],
        )


def bayes_update(
    belief: ConvTypeBelief, move_label: str, current_states: Sequence[str]
) -> ConvTypeBelief:
    """
    Update the belief over conversational types with an observed move.

    Each candidate's probability is multiplied by the likelihood of the move's conformity under that candidate, then
    the distribution is renormalized.

    :param belief: The prior belief.
    :param move_label: The label of the observed move.
    :param current_states: The current state of every candidate, in candidate order.
    :return: The posterior belief with the same active candidate.
    """
    if len(current_states) != len(belief.candidates):
        raise StateCountMismatch(states=tuple(current_states), candidates=len(belief.candidates))
    likelihoods = np.array(
        [
            conformity_likelihood(conformity(ct, move_label, state))
            for ct, state in zip(belief.types, current_states)
        ]
    )
    prior = np.array(belief.probabilities)
    unnormalized = prior * likelihoods
    if np.all(likelihoods == likelihoods[0]):
        posterior = prior
    else:
        posterior = unnormalized / unnormalized.sum()
    return ConvTypeBelief(
        tuple(
            Hypothesis(h.conversational_type, float(p))
            for h, p in zip(belief.candidates, posterior)
        ),
        belief.active_index,
    )
