"""
The bakery dialogue: a customer orders two croissants and the baker considers four replies.

The three regimes differ in the baker's weights and self character.
"""

from __future__ import annotations

from selfmonitor.conversational_type import ConversationalType, ConvTypeBelief, Transition
from selfmonitor.decision import MoveCandidate, Weights
from selfmonitor.persona import TraitVector

CUSTOMER_CHARACTER = TraitVector(0.0, 0.0, -0.1, -0.4, 0.2)
CONV_PROB = 0.98

REGIME_1_SELF = TraitVector(0.0, 0.3, 0.0, 0.0, 0.5)
REGIME_1_WEIGHTS = Weights(0.1, 0.1, 0.8)
REGIME_1_RHO = [0.7646, -0.6694, 0.1201, 0.4727]
REGIME_1_PRINTED_RHO = [0.7646, -0.7080, 0.1201, 0.4727]
REGIME_1_PRINTED_PROBABILITIES = [0.3998, 0.0917, 0.2099, 0.2986]

REGIME_2_SELF = TraitVector(0.5, 0.7, 0.3, 0.8, -0.5)
REGIME_2_WEIGHTS = Weights(0.3, 0.1, 0.6)
REGIME_2_RHO = [0.3457, -0.7277, 0.3217, 0.6359]

REGIME_3_SELF = TraitVector(0.2, -0.3, 0.0, -0.5, 0.8)
REGIME_3_WEIGHTS = Weights(0.8, 0.1, 0.1)
REGIME_3_RHO = [0.8007, 0.7652, -0.5229, -0.5032]
REGIME_3_PRINTED_PROBABILITIES = [0.3996, 0.3856, 0.1064, 0.1085]

REGIMES = {
    1: (REGIME_1_SELF, REGIME_1_WEIGHTS),
    2: (REGIME_2_SELF, REGIME_2_WEIGHTS),
    3: (REGIME_3_SELF, REGIME_3_WEIGHTS),
}

BAKER_REPLIES = [
    MoveCandidate("price-quote", "1.90", TraitVector(0.0, 0.0, -0.1, -0.4, 0.2), 0.8),
    MoveCandidate(
        "eject-customer",
        "Get out of the bakery, you're not wearing a mask.",
        TraitVector(0.3, -0.5, 0.0, -0.7, 0.8),
        -1.0,
    ),
    MoveCandidate("request-politeness", "Please would be nice.", TraitVector(0.2, 0.0, 0.3, 0.7, -0.2), 0.3),
    MoveCandidate(
        "price-quote-polite", "1.90 and please would be nice.", TraitVector(0.5, 0.6, 0.4, 0.7, -0.4), 0.7
    ),
]


def bakery_type() -> ConversationalType:
    return ConversationalType(
        name="bakery",
        states=("init", "awaiting-payment", "done", "customer-ejected"),
        init_state="init",
        final_states=frozenset({"done", "customer-ejected"}),
        transitions=(
            Transition("init", "order", "awaiting-payment"),
            Transition("awaiting-payment", "price-quote", "awaiting-payment"),
            Transition("awaiting-payment", "price-quote-polite", "awaiting-payment"),
            Transition("awaiting-payment", "request-politeness", "awaiting-payment"),
            Transition("awaiting-payment", "eject-customer", "customer-ejected"),
            Transition("awaiting-payment", "pay", "done"),
        ),
        qnud=("what-to-buy", "price", "payment"),
        conformity_overrides={
            "price-quote": 0.8,
            "eject-customer": -1.0,
            "request-politeness": 0.3,
            "price-quote-polite": 0.7,
        },
    )


def casual_chat_type() -> ConversationalType:
    return ConversationalType(
        name="casual-chat",
        states=("chatting", "parted"),
        init_state="chatting",
        final_states=frozenset({"parted"}),
        transitions=(
            Transition("chatting", "small-talk", "chatting"),
            Transition("chatting", "goodbye", "parted"),
        ),
    )


def bakery_belief() -> ConvTypeBelief:
    return ConvTypeBelief.from_priors([bakery_type(), casual_chat_type()], [CONV_PROB, 1.0 - CONV_PROB])
