from .trait_vector import (
    TRAIT_NAMES,
    TraitVector,
    CharacterUpdate,
    validate,
    validate_components,
    clamp_components,
    cosine_similarity,
    ema_update,
)
