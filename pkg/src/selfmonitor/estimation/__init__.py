from .failures import (
    EstimationError,
    NoInformativeObservations,
    InvalidObservation,
    InvalidGridStep,
    InvalidPrior,
)
from .observation import Observation
from .likelihood import (
    ObservationBatch,
    batch_observations,
    log_likelihood,
    log_likelihood_on_grid,
    log_likelihood_gradient,
    objective,
)
from .fitting import (
    FitMethod,
    FitResult,
    SimplexGrid,
    WindowFit,
    simplex_grid,
    project_onto_simplex,
    fit_grid,
    fit_gradient,
    detect_weight_shift,
    WEIGHT_SHIFT_THRESHOLD,
)
from .synthetic import (
    BAKERY_SELF_CHARACTER,
    BAKERY_OTHER_CHARACTER,
    BAKERY_CONV_PROB,
    BAKERY_WEIGHTS,
    BAKERY_REPLIES,
    bakery_factor_rows,
    generate_synthetic_observations,
)
