import numpy as np
import pytest

from selfmonitor.adapters.json_serializer import from_json
from selfmonitor.decision import Weights
from selfmonitor.estimation import (
    Observation,
    FitMethod,
    fit_grid,
    fit_gradient,
    simplex_grid,
    project_onto_simplex,
    detect_weight_shift,
    generate_synthetic_observations,
    log_likelihood,
    NoInformativeObservations,
    InvalidGridStep,
    InvalidPrior,
)
from selfmonitor.utils import InvalidSeed

PLANTED = Weights(0.1, 0.1, 0.8)


def conformity_driven_observations(count: int = 20):
    return [Observation.from_rows([[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]], 0) for _ in range(count)]


def identical_candidate_observations(count: int = 5):
    return [Observation.from_rows([[0.3, -0.2, 0.1], [0.3, -0.2, 0.1]], 0) for _ in range(count)]


def recovery_errors(count: int, seeds=range(10)):
    return [
        fit_grid(generate_synthetic_observations(PLANTED, count, seed)).weights.l1_distance(PLANTED)
        for seed in seeds
    ]


def test_simplex_grid():
    grid = simplex_grid(0.1)
    assert len(grid) == 66
    assert np.all(grid.points >= 0.0)
    assert np.allclose(grid.points.sum(axis=1), 1.0)
    assert tuple(grid.points[0]) == (0.0, 0.0, 1.0)
    assert len(simplex_grid(0.02)) == 1326
    assert len(simplex_grid(0.3)) == 10
    with pytest.raises(InvalidGridStep):
        simplex_grid(0.0)
    with pytest.raises(InvalidGridStep):
        simplex_grid(0.6)


def test_projection_onto_simplex():
    rng = np.random.default_rng(31)
    for _ in range(1000):
        point = rng.normal(size=3) * 2
        projected = project_onto_simplex(point)
        assert np.all(projected >= 0.0)
        assert projected.sum() == pytest.approx(1.0, abs=1e-12)
        feasible = rng.dirichlet(np.ones(3))
        assert np.linalg.norm(point - projected) <= np.linalg.norm(point - feasible) + 1e-12
    assert project_onto_simplex(np.array([0.2, 0.3, 0.5])) == pytest.approx([0.2, 0.3, 0.5])


def test_grid_fit_recovers_planted_weights():
    errors = recovery_errors(500)
    assert np.median(errors) <= 0.25


def test_grid_fit_recovers_planted_weights_closely_from_many_choices():
    errors = recovery_errors(5000)
    assert np.median(errors) <= 0.1


def test_recovery_improves_with_more_choices():
    small = np.median(recovery_errors(100))
    medium = np.median(recovery_errors(1000))
    large = np.median(recovery_errors(10000))
    assert medium <= small + 0.05
    assert large <= medium + 0.02


def test_grid_fit_result():
    observations = generate_synthetic_observations(PLANTED, 200, seed=4)
    result = fit_grid(observations)
    assert result.converged
    assert result.method is FitMethod.GRID
    assert result.log_likelihood <= 0.0
    assert result.log_likelihood == pytest.approx(log_likelihood(observations, result.weights), abs=1e-9)
    assert from_json(result.to_json()) == result


def test_identical_candidates_are_not_identifiable():
    result = fit_grid(identical_candidate_observations())
    assert not result.identifiable
    assert result.weights.as_tuple() == (0.0, 0.0, 1.0)


def test_dominating_candidate_ties_on_every_vertex():
    result = fit_grid([Observation.from_rows([[0.5, 0.5, 0.5], [-0.5, -0.5, -0.5]], 0)])
    assert result.weights.as_tuple() == (0.0, 0.0, 1.0)
    assert not result.identifiable


def test_conformity_driven_choices_are_identifiable():
    result = fit_grid(conformity_driven_observations())
    assert result.identifiable
    assert result.weights.as_tuple() == (0.0, 0.0, 1.0)


def test_fits_need_informative_observations():
    single = [Observation.from_rows([[0.1, 0.2, 0.3]], 0)]
    with pytest.raises(NoInformativeObservations):
        fit_grid(single)
    with pytest.raises(NoInformativeObservations):
        fit_gradient(single)


def test_gradient_fit_is_at_least_as_good_as_the_coarse_grid():
    for seed in range(5):
        observations = generate_synthetic_observations(PLANTED, 500, seed)
        refined = fit_gradient(observations)
        coarse = fit_grid(observations, step=0.1)
        assert refined.log_likelihood >= coarse.log_likelihood
        assert refined.method is FitMethod.GRADIENT
        assert sum(refined.weights.as_tuple()) == pytest.approx(1.0, abs=1e-9)
        assert min(refined.weights.as_tuple()) >= 0.0
        assert refined.log_likelihood == pytest.approx(
            log_likelihood(observations, refined.weights), abs=1e-9
        )


def test_gradient_fit_stays_at_a_vertex_optimum():
    observations = conformity_driven_observations()
    result = fit_gradient(observations)
    assert result.converged
    assert result.weights.as_array() == pytest.approx([0.0, 0.0, 1.0], abs=1e-6)
    assert fit_grid(observations, step=0.005).weights.as_array() == pytest.approx(
        result.weights.as_array(), abs=1e-6
    )


def test_gradient_fit_without_iterations_returns_the_initializer():
    observations = generate_synthetic_observations(PLANTED, 100, seed=1)
    result = fit_gradient(observations, max_iterations=0)
    assert not result.converged
    assert result.iterations == 0
    assert result.weights == fit_grid(observations, step=0.1).weights


def test_prior_pulls_flat_likelihoods_to_the_center():
    observations = identical_candidate_observations()
    uniform = Weights.uniform()
    assert fit_grid(observations, dirichlet_concentration=2.0).weights.l1_distance(uniform) < 0.05
    assert fit_gradient(observations, dirichlet_concentration=2.0).weights.l1_distance(uniform) < 1e-3
    with pytest.raises(InvalidPrior):
        fit_grid(observations, dirichlet_concentration=0.5)


def test_weight_shift_is_reported_between_windows():
    before = generate_synthetic_observations(PLANTED, 2000, seed=8)
    after = generate_synthetic_observations(Weights(0.8, 0.1, 0.1), 2000, seed=9)
    windows = detect_weight_shift(before + after, window=2000)
    assert len(windows) == 2
    assert windows[0].shift_from_previous is None
    assert not windows[0].weight_shift
    assert windows[1].weight_shift
    assert windows[1].shift_from_previous > 0.3


def test_synthetic_observations_are_seeded():
    first = generate_synthetic_observations(PLANTED, 50, seed=3)
    assert first == generate_synthetic_observations(PLANTED, 50, seed=3)
    assert first != generate_synthetic_observations(PLANTED, 50, seed=4)
    assert all(len(o.factors) == 4 and 0 <= o.chosen < 4 for o in first)
    assert all(-1.0 <= v <= 1.0 for o in first for row in o.factors for v in row.as_tuple())


def test_synthetic_observations_need_a_non_negative_seed():
    with pytest.raises(InvalidSeed):
        generate_synthetic_observations(PLANTED, 10, seed=-1)
