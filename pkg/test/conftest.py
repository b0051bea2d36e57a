import pytest
from omegaconf import OmegaConf

from selfmonitor.adapters.scenario_file import bundled_scenario_path, scenario_config
from selfmonitor.dialogue_state import init_information_state
from .dataset.bakery import (
    bakery_type,
    bakery_belief,
    REGIME_1_SELF,
    REGIME_1_WEIGHTS,
    CUSTOMER_CHARACTER,
)


@pytest.fixture
def bakery():
    return bakery_type()


@pytest.fixture
def belief():
    return bakery_belief()


@pytest.fixture
def baker_state(belief):
    return init_information_state(
        self_character=REGIME_1_SELF,
        other_prior=CUSTOMER_CHARACTER,
        goals=["paid"],
        belief=belief,
        weights=REGIME_1_WEIGHTS,
        rate=0.5,
        owner="baker",
        interlocutor="customer",
    )


@pytest.fixture
def bakery_config():
    """
    The bundled bakery scenario as a typed configuration, ready to be merged with overrides.
    """
    return scenario_config(bundled_scenario_path("bakery"))


@pytest.fixture
def write_scenario(tmp_path):
    """
    Write a scenario configuration, optionally merged with overrides, to a YAML file.
    """

    def write(config, name="scenario.yaml", **overrides):
        if overrides:
            config = OmegaConf.merge(config, overrides)
        path = tmp_path / name
        OmegaConf.save(config, path)
        return path

    return write
