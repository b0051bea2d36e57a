import copy
import logging

import pytest
from omegaconf import OmegaConf

from selfmonitor.adapters.scenario_file import (
    ScenarioFileError,
    bundled_scenario_path,
    load_scenario,
    scenario_config,
)
from selfmonitor.decision import SelectionPolicy, Weights


def test_bundled_bakery_scenario():
    scenario = load_scenario(bundled_scenario_path("bakery"))
    assert scenario.name == "bakery"
    assert [agent.name for agent in scenario.agents] == ["baker", "customer"]
    assert scenario.priors == (0.98, 0.02)
    baker = scenario.agent("baker")
    assert baker.weights == Weights(0.1, 0.1, 0.8)
    assert baker.policy is SelectionPolicy.ARGMAX
    assert [m.label for m in baker.move_space("awaiting-payment")] == [
        "price-quote",
        "eject-customer",
        "request-politeness",
        "price-quote-polite",
    ]
    assert scenario.opening.agent == "customer"
    assert scenario.opening.move.text == "2 croissants"
    assert scenario.active_type.conformity_overrides["price-quote"] == 0.8


def test_weights_off_the_simplex_name_the_field(bakery_config):
    config = copy.deepcopy(bakery_config)
    config.agents[0].weights = [0.5, 0.5, 0.5]
    with pytest.raises(ScenarioFileError) as error:
        load_scenario(config)
    assert error.value.field_path == "agents[0].weights"
    assert "simplex" in error.value.message


def test_weights_can_be_normalized_on_load(bakery_config):
    config = copy.deepcopy(bakery_config)
    config.normalize_weights = True
    config.agents[0].weights = [1.0, 1.0, 8.0]
    assert load_scenario(config).agent("baker").weights == Weights(0.1, 0.1, 0.8)


def test_version_is_required(tmp_path, bakery_config):
    config = copy.deepcopy(bakery_config)
    config.version = 2
    with pytest.raises(ScenarioFileError) as error:
        load_scenario(config)
    assert error.value.field_path == "version"
    path = tmp_path / "no_version.yaml"
    document = OmegaConf.to_container(bakery_config)
    del document["version"]
    path.write_text(OmegaConf.to_yaml(document))
    with pytest.raises(ScenarioFileError) as error:
        load_scenario(path)
    assert error.value.field_path == "version"


def test_schema_errors_name_the_field(tmp_path):
    path = tmp_path / "typo.yaml"
    path.write_text("version: 1\nname: x\nmax_turns: many\n")
    with pytest.raises(ScenarioFileError) as error:
        scenario_config(path)
    assert error.value.field_path == "max_turns"
    path.write_text("version: 1\nnmae: x\n")
    with pytest.raises(ScenarioFileError):
        scenario_config(path)
    path.write_text("version: [1\n")
    with pytest.raises(ScenarioFileError):
        scenario_config(path)


def test_domain_errors_name_the_field(bakery_config):
    config = copy.deepcopy(bakery_config)
    config.agents[1].self_character = [0.0, 0.0, 0.0, 0.0, 1.5]
    with pytest.raises(ScenarioFileError) as error:
        load_scenario(config)
    assert error.value.field_path == "agents[1].self_character"
    config = copy.deepcopy(bakery_config)
    config.agents[0].move_spaces[0].state = "nowhere"
    with pytest.raises(ScenarioFileError):
        load_scenario(config)
    config = copy.deepcopy(bakery_config)
    config.opening.agent = "miller"
    with pytest.raises(ScenarioFileError):
        load_scenario(config)


def test_unreachable_move_spaces_are_reported(bakery_config, caplog):
    config = copy.deepcopy(bakery_config)
    config.conversational_types[0].states.append("closed")
    config.agents[0].move_spaces[0].state = "closed"
    with caplog.at_level(logging.WARNING, logger="selfmonitor"):
        load_scenario(config)
    assert any("closed" in record.getMessage() for record in caplog.records)


def test_missing_files_raise_os_errors(tmp_path):
    with pytest.raises(OSError):
        load_scenario(tmp_path / "missing.yaml")


def test_negative_agent_seeds_are_rejected(bakery_config):
    config = copy.deepcopy(bakery_config)
    config.agents[1].seed = -1
    with pytest.raises(ScenarioFileError) as error:
        load_scenario(config)
    assert error.value.field_path == "agents[1]"
    assert "seed" in error.value.message


def test_files_that_are_not_utf8_are_scenario_errors(tmp_path):
    path = tmp_path / "binary.yaml"
    path.write_bytes(b"version: 1\nname: \xff\xfe\n")
    with pytest.raises(ScenarioFileError) as error:
        scenario_config(path)
    assert "UTF-8" in error.value.message
