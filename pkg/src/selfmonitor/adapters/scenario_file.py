"""
Scenario files: YAML documents checked against OmegaConf structured configs, then turned into a Scenario.

Typing and required fields are checked by OmegaConf, the dialogue invariants by the domain objects themselves. Every
problem is reported with the dotted path of the offending field.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import yaml
from omegaconf import MISSING, OmegaConf, DictConfig
from omegaconf.errors import OmegaConfBaseException
from typing_extensions import List, Dict, Optional, Union, Any

from ..conversational_type import ConversationalType, Transition
from ..decision import SelectionPolicy, Weights
from ..persona import TraitVector
from ..simulation import Scenario, AgentSpec, MoveSpec, Opening
from ..utils import DataclassException

logger = logging.getLogger(__name__)

SCENARIO_FILE_VERSION = 1

BUNDLED_SCENARIOS = "selfmonitor.resources.scenarios"


@dataclass
class ScenarioFileError(DataclassException):
    """
    Raised when a scenario file cannot be turned into a valid scenario.
    """

    field_path: str
    """
    The dotted path of the offending field, empty for the document as a whole.
    """
    reason: str

    def __post_init__(self):
        location = f" at '{self.field_path}'" if self.field_path else ""
        self.message = f"Invalid scenario file{location}: {self.reason}"
        super().__post_init__()


@dataclass
class TransitionConf:
    source: str = MISSING
    label: str = MISSING
    target: str = MISSING


@dataclass
class ConversationalTypeConf:
    name: str = MISSING
    states: List[str] = MISSING
    init_state: str = MISSING
    final_states: List[str] = MISSING
    transitions: List[TransitionConf] = field(default_factory=list)
    qnud: List[str] = field(default_factory=list)
    conformity: Dict[str, float] = field(default_factory=dict)
    prior: float = MISSING


@dataclass
class MoveConf:
    label: str = MISSING
    text: str = ""
    vector: List[float] = MISSING
    conformity: Optional[float] = None
    facts: List[str] = field(default_factory=list)
    raises: List[str] = field(default_factory=list)
    resolves: List[str] = field(default_factory=list)


@dataclass
class MoveSpaceConf:
    state: str = MISSING
    moves: List[MoveConf] = MISSING


@dataclass
class AgentConf:
    name: str = MISSING
    self_character: List[float] = MISSING
    other_prior: List[float] = MISSING
    weights: List[float] = MISSING
    update_rate: float = 0.5
    goals: List[str] = field(default_factory=list)
    policy: str = SelectionPolicy.ARGMAX.value
    seed: int = 0
    move_spaces: List[MoveSpaceConf] = field(default_factory=list)


@dataclass
class OpeningConf:
    agent: str = MISSING
    move: MoveConf = MISSING


@dataclass
class ScenarioConf:
    version: int = MISSING
    name: str = MISSING
    normalize_weights: bool = False
    """
    Rescale the weights of every agent onto the simplex before they are checked.
    """
    max_turns: int = 10
    conversational_types: List[ConversationalTypeConf] = MISSING
    agents: List[AgentConf] = MISSING
    opening: OpeningConf = MISSING


@contextmanager
def field_errors(path: str):
    """
    Report domain errors raised inside the block as scenario file errors at the given path.
    """
    try:
        yield
    except ScenarioFileError:
        raise
    except (DataclassException, ValueError, TypeError) as e:
        raise ScenarioFileError(path, str(e)) from e


def scenario_config(source: Union[str, Path, DictConfig, Dict[str, Any]]) -> DictConfig:
    """
    Load a scenario document and check it against the scenario schema.

    :param source: A path to a YAML file, or an already loaded document.
    :return: The typed configuration, mergeable with other configurations.
    """
    schema = OmegaConf.structured(ScenarioConf)
    try:
        document = OmegaConf.load(source) if isinstance(source, (str, Path)) else OmegaConf.create(source)
        return OmegaConf.merge(schema, document)
    except UnicodeDecodeError as e:
        raise ScenarioFileError("", f"not UTF-8 text (byte {e.start}).") from e
    except yaml.YAMLError as e:
        raise ScenarioFileError("", f"not a YAML document ({e}).") from e
    except OmegaConfBaseException as e:
        raise ScenarioFileError(getattr(e, "full_key", "") or "", str(e).splitlines()[0]) from e


def _trait_vector(values: List[float], path: str) -> TraitVector:
    with field_errors(path):
        return TraitVector.from_sequence(values)


def _move(conf: MoveConf, path: str) -> MoveSpec:
    vector = _trait_vector(conf.vector, f"{path}.vector")
    with field_errors(path):
        return MoveSpec(
            label=conf.label,
            text=conf.text,
            vector=vector,
            conformity=conf.conformity,
            facts=tuple(conf.facts),
            raises=tuple(conf.raises),
            resolves=tuple(conf.resolves),
        )


def _conversational_type(conf: ConversationalTypeConf, path: str) -> ConversationalType:
    with field_errors(path):
        return ConversationalType(
            name=conf.name,
            states=tuple(conf.states),
            init_state=conf.init_state,
            final_states=frozenset(conf.final_states),
            transitions=tuple(Transition(t.source, t.label, t.target) for t in conf.transitions),
            qnud=tuple(conf.qnud),
            conformity_overrides=dict(conf.conformity),
        )


def _agent(conf: AgentConf, path: str, normalize_weights: bool) -> AgentSpec:
    with field_errors(f"{path}.weights"):
        weights = Weights.from_sequence(conf.weights, normalize=normalize_weights)
    with field_errors(f"{path}.policy"):
        policy = SelectionPolicy(conf.policy)
    move_spaces = {}
    for index, space in enumerate(conf.move_spaces):
        space_path = f"{path}.move_spaces[{index}]"
        if space.state in move_spaces:
            raise ScenarioFileError(f"{space_path}.state", f"duplicate move space for '{space.state}'.")
        move_spaces[space.state] = tuple(
            _move(move, f"{space_path}.moves[{i}]") for i, move in enumerate(space.moves)
        )
    with field_errors(path):
        return AgentSpec(
            name=conf.name,
            self_character=_trait_vector(conf.self_character, f"{path}.self_character"),
            other_prior=_trait_vector(conf.other_prior, f"{path}.other_prior"),
            weights=weights,
            update_rate=conf.update_rate,
            goals=tuple(conf.goals),
            policy=policy,
            seed=conf.seed,
            move_spaces=move_spaces,
        )


def scenario_from_config(config: DictConfig) -> Scenario:
    """
    Build the scenario described by a typed scenario configuration.
    """
    try:
        conf: ScenarioConf = OmegaConf.to_object(config)
    except OmegaConfBaseException as e:
        raise ScenarioFileError(getattr(e, "full_key", "") or "", str(e).splitlines()[0]) from e
    if conf.version != SCENARIO_FILE_VERSION:
        raise ScenarioFileError(
            "version", f"version {conf.version} is not supported, expected {SCENARIO_FILE_VERSION}."
        )
    if not conf.conversational_types:
        raise ScenarioFileError("conversational_types", "at least one conversational type is needed.")
    types = tuple(
        _conversational_type(ct, f"conversational_types[{i}]")
        for i, ct in enumerate(conf.conversational_types)
    )
    agents = tuple(
        _agent(agent, f"agents[{i}]", conf.normalize_weights) for i, agent in enumerate(conf.agents)
    )
    opening = Opening(conf.opening.agent, _move(conf.opening.move, "opening.move"))
    with field_errors(""):
        scenario = Scenario(
            name=conf.name,
            conversational_types=types,
            priors=tuple(ct.prior for ct in conf.conversational_types),
            agents=agents,
            opening=opening,
            max_turns=conf.max_turns,
        )
    _warn_about_move_spaces(scenario)
    logger.debug(
        f"Loaded scenario '{scenario.name}' with {len(types)} conversational types and agents "
        f"{[a.name for a in agents]}."
    )
    return scenario


def _warn_about_move_spaces(scenario: Scenario):
    active = scenario.active_type
    reachable = active.reachable_states()
    for agent in scenario.agents:
        for state in sorted(set(agent.move_spaces) - reachable):
            logger.warning(f"'{agent.name}' has a move space for the unreachable state '{state}'.")
    authored = set().union(*(agent.move_spaces for agent in scenario.agents))
    for state in sorted(reachable - active.final_states - authored - {active.init_state}):
        logger.warning(f"No agent has a move space for the reachable state '{state}' of '{active.name}'.")


def load_scenario(source: Union[str, Path, DictConfig, Dict[str, Any]]) -> Scenario:
    """
    :param source: A path to a scenario file or a scenario document.
    :return: The validated scenario.
    """
    if isinstance(source, DictConfig):
        return scenario_from_config(source)
    return scenario_from_config(scenario_config(source))


def bundled_scenario_path(name: str = "bakery") -> Path:
    """
    :return: The path of a scenario file shipped with the package.
    """
    return Path(str(resources.files(BUNDLED_SCENARIOS).joinpath(f"{name}.yaml")))
