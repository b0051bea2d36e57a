"""
Observation files: JSON Lines with a header line followed by one observed choice per line.

    {"version": 1, "columns": ["s_self", "s_other", "conf_mass"]}
    {"factors": [[0.37, 1.0, 0.78], [0.35, 0.79, -0.98]], "chosen": 0}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from typing_extensions import List, Iterable, Union

from ..estimation import Observation
from ..utils import DataclassException

OBSERVATION_FILE_VERSION = 1
OBSERVATION_COLUMNS = ("s_self", "s_other", "conf_mass")


@dataclass
class ObservationFileError(DataclassException):
    """
    Raised when a line of an observation file cannot be read.
    """

    line: int
    """
    The 1-based line number.
    """
    reason: str

    def __post_init__(self):
        self.message = f"Invalid observation file at line {self.line}: {self.reason}"
        super().__post_init__()


def parse_observations(text: str) -> List[Observation]:
    """
    :param text: The content of an observation file.
    :return: The observations in file order.
    """
    observations = []
    header_seen = False
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise ObservationFileError(number, f"not valid JSON ({e.msg}).") from e
        if not isinstance(record, dict):
            raise ObservationFileError(number, "a record must be a JSON object.")
        if not header_seen:
            _check_header(record, number)
            header_seen = True
            continue
        if set(record) != {"factors", "chosen"}:
            raise ObservationFileError(number, "a record has exactly the keys 'factors' and 'chosen'.")
        factors, chosen = record["factors"], record["chosen"]
        if not isinstance(chosen, int) or isinstance(chosen, bool):
            raise ObservationFileError(number, f"chosen must be an integer, got {chosen!r}.")
        if not isinstance(factors, list) or not all(
            isinstance(row, list) and all(_is_number(v) for v in row) for row in factors
        ):
            raise ObservationFileError(number, "factors must be a list of numeric rows.")
        try:
            observations.append(Observation.from_rows(factors, chosen))
        except DataclassException as e:
            raise ObservationFileError(number, e.message) from e
    if not header_seen:
        raise ObservationFileError(1, "the header line is missing.")
    return observations


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_header(record: dict, number: int):
    if record.get("version") != OBSERVATION_FILE_VERSION:
        raise ObservationFileError(
            number, f"expected a header with version {OBSERVATION_FILE_VERSION}, got {record!r}."
        )
    if tuple(record.get("columns", ())) != OBSERVATION_COLUMNS:
        raise ObservationFileError(number, f"the header columns must be {list(OBSERVATION_COLUMNS)}.")


def read_observations(path: Union[str, Path]) -> List[Observation]:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ObservationFileError(data.count(b"\n", 0, e.start) + 1, "the line is not UTF-8 text.") from e
    return parse_observations(text)


def format_observations(observations: Iterable[Observation]) -> str:
    """
    :return: The observations as the content of an observation file, full float precision.
    """
    lines = [json.dumps({"version": OBSERVATION_FILE_VERSION, "columns": list(OBSERVATION_COLUMNS)})]
    for observation in observations:
        lines.append(
            json.dumps(
                {
                    "factors": [list(row.as_tuple()) for row in observation.factors],
                    "chosen": observation.chosen,
                },
                allow_nan=False,
            )
        )
    return "\n".join(lines) + "\n"


def write_observations(path: Union[str, Path], observations: Iterable[Observation]):
    Path(path).write_text(format_observations(observations), encoding="utf-8")
