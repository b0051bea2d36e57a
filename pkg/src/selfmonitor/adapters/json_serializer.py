"""
Polymorphic JSON (de)serialization of the records that leave the engine: scored move spaces, information states,
trace events and fit results.

Every serialized record carries its fully qualified class name under `__json_type__`, so a JSON Lines stream with
mixed record types can be read back without knowing the record order in advance.
"""

from __future__ import annotations

import importlib
import json
from dataclasses import dataclass
from types import NoneType

import numpy as np
from typing_extensions import Dict, Any, Self, Union, Type, Iterable, List

from ..utils import get_full_class_name, DataclassException

leaf_types = (
    int,
    float,
    str,
    bool,
    NoneType,
)  # values the built-in JSON module writes as they are

list_like_classes = (list, tuple)

JSON_TYPE_NAME = "__json_type__"  # the key used in JSON dicts to identify the class

JSON_DICT_TYPE = Dict[str, Any]


@dataclass
class JSONSerializationError(DataclassException):
    """Base exception for JSON (de)serialization errors."""


@dataclass
class MissingTypeError(JSONSerializationError):
    """Raised when the type field is missing in the JSON data."""

    def __post_init__(self):
        self.message = f"Missing '{JSON_TYPE_NAME}' field in JSON data"
        super().__post_init__()


@dataclass
class InvalidTypeFormatError(JSONSerializationError):
    """Raised when the type field value is not a fully qualified class name."""

    invalid_type_value: str

    def __post_init__(self):
        self.message = f"Invalid type format: {self.invalid_type_value}"
        super().__post_init__()


@dataclass
class UnknownRecordTypeError(JSONSerializationError):
    """Raised when the type field names a module or class that cannot be resolved to a serializable record."""

    type_name: str

    def __post_init__(self):
        self.message = f"Unknown record type: {self.type_name}"
        super().__post_init__()


@dataclass
class ClassNotSerializableError(JSONSerializationError):
    """Raised when an object cannot be JSON-serialized."""

    clazz: Type

    def __post_init__(self):
        self.message = f"Class '{self.clazz.__name__}' cannot be serialized"
        super().__post_init__()


class SubclassJSONSerializer:
    """
    Mixin for automatic (de)serialization of records using importlib.

    Subclasses extend `to_json` (always merging `super().to_json()`) and implement `_from_json`.
    """

    def to_json(self) -> JSON_DICT_TYPE:
        return {JSON_TYPE_NAME: get_full_class_name(self.__class__)}

    @classmethod
    def _from_json(cls, data: JSON_DICT_TYPE, **kwargs) -> Self:
        """
        Create an instance from a json dict whose class is already resolved.

        :param data: The JSON dict
        :param kwargs: Additional keyword arguments to pass to the constructor of the subclass.
        :return: The deserialized object
        """
        raise NotImplementedError()

    @classmethod
    def from_json(cls, data: JSON_DICT_TYPE, **kwargs) -> Self:
        """
        Create the correct instance of the subclass from a json dict.

        :param data: The json dict
        :param kwargs: Additional keyword arguments to pass to the constructor of the subclass.
        :return: The correct instance of the subclass
        """
        if isinstance(data, leaf_types):
            return data

        if isinstance(data, list_like_classes):
            return [from_json(d, **kwargs) for d in data]

        fully_qualified_class_name = data.get(JSON_TYPE_NAME)
        if not fully_qualified_class_name:
            raise MissingTypeError()

        try:
            module_name, class_name = fully_qualified_class_name.rsplit(".", 1)
        except ValueError as exc:
            raise InvalidTypeFormatError(fully_qualified_class_name) from exc

        try:
            module = importlib.import_module(module_name)
            target_cls = getattr(module, class_name)
        except (ModuleNotFoundError, AttributeError) as exc:
            raise UnknownRecordTypeError(fully_qualified_class_name) from exc

        if not (isinstance(target_cls, type) and issubclass(target_cls, SubclassJSONSerializer)):
            raise UnknownRecordTypeError(fully_qualified_class_name)

        return target_cls._from_json(data, **kwargs)


def from_json(data: JSON_DICT_TYPE, **kwargs) -> Union[SubclassJSONSerializer, Any]:
    """
    Deserialize a JSON dict to an object.

    :param data: The JSON dict
    :return: The deserialized object
    """
    return SubclassJSONSerializer.from_json(data, **kwargs)


def to_json(obj: Union[SubclassJSONSerializer, Any]) -> Any:
    """
    Serialize an object to JSON compatible data.

    :param obj: The object to serialize
    :return: The JSON compatible data
    """
    if isinstance(obj, np.generic):
        return obj.item()

    if isinstance(obj, leaf_types):
        return obj

    if isinstance(obj, list_like_classes):
        return [to_json(item) for item in obj]

    if isinstance(obj, SubclassJSONSerializer):
        return obj.to_json()

    raise ClassNotSerializableError(type(obj))


def dumps_record(obj: Union[SubclassJSONSerializer, Any]) -> str:
    """
    :param obj: The record to write.
    :return: One compact JSON line for the record, key order as produced by `to_json`.
    """
    return json.dumps(to_json(obj), separators=(",", ":"), allow_nan=False)


def loads_record(line: str, **kwargs) -> Union[SubclassJSONSerializer, Any]:
    """
    :param line: One JSON line as written by `dumps_record`.
    :return: The deserialized record.
    """
    return from_json(json.loads(line), **kwargs)


def dumps_records(records: Iterable[Any]) -> str:
    """
    :return: A JSON Lines document, newline terminated.
    """
    return "".join(dumps_record(record) + "\n" for record in records)


def loads_records(text: str, **kwargs) -> List[Any]:
    return [loads_record(line, **kwargs) for line in text.splitlines() if line.strip()]
