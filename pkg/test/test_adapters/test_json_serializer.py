from dataclasses import dataclass
from typing import Dict, Any

import numpy as np
import pytest

from selfmonitor.adapters.json_serializer import (
    MissingTypeError,
    InvalidTypeFormatError,
    UnknownRecordTypeError,
    ClassNotSerializableError,
    SubclassJSONSerializer,
    to_json,
    from_json,
    dumps_record,
    loads_record,
    dumps_records,
    loads_records,
    JSON_TYPE_NAME,
)
from selfmonitor.decision import Weights, DecisionFactors
from selfmonitor.dialogue_state import MoveRecord
from selfmonitor.persona import TraitVector
from selfmonitor.utils import get_full_class_name


@dataclass
class Utterance(SubclassJSONSerializer):
    """
    Base record used in tests.
    """

    text: str

    def to_json(self):
        data = super().to_json()
        data.update({"text": self.text})
        return data

    @classmethod
    def _from_json(cls, data, **kwargs):
        return cls(text=data["text"])


@dataclass
class Question(Utterance):
    """
    Subtype to ensure subclasses are restored as themselves.
    """

    topic: str = "price"

    def to_json(self):
        data = super().to_json()
        data.update({"topic": self.topic})
        return data

    @classmethod
    def _from_json(cls, data, **kwargs):
        return cls(text=data["text"], topic=data["topic"])


@dataclass
class RecordThatNeedsKWARGS(SubclassJSONSerializer):
    a: int
    b: float = 0

    def to_json(self) -> Dict[str, Any]:
        return {**super().to_json(), "a": self.a}

    @classmethod
    def _from_json(cls, data: Dict[str, Any], **kwargs):
        return cls(a=data["a"], b=kwargs["b"])


def test_roundtrip_of_subclasses():
    question = Question("How much?", topic="price")
    data = question.to_json()
    assert data[JSON_TYPE_NAME] == get_full_class_name(Question)
    restored = SubclassJSONSerializer.from_json(data)
    assert isinstance(restored, Question)
    assert restored == question


def test_missing_type_raises_missing_type_error():
    with pytest.raises(MissingTypeError):
        SubclassJSONSerializer.from_json({})


def test_invalid_type_format_raises_invalid_type_format_error():
    with pytest.raises(InvalidTypeFormatError):
        SubclassJSONSerializer.from_json({JSON_TYPE_NAME: "NotAQualifiedName"})


def test_unknown_records_raise_unknown_record_type_error():
    with pytest.raises(UnknownRecordTypeError):
        SubclassJSONSerializer.from_json({JSON_TYPE_NAME: "non.existent.Record"})
    with pytest.raises(UnknownRecordTypeError):
        SubclassJSONSerializer.from_json({JSON_TYPE_NAME: "selfmonitor.utils.DoesNotExist"})
    with pytest.raises(UnknownRecordTypeError):
        SubclassJSONSerializer.from_json({JSON_TYPE_NAME: "selfmonitor.utils.DataclassException"})


def test_unserializable_objects_are_rejected():
    with pytest.raises(ClassNotSerializableError):
        to_json(object())


def test_numpy_scalars_and_lists():
    assert to_json(np.float64(0.25)) == 0.25
    assert to_json([Weights(0.1, 0.1, 0.8), 3]) == [Weights(0.1, 0.1, 0.8).to_json(), 3]
    assert from_json(to_json([Weights(0.1, 0.1, 0.8)])) == [Weights(0.1, 0.1, 0.8)]


def test_with_kwargs():
    record = RecordThatNeedsKWARGS(a=1, b=2.0)
    assert from_json(record.to_json(), b=2.0) == record


def test_json_lines_keep_full_precision():
    records = [
        DecisionFactors(0.1 + 0.2, 1 / 3, -2 / 7),
        MoveRecord("order", "customer", "2 croissants", TraitVector(0, 0, -0.1, -0.4, 0.2)),
    ]
    text = dumps_records(records)
    assert text.endswith("\n")
    assert len(text.splitlines()) == 2
    assert loads_records(text) == records
    assert loads_record(dumps_record(records[0])) == records[0]
