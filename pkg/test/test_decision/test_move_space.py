import pytest

from selfmonitor.adapters.json_serializer import loads_records
from selfmonitor.decision import ScoredMoveSpace, format_decimal, score_space
from selfmonitor.decision.failures import InvalidScoredMoveSpace
from ..dataset.bakery import BAKER_REPLIES, CUSTOMER_CHARACTER, CONV_PROB, REGIME_1_SELF, REGIME_1_WEIGHTS


@pytest.fixture
def space():
    return score_space(BAKER_REPLIES, REGIME_1_SELF, CUSTOMER_CHARACTER, CONV_PROB, REGIME_1_WEIGHTS)


def test_format_decimal_rounds_half_to_even():
    assert format_decimal(0.12345) == "0.1234"
    assert format_decimal(0.12355) == "0.1236"
    assert format_decimal(-0.00001) == "0.0000"
    assert format_decimal(1.0) == "1.0000"


def test_table_has_one_row_per_move(space):
    table = space.to_table()
    lines = table.splitlines()
    assert lines[0].split() == ["label", "s_self", "s_other", "d*p", "rho", "probability"]
    assert len(lines) == 2 + len(BAKER_REPLIES)
    assert lines[2].split()[0] == "price-quote"
    assert lines[2].split()[3] == "0.7840"


def test_json_lines_round_trip(space):
    text = space.to_json_lines()
    assert len(text.splitlines()) == len(space)
    restored = ScoredMoveSpace.from_json_lines(text)
    assert restored == space
    assert restored.to_json_lines() == text
    assert [row.rho for row in loads_records(text)] == list(space.rhos)


def test_probabilities_must_sum_to_one(space):
    broken = tuple(
        type(row)(row.candidate, row.factors, row.rho, 0.5) for row in space.rows
    )
    with pytest.raises(InvalidScoredMoveSpace):
        ScoredMoveSpace(broken)
