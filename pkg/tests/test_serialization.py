import json

import pytest

from algebra.exact_scalars import eta, power_of_A
from algebra.matrices import RepMatrix
from utilities.serialization import load_matrix, load_scalar, matrix_payload, render, scalar_payload, to_csv


def test_scalar_payload_keeps_exact_and_numeric(level5):
    x = power_of_A(5, level5) + eta(level5)
    payload = scalar_payload(x, digits=6)
    assert load_scalar(payload) == x
    re, im = payload["numeric"]
    assert complex(re, im) == pytest.approx(x.numeric(), abs=1e-6)


def test_matrix_payload(level3):
    m = RepMatrix.from_integers([[1, 0], [2, 3]], level3)
    payload = matrix_payload(m)
    assert payload["shape"] == [2, 2]
    assert payload["numeric"][1][0] == [2.0, 0.0]
    assert load_matrix(json.loads(json.dumps(payload))) == m


def test_json_is_deterministic():
    first = render({"b": 1, "a": [1, 2]}, "json")
    second = render({"a": [1, 2], "b": 1}, "json")
    assert first == second
    assert json.loads(first) == {"a": [1, 2], "b": 1}


def test_csv_uses_rows_when_present():
    text = to_csv({"r": 5, "rows": [{"index": 0, "labeling": [0, 0]}, {"index": 1, "labeling": [1, 1]}]})
    assert text.splitlines() == ["index,labeling", '0,"[0,0]"', '1,"[1,1]"']


def test_csv_falls_back_to_key_value_pairs():
    assert to_csv({"r": 5, "verdict": "irreducible"}).splitlines() == ["key,value", "r,5", "verdict,irreducible"]


def test_text_renders_scalars_compactly(level3):
    text = render({"value": scalar_payload(power_of_A(0, level3))}, "text")
    assert text == "value:\n  +1.000000+0.000000i\n"


def test_unknown_format():
    with pytest.raises(ValueError):
        render({}, "yaml")
