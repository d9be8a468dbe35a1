import json

import pytest

from gradedlie import corpus
from gradedlie.formats import (
    FormatError,
    ValidationFailed,
    algebra_to_dict,
    parse_algebra,
    parse_ideal_spec,
    parse_vector,
    serialize_algebra,
)


@pytest.mark.parametrize("name", corpus.NAMES)
def test_round_trip(name):
    text = corpus.corpus_text(name)
    L = parse_algebra(text)
    assert serialize_algebra(L) == text
    again = parse_algebra(serialize_algebra(L))
    assert again == L and again.name == L.name


def test_sl2_document(alg):
    L = alg("sl2_f5")
    assert L.dim == 3
    assert set(L.support) == {(-1,), (0,), (1,)}


def _doc(name="sol2_f2"):
    return algebra_to_dict(corpus.load(name))


def test_duplicate_basis_name():
    d = _doc()
    d["basis"][1]["name"] = "e"
    with pytest.raises(FormatError, match="duplicate basis name"):
        parse_algebra(json.dumps(d))


def test_diagonal_bracket():
    d = _doc()
    d["brackets"].append({"i": 1, "j": 1, "coeffs": {"0": 1}})
    with pytest.raises(FormatError, match="diagonal bracket must be omitted"):
        parse_algebra(json.dumps(d))


def test_syntax_error_has_position():
    with pytest.raises(FormatError, match=r"line 2, column"):
        parse_algebra('{\n "name": }')


@pytest.mark.parametrize("mutate,msg", [
    (lambda d: d.pop("field"), "missing field 'field'"),
    (lambda d: d["brackets"][0]["coeffs"].update({"1": 2}), r"outside \[0, 2\)"),
    (lambda d: d["brackets"][0].update({"i": 5}), "out of range"),
    (lambda d: d["basis"][0].update({"degree": [0, 1]}), "coordinates"),
    (lambda d: d["field"].update({"p": 4}), "prime"),
])
def test_semantic_errors(mutate, msg):
    d = _doc()
    mutate(d)
    with pytest.raises(FormatError, match=msg):
        parse_algebra(json.dumps(d))


def test_validation_refused_unless_allowed():
    d = _doc("heis3_f2")
    d["brackets"][0]["coeffs"] = {"0": 1}
    with pytest.raises(ValidationFailed, match="GRADING"):
        parse_algebra(json.dumps(d))
    L = parse_algebra(json.dumps(d), allow_invalid=True)
    assert L.brackets[0][2] == (1, 0, 0)


def test_rational_scalars():
    d = _doc("sol2_q")
    assert d["brackets"][0]["coeffs"] == {"1": "1/1"}
    d["brackets"][0]["coeffs"] = {"1": "3/6"}
    L = parse_algebra(json.dumps(d), allow_invalid=True)
    assert serialize_algebra(L).count('"1/2"') == 1
    d["brackets"][0]["coeffs"] = {"1": 0.5}
    with pytest.raises(FormatError, match="num/den"):
        parse_algebra(json.dumps(d))


def test_ideal_specs(alg):
    L = alg("heis3_f2")
    assert parse_ideal_spec(L, "derived") == "derived"
    assert parse_ideal_spec(L, '{"generators": [[0,0,1]]}') == [(0, 0, 1)]
    assert parse_ideal_spec(L, "[[1,0,0],[0,0,1]]") == [(1, 0, 0), (0, 0, 1)]
    assert parse_vector(L, "y") == (0, 1, 0)
    assert parse_vector(L, "1,1,0") == (1, 1, 0)
    with pytest.raises(FormatError):
        parse_ideal_spec(L, "[[1,0]]")
