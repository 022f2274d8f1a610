import json
from fractions import Fraction

import pytest

from liecas import catalog
from liecas.algebra_file import AlgebraFileError, from_dict, loads, parse


def test_parse_aff1_minimal():
    af = loads('{"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"1"}}]}')
    C = af.structure_constants()
    assert C.c(0, 1, 1) == 1 and C.c(1, 0, 1) == -1
    assert af.basis == ["e1", "e2"] and af.levi is None


def test_zero_denominator():
    with pytest.raises(AlgebraFileError, match="zero denominator") as exc:
        loads('{"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"1/0"}}]}')
    assert "brackets[0]" in exc.value.where


def test_diagonal_bracket():
    with pytest.raises(AlgebraFileError, match="diagonal"):
        loads('{"dim":2, "brackets":[{"i":1,"j":1,"coeffs":{"2":"1"}}]}')


@pytest.mark.parametrize(
    "text, match",
    [
        ('{"dim":2, "brackets":[', "malformed JSON"),
        ('{"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"0.5"}}]}', "bad rational"),
        ('{"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":1}}]}', "rational string"),
        ('{"dim":2, "brackets":[{"i":1,"j":3,"coeffs":{"2":"1"}}]}', "out of range"),
        ('{"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}}]}', "out of range"),
        ('{"dim":2, "brackets":[{"i":2,"j":1,"coeffs":{"2":"1"}}]}', "i < j"),
        ('{"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{}}, {"i":1,"j":2,"coeffs":{}}]}', "duplicate"),
        ('{"dim":2}', "missing"),
        ('{"dim":0, "brackets":[]}', "positive"),
        ('{"dim":2, "brackets":[], "colour":"red"}', "unknown"),
        ('{"dim":2, "brackets":[], "levi":[["1"]]}', "levi"),
        ('{"dim":2, "brackets":[], "expected":{"invariant_count":"2"}}', "integer"),
    ],
)
def test_rejections(text, match):
    with pytest.raises(AlgebraFileError, match=match):
        loads(text)


def test_json_error_has_line():
    with pytest.raises(AlgebraFileError) as exc:
        loads('{\n"dim": 2,\n"brackets": [,]\n}')
    assert exc.value.where.startswith("line 3")


def test_negative_and_fractional_rationals():
    af = loads('{"dim":3, "brackets":[{"i":1,"j":2,"coeffs":{"3":"-3/6"}}]}')
    assert af.brackets[0][2][3] == Fraction(-1, 2)


@pytest.mark.parametrize("name", catalog.NAMES)
def test_roundtrip(name):
    af = parse(catalog.path(name))
    again = loads(af.dumps(), name)
    assert again == af
    assert again.dumps() == af.dumps()
    # bundled files are already in canonical form
    assert catalog.path(name).read_text() == af.dumps()


def test_catalog_contents():
    by_name = {af.name: af for af in catalog.catalog()}
    assert by_name["sl2_h3"].dim == 6 and by_name["sl2_h3"].expected["invariant_count"] == 2
    assert by_name["aff1"].expected["invariant_count"] == 0
    assert by_name["abelian3"].expected["invariant_count"] == 3
    assert len(by_name) == 11
