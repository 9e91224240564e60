import json
from fractions import Fraction as F

from hypothesis import given, strategies as st

from lctlab.algebra import INF
from lctlab.report import SCHEMA, csv_text, document, dumps, from_rational, rational


@given(st.fractions())
def test_rational_round_trip(x):
    assert from_rational(json.loads(json.dumps(rational(x)))) == x


def test_infinity_encoding():
    assert rational(INF) == {"num": 1, "den": 0}
    assert from_rational({"num": 1, "den": 0}) == INF


def test_document_layout():
    doc = document({"n": 1}, "m", value=F(1, 3), diagnostics={"k": 1})
    assert list(doc) == ["schema", "input", "method", "value", "diagnostics"]
    assert doc["schema"] == SCHEMA
    assert json.loads(dumps(doc))["value"] == {"num": 1, "den": 3}


def test_csv_uses_exact_text():
    assert csv_text(["a", "b"], [[F(5, 6), INF], [None, 3]]) == "a,b\n5/6,inf\n,3\n"
