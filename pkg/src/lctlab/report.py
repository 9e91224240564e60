"""JSON and CSV rendering. Rationals never become floats: JSON carries
``{"num": p, "den": q}`` (``+inf`` is ``{"num": 1, "den": 0}``) and CSV
carries ``p/q`` or ``inf``."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from fractions import Fraction

from .algebra import Ideal, Polynomial, is_infinite

SCHEMA = "lct-lab/1"


def rational(value) -> dict | None:
    if value is None:
        return None
    if is_infinite(value):
        return {"num": 1, "den": 0}
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def from_rational(obj: dict):
    if obj["den"] == 0:
        return float("inf")
    return Fraction(obj["num"], obj["den"])


def rational_text(value) -> str:
    if value is None:
        return ""
    if is_infinite(value):
        return "inf"
    return str(Fraction(value))


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction) or isinstance(obj, float):
        return rational(obj)
    if isinstance(obj, Polynomial):
        return obj.to_string()
    if isinstance(obj, Ideal):
        return {"n": obj.n, "generators": [g.to_string() for g in obj.generators]}
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def document(input_: dict, method: str, **payload) -> dict:
    doc = {"schema": SCHEMA, "input": input_, "method": method}
    diagnostics = payload.pop("diagnostics", {})
    doc.update(payload)
    doc["diagnostics"] = diagnostics
    return jsonable(doc)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


SEQUENCE_COLUMNS = ["construction", "parameter", "predicted", "certified",
                    "bracket-lower", "bracket-upper"]


def csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([rational_text(v) if isinstance(v, (Fraction, float)) else
                    ("" if v is None else v) for v in row])
    return buf.getvalue()
