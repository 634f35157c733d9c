import csv
import io
import json

import pytest

from qnarayana.exactalg import RatFunc, q, ratfunc_from_json, t, x
from qnarayana.families import qfib
from qnarayana.moments import closed_table, moment
from qnarayana.render import render_object, render_table, table_to_json, to_latex, to_text


def test_text_groups_by_x():
    assert to_text(qfib(4)) == "x^4 - (1+q+q^2) x^2 + q"
    assert to_text(qfib(3)) == "x^3 - (1+q) x"
    assert to_text(moment("q_narayana", 2)) == "1 + q^2 t"
    assert to_text(qfib(0)) == "1"
    assert to_text(0) == "0"
    assert to_text(-x) == "-x"


def test_text_rational_coefficients():
    f = x**2 - RatFunc(2 * q * t, 1 + t) * x
    assert to_text(f) == "x^2 - (2 q t)/(1+t) x"
    assert to_text(RatFunc(1, 1 + q)) == "(1) / (1 + q)"


def test_latex():
    assert to_latex(qfib(2)) == "x^{2} - 1"
    assert to_latex(RatFunc(q, 1 + t)) == r"\frac{q}{1 + t}"
    assert to_latex(RatFunc(1, 2) * q) == r"\frac{1}{2} q"


def test_object_formats_roundtrip():
    values = {n: qfib(n) for n in range(4)}
    data = json.loads(render_object("qfib", values, "json"))
    assert data["object"] == "qfib"
    assert [ratfunc_from_json(v["value"]) for v in data["values"]] == list(values.values())
    rows = list(csv.reader(io.StringIO(render_object("qfib", values, "csv"))))
    assert rows[0] == ["object", "n", "value"]
    assert rows[4] == ["qfib", "3", "x^3 - (1+q) x"]
    with pytest.raises(ValueError):
        render_object("qfib", values, "yaml")


def test_table_formats():
    table = closed_table("a_qfib", 3)
    assert render_table(table, "text").splitlines()[3] == "0 | 1 + q | 0 | 1"
    latex = render_table(table, "latex").splitlines()
    assert latex[0].startswith(r"\begin{array}") and latex[-1] == r"\end{array}"
    assert latex[4] == r"0 & 1 + q & 0 & 1 \\"
    data = table_to_json(table)
    assert data["N"] == 3 and len(data["rows"][3]) == 4
    assert render_table(table, "json") == render_table(table, "json")
    rows = list(csv.reader(io.StringIO(render_table(table, "csv"))))
    assert rows[0] == ["n", "k", "value"] and len(rows) == 1 + 10
