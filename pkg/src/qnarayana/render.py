"""Text, JSON, CSV and LaTeX renderings of polynomials and triangular tables.

Text output groups by descending power of x with coefficient polynomials in
ascending order, e.g. ``x^4 - (1+q+q^2) x^2 + q``; objects free of x are
flat, e.g. ``1 + q^2 t``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .exactalg import (
    ONE,
    Poly,
    RatFunc,
    format_poly,
    ratfunc_to_json,
)
from .moments import TriangularTable

__all__ = ["FORMATS", "to_text", "to_latex", "render_object", "render_table", "table_to_json"]

FORMATS = ("text", "json", "csv", "latex")


def _is_negative(p: Poly) -> bool:
    return all(c < 0 for _, c in p.items())


def _group_coeff(c: Poly) -> tuple[bool, str]:
    """Sign and body of an x-coefficient: ``(True, "1+q+q^2")`` for ``-(1+q+q^2)``."""
    neg = _is_negative(c)
    a = -c if neg else c
    if len(a) == 1:
        return neg, format_poly(a)
    return neg, f"({format_poly(a, sep='')})"


def _poly_text(p: Poly) -> str:
    if "x" not in p.variables():
        return format_poly(p)
    out = []
    for k, c in sorted(p.coefficients("x").items(), reverse=True):
        neg, body = _group_coeff(c)
        xs = "x" if k == 1 else f"x^{k}" if k else ""
        if xs and body == "1":
            term = xs
        elif xs:
            term = f"{body} {xs}"
        else:
            term = body
        if not out:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" {'-' if neg else '+'} {term}")
    return "".join(out)


def to_text(obj) -> str:
    if isinstance(obj, (int, Fraction)):
        obj = Poly.const(obj)
    if isinstance(obj, Poly):
        return _poly_text(obj)
    f = RatFunc.coerce(obj)
    if f.den == ONE:
        return _poly_text(f.num)
    if "x" in f.num.variables() and "x" not in f.den.variables():
        # x-polynomial with rational coefficients
        out = []
        for k, c in sorted(f.num.coefficients("x").items(), reverse=True):
            coeff = RatFunc(c, f.den)
            xs = "x" if k == 1 else f"x^{k}" if k else ""
            if coeff.den == ONE:
                neg, body = _group_coeff(coeff.num)
            else:
                neg = _is_negative(coeff.num)
                n = -coeff.num if neg else coeff.num
                body = f"({format_poly(n, sep='')})/({format_poly(coeff.den, sep='')})"
            if body == "1" and xs:
                term = xs
            else:
                term = f"{body} {xs}" if xs else body
            if not out:
                out.append(f"-{term}" if neg else term)
            else:
                out.append(f" {'-' if neg else '+'} {term}")
        return "".join(out)
    return f"({format_poly(f.num)}) / ({format_poly(f.den)})"


def _latex_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _latex_poly(p: Poly, descending_x: bool = True) -> str:
    if not p:
        return "0"
    items = list(p.items())
    if descending_x:
        items.sort(key=lambda mc: -mc[0][2])
    out = []
    for m, c in items:
        neg = c < 0
        a = -c if neg else c
        mono = "".join(
            name if e == 1 else f"{name}^{{{e}}}" for name, e in zip("qtx", m) if e
        )
        if not mono:
            body = _latex_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = _latex_coeff(a) + " " + mono
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" {'-' if neg else '+'} {body}")
    return "".join(out)


def to_latex(obj) -> str:
    f = RatFunc.coerce(obj)
    if f.den == ONE:
        return _latex_poly(f.num)
    return rf"\frac{{{_latex_poly(f.num)}}}{{{_latex_poly(f.den)}}}"


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False, ensure_ascii=True)


def render_object(label: str, values: dict[int, object], fmt: str) -> str:
    """Render ``{n: object}`` for one family or moment sequence."""
    if fmt == "text":
        return "\n".join(to_text(v) for v in values.values())
    if fmt == "latex":
        return "\n".join(to_latex(v) for v in values.values())
    if fmt == "json":
        return _dump(
            {"object": label, "values": [{"n": n, "value": ratfunc_to_json(v)} for n, v in values.items()]}
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["object", "n", "value"])
        for n, v in values.items():
            w.writerow([label, n, to_text(v)])
        return buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown format {fmt!r}; valid formats: {', '.join(FORMATS)}")


def table_to_json(table: TriangularTable) -> dict:
    return {
        "table": table.name,
        "N": table.N,
        "rows": [[ratfunc_to_json(e) for e in row] for row in table.rows()],
    }


def render_table(table: TriangularTable, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(" | ".join(to_text(e) for e in row) for row in table.rows())
    if fmt == "latex":
        lines = [r"\begin{array}{" + "c" * (table.N + 1) + "}"]
        for row in table.rows():
            lines.append(" & ".join(to_latex(e) for e in row) + r" \\")
        lines.append(r"\end{array}")
        return "\n".join(lines)
    if fmt == "json":
        return _dump(table_to_json(table))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        for n, row in enumerate(table.rows()):
            for k, e in enumerate(row):
                w.writerow([n, k, to_text(e)])
        return buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown format {fmt!r}; valid formats: {', '.join(FORMATS)}")
