#!/usr/bin/env python3
"""Regenerate data/fixtures.csv from a KnotInfo/LinkInfo CSV export.

usage: make_fixtures.py <knotinfo_data_complete.csv> <linkinfo_data_complete.csv> > data/fixtures.csv

Polynomials are rewritten into the canonical `c*t^(e/2)` form used by the
library. Hand-picked diagrams live separately in data/curated_diagrams.json.
"""
import ast
import csv
import sys

import sympy

csv.field_size_limit(10**9)

KNOT_NAMES_EXTRA = {"10_22", "10_132", "11a_263"}
MAX_LINK_CROSSINGS = 7


def canonical_jones(expr_text, var):
    # var is "t" (integer powers) or "x" (x = t^(1/2))
    x = sympy.Symbol("x")
    text = expr_text.replace("^", "**")
    if var == "t":
        expr = sympy.sympify(text, locals={"t": x**2})
    else:
        expr = sympy.sympify(text, locals={"x": x})
    expr = sympy.expand(expr * x**200)
    poly = sympy.Poly(expr, x)
    terms = {m[0] - 200: int(c) for m, c in poly.terms()}
    parts = [f"{c}*t^({e}/2)" for e, c in sorted(terms.items()) if c != 0]
    return " + ".join(parts)


def pd_text(tuples):
    return " ".join("X[" + ",".join(str(v) for v in t) + "]" for t in tuples)


def knot_rows(path):
    rows = csv.reader(open(path), delimiter="|")
    header = next(rows)
    next(rows)
    for raw in rows:
        rec = dict(zip(header, raw))
        name = rec["name"]
        cr = int(rec["crossing_number"])
        if cr == 0:
            continue
        if cr > 9 and name not in KNOT_NAMES_EXTRA:
            continue
        unknotting = rec["unknotting_number"]
        if not unknotting.isdigit():
            unknotting = ""
        yield [
            name,
            pd_text(ast.literal_eval(rec["pd_notation"])),
            cr,
            1,
            "Y" if rec["alternating"] == "Y" else "N",
            rec["signature"],
            unknotting,
            canonical_jones(rec["jones_polynomial"], "t"),
        ]


def link_rows(path):
    rows = csv.reader(open(path), delimiter="|")
    header = next(rows)
    next(rows)
    for raw in rows:
        rec = dict(zip(header, raw))
        cr = int(rec["crossing_number"])
        if cr > MAX_LINK_CROSSINGS:
            continue
        yield [
            rec["name"],
            pd_text(ast.literal_eval(rec["pd_notation_vector"].replace("{", "[").replace("}", "]"))),
            cr,
            int(rec["components"]),
            "Y" if rec["alternating"] == "Y" else "N",
            rec["signature"],
            "",
            canonical_jones(rec["jones_polynomial"], "x"),
        ]


def main():
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["name", "pd_code", "crossing_number", "components", "alternating",
                  "signature", "unknotting_number", "jones"])
    for row in knot_rows(sys.argv[1]):
        out.writerow(row)
    for row in link_rows(sys.argv[2]):
        out.writerow(row)


if __name__ == "__main__":
    main()
