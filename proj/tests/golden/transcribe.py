#!/usr/bin/env python3
"""Regenerate the golden JSON files from hand-transcribed printed values.

The strings below are copied verbatim (LaTeX spacing aside) from the printed
formulas; sympy expands them, so no lcat code is involved in producing the
expected values.  Run from this directory: python3 transcribe.py
"""
import json
import re

import sympy as sp

q, t = sp.symbols("q t")


def parse(tex):
    s = tex.replace("\\\\", " ").replace("&", " ")
    s = re.sub(r"\\hspace\{[^}]*\}", " ", s)
    s = s.replace("{", "(").replace("}", ")")
    s = re.sub(r"(\d)\s*([qt(])", r"\1*\2", s)
    s = re.sub(r"([qt)])\s*([qt(])", r"\1*\2", s)
    s = s.replace("^", "**")
    return sp.expand(sp.sympify(s, locals={"q": q, "t": t}))


def uni(expr):
    p = sp.Poly(sp.expand(expr * q**200), q)
    return [[e - 200, str(c)] for (e,), c in sorted(p.terms()) if c != 0]


def bi(expr):
    p = sp.Poly(expr, q, t)
    return [[[a, b], str(c)] for (a, b), c in sorted(p.terms())]


def dump(name, obj):
    with open(name, "w") as f:
        f.write(json.dumps(obj, separators=(",", ":")))


dump("cat_7_2.json", uni(parse(r"""q^{12} + q^{11} + 2 q^{10} + 2 q^9 + 3 q^8 + 3 q^7
  + 3 q^6 + 3 q^5 + 3 q^4 + 2 q^3 + 2 q^2 + q + 1""")))
dump("q7_catprime_7_2.json", uni(parse(r"""q^{14} + q^{13} + 2 q^{12} + q^{11} + 2 q^{10} + 2 q^9
  + 3 q^8 + 3 q^7 + 3 q^6 + 2 q^5 + 2 q^4 + q^3 + 2 q^2 + q + 1""")))
dump("cat4_qt.json", bi(parse(r"""q^6 + q^5 t + q^4 t^2 + 2 q^3 t^3 + q^2 t^4 + q t^5 + t^6
  + q^4 t + q^3 t^2 + q^2 t^3 + q t^4 + q^3 t + q t^3""")))
dump("catprime4_qt.json", bi(parse(r"""q^6 + q^5 t + q^4 t^2 + 2 q^3 t^3 + q^2 t^4 + q t^5 + t^6
  + q^3 + t^3 + q^2 + t^2 + q + t""")))
dump("motprime_4.json", uni(parse(r"q^8(q^8 + q^6 + q^5 + 2 q^4 + q^3 + 2 q^2 + 1)")))
dump("nps_D4_tfw2.json", uni(parse(r"""q^{14} + q^{13} + 2 q^{12} + q^{11} + 2 q^{10} + 2 q^9 + 3 q^8
  + 4 q^7 + 3 q^6 + 2 q^5 + 2 q^4 + q^3 + 2 q^2 + q + 1""")))
dump("d_plus.json", uni(parse(r"""q^{26} + 2q^{25} + 5q^{24} + 9q^{23} + 16q^{22} + 24q^{21} + 36q^{20}
  + 48q^{19} + 63q^{18} + 76q^{17} + 90q^{16} + 99q^{15} + 107q^{14} + 108q^{13} + 107q^{12}
  + 99q^{11} + 90q^{10} + 76q^{9} + 63q^{8} + 48q^{7} + 36q^{6} + 24q^{5} + 16q^{4} + 9q^{3}
  + 5q^{2} + 2q + 1""")))
dump("d_minus.json", uni(parse(r"""q^{24} + 2q^{23} + 5q^{22} + 10q^{21} + 18q^{20} + 28q^{19}
  + 43q^{18} + 58q^{17} + 76q^{16} + 92q^{15} + 106q^{14} + 114q^{13} + 119q^{12} + 114q^{11}
  + 106q^{10} + 92q^{9} + 76q^{8} + 58q^{7} + 43q^{6} + 28q^{5} + 18q^{4} + 10q^{3} + 5q^{2}
  + 2q + 1""")))


def matrix(rows, size):
    out = []
    for r in rows:
        cells = [uni(parse(c)) for c in r]
        out.append(cells + [[]] * (size - len(cells)))
    return out


dump("motprime_matrix_4.json", matrix([
    ["1"],
    ["1", "1"],
    ["q + 1", "q + 1", "1"],
    ["q^3 + q^2 + q + 1", "q^3 + 2q^2 + q + 1", "q^2 + q + 1", "1"],
], 4))
dump("riorprime_matrix_5.json", matrix([
    ["1"],
    ["0", "1"],
    ["1", "1", "1"],
    ["1", "q^2 + q + 1", "q + 1", "1"],
    ["q^4 + q^2 + 1", "q^4 + q^3 + 2q^2 + q + 1", "q^4 + q^3 + 2q^2 + q + 1", "q^2 + q + 1", "1"],
], 5))
