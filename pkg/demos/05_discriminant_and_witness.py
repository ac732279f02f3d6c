"""
Discriminants and explicit splitting witnesses
===============================================

The trace form of a finite extension gives its discriminant.  For a
monomial c a witness is an R^q-linear map sending the q-th root of c to 1;
finding one for every c is what strong F-regularity asks for.
"""

import sympy as sp

from frobenius_forge import (RingExtensionPresentation, ZeroDiscriminant, discriminant,
                             dsimplicity_witness_search, trace_form)

from _rings import quadric

x = sp.Symbol("x")
for char in (0, 3, 2):
    ext = RingExtensionPresentation((x,), char, 2, {(1, 1): (x, 0)})  # k[x][y]/(y^2 - x)
    try:
        print(f"char {char}: trace form {trace_form(ext).tolist()}, discriminant {discriminant(ext)}")
    except ZeroDiscriminant as exc:
        print(f"char {char}: {exc}")

ws = quadric(3)
wit = dsimplicity_witness_search(ws, (2, 0), 27)
print(f"witness for x^2 on the quadric cone: q={wit.q}, tried {wit.tried}, verified {wit.verified}")
for src, coeff, image in wit.table():
    print(f"  x^{src} -> {coeff} * x^{image}")
