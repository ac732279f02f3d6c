"""
Closure, the multiplicity matrix and its Perron limit
======================================================

Starting from R, pushing forward repeatedly reaches finitely many classes.
The one-step counts form a matrix E; its powers give every later step.
"""

from frobenius_forge import (closure_classes, multiplicity_matrix, perron, primitivity,
                             sfr_positivity_certificate, strongly_critical_classes, wielandt_bound)

from _rings import quadric, segre

for name, ws in (("quadric cone, p=3", quadric(3)), ("Segre, p=3", segre(3))):
    print(f"--- {name}")
    closure = closure_classes(ws)
    print("closure:", closure.verdict, [str(c) for c in closure.classes])
    # the same list from the strongly critical degrees, found by exact LP
    assert closure.keys == [c.canonical_key for c in strongly_critical_classes(ws)]

    E = multiplicity_matrix(ws, closure)
    for row in E.entries:
        print("  ", row)
    print("ranks", E.ranks, "rank identity", E.rank_identity)

    u = primitivity(E.entries)
    print(f"E^{u} is positive (Wielandt bound {wielandt_bound(E.n)})")
    data = perron(E)
    print("limit of E^e / p^(dim e):")
    for row in data.exact_limit:
        print("  ", [str(x) for x in row])
    print("positivity certificate:", sfr_positivity_certificate(E).verdict)

# A block-diagonal pattern never becomes positive.
print(sfr_positivity_certificate(((4, 0), (0, 4))).statement)
