"""
Splitting a Frobenius pushforward into covariant classes
=========================================================

A residue v in [0, q)^d contributes the monomial piece x^v R^q.  Pieces
with the same untwisted degree are the same covariant module, so the
pushforward is a multiset of classes plus a count of empty pieces.
"""

from frobenius_forge import CovariantClass, pushforward_decompose

from _rings import quadric, segre

for name, ws in (("quadric cone, p=3", quadric(3)), ("Segre, p=2", segre(2))):
    print(f"--- {name}")
    R = CovariantClass.free(ws)
    for e in (1, 2):
        rep = pushforward_decompose(ws, R, e)
        for cls, n in rep.entries.values():
            print(f"  e={e}  {n:4d} x {cls}")
        print(f"  e={e}  {rep.zero_piece_count} empty pieces, {rep.total()} summands")
        # every residue is either a summand or empty
        rep.check_conservation()

# For the Segre ring at p=2 half the residues carry no invariants at all:
# x^v R^q is zero whenever deg v is not reachable from an R^q-multiple.
