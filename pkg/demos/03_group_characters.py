"""
The same counts from characters
================================

For a finite group acting on W, the multiplicity of an irreducible U in
the e-th pushforward is read off the character of the truncated symmetric
algebra.  For cyclic groups this must agree with the monomial counts.
"""

from frobenius_forge import (CharacterTable, ConjugacyClassData, CovariantClass, Cyclotomic, FiniteGroupAction,
                             group_multiplicity_matrix, pushforward_decompose, pushforward_multiplicities)

from _rings import diagonal


def cyclic(m, exps, p):
    classes = [ConjugacyClassData(1, tuple(k * a % m for a in exps)) for k in range(m)]
    rows = [[Cyclotomic.zeta(m, i * k % m) for k in range(m)] for i in range(m)]
    return FiniteGroupAction(CharacterTable(m, classes, rows, [f"U{i}" for i in range(m)]), p)


act = cyclic(3, (1, 2), 7)
ws = diagonal(0, (3,), [((), (1,)), ((), (2,))], 7)
for e in (1, 2):
    by_chars = pushforward_multiplicities(act, e)
    rep = pushforward_decompose(ws, CovariantClass.free(ws), e)
    by_degree = {c.degree.torsion[0]: n for c, n in rep.entries.values()}
    by_monomials = tuple(by_degree.get(-k % 3, 0) for k in range(3))
    print(f"e={e}: characters {by_chars}  monomials {by_monomials}")

# S3 acting on the standard plus sign representation, p=5.
one = Cyclotomic.rational(6, 1)
classes = [ConjugacyClassData(1, (0, 0, 0)), ConjugacyClassData(3, (0, 3, 3)), ConjugacyClassData(2, (2, 4, 0))]
table = CharacterTable(6, classes, [[one, one, one], [one, -one, one], [one * 2, one * 0, -one]],
                       ["triv", "sign", "std"])
s3 = FiniteGroupAction(table, 5)
E = group_multiplicity_matrix(s3)
print("S3, p=5:", E.labels)
for row in E.entries:
    print("  ", row)
print("contains a pseudo-reflection:", s3.has_pseudo_reflections)
