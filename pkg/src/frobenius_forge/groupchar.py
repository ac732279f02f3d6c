"""Frobenius pushforwards for finite groups of order prime to ``p``.

Representations are handled through characters over ``Q(zeta_m)``.  The
group acts on ``W`` and each conjugacy class is described by the exponents
``a_j`` of its eigenvalues ``zeta^a_j`` on ``W``.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .cyclotomic import Cyclotomic
from .dynamics import MultiplicityMatrix
from .errors import InputError, InvariantViolation, NonIntegralMultiplicity

__all__ = [
    "ConjugacyClassData",
    "CharacterTable",
    "ClassFunction",
    "FiniteGroupAction",
    "truncation_character",
    "frobenius_twist",
    "decompose_into_irreducibles",
    "pushforward_multiplicities",
    "group_multiplicity_direct",
    "group_multiplicity_matrix",
]


@dataclass(frozen=True)
class ConjugacyClassData:
    size: int
    eigenvalue_exponents: Tuple[int, ...]


@dataclass(frozen=True)
class ClassFunction:
    values: Tuple[Cyclotomic, ...]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if len(other.values) != len(self.values):
            raise InputError("class functions on different class sets")
        return ClassFunction(tuple(a * b for a, b in zip(self.values, other.values)))


class CharacterTable:
    """Irreducible characters, one row each, trivial character first.

    The first class must be the identity.  Row orthogonality is verified
    exactly on construction.
    """

    def __init__(self, m: int, classes: Sequence[ConjugacyClassData], rows, names=None):
        self.m = m
        self.classes = tuple(ConjugacyClassData(int(c.size), tuple(a % m for a in c.eigenvalue_exponents))
                             for c in classes)
        self.rows = tuple(tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(m, v) for v in r)
                          for r in rows)
        self.names = tuple(names) if names else tuple(f"U{i}" for i in range(len(self.rows)))
        k = len(self.classes)
        if k == 0 or len(self.rows) != k or any(len(r) != k for r in self.rows):
            raise InputError(f"character table must be square over the {k} classes")
        first = self.classes[0]
        if first.size != 1 or any(first.eigenvalue_exponents):
            raise InputError("the first conjugacy class must be the identity")
        dims = {len(c.eigenvalue_exponents) for c in self.classes}
        if len(dims) != 1:
            raise InputError("every class must list dim W eigenvalue exponents")
        if any(v != 1 for v in self.rows[0]):
            raise InputError("the first row must be the trivial character")
        for i, ri in enumerate(self.rows):
            for j, rj in enumerate(self.rows):
                ip = self.inner(ri, rj)
                if ip != (1 if i == j else 0):
                    raise InputError(f"rows {i} and {j} violate orthogonality: <chi_i, chi_j> = {ip}")
        self._by_values = {r: i for i, r in enumerate(self.rows)}

    @property
    def order(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def dim_w(self) -> int:
        return len(self.classes[0].eigenvalue_exponents)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(int(r[0].to_fraction()) for r in self.rows)

    def inner(self, f, g) -> Cyclotomic:
        total = Cyclotomic.rational(self.m, 0)
        for c, a, b in zip(self.classes, f, g):
            total = total + a * b.conj() * c.size
        return total / self.order

    def character(self, i: int) -> ClassFunction:
        return ClassFunction(self.rows[i])

    def index_of(self, cf: ClassFunction) -> Optional[int]:
        return self._by_values.get(tuple(cf.values))


@dataclass(frozen=True)
class FiniteGroupAction:
    table: CharacterTable
    prime: int

    def __post_init__(self):
        if gcd(self.prime, self.table.order) != 1:
            raise InputError(f"p = {self.prime} divides |G| = {self.table.order}")
        if gcd(self.prime, self.table.m) != 1:
            raise InputError(f"p = {self.prime} and m = {self.table.m} are not coprime")

    @property
    def has_pseudo_reflections(self) -> bool:
        """Some non-identity element fixes a hyperplane; then R(U_i) may split further."""
        n = self.table.dim_w
        return any(sum(1 for a in c.eigenvalue_exponents if a % self.table.m == 0) == n - 1
                   for c in self.table.classes[1:])


def _geometric(m: int, a: int, q: int) -> Cyclotomic:
    """``1 + z^a + ... + z^(a(q-1))``; only the counts per residue matter."""
    counts = {}
    for t in range(min(q, m)):
        reps = (q - t + m - 1) // m  # number of s < q with s = t mod m
        k = a * t % m
        counts[k] = counts.get(k, 0) + reps
    return Cyclotomic.from_powers(m, counts)


def truncation_character(classes: Sequence[ConjugacyClassData], q: int, m: int) -> ClassFunction:
    """Character of ``S / S_+^[q]``: at a class, ``prod_j sum_{t<q} z^(a_j t)``."""
    vals = []
    for c in classes:
        v = Cyclotomic.rational(m, 1)
        for a in c.eigenvalue_exponents:
            v = v * _geometric(m, a, q)
        vals.append(v)
    return ClassFunction(tuple(vals))


def frobenius_twist(cf: ClassFunction, e: int, p: int, m: int) -> ClassFunction:
    """Apply ``z -> z^t`` with ``t p^e = 1 mod m`` to every value."""
    if gcd(p, m) != 1:
        raise InputError(f"p = {p} and m = {m} are not coprime")
    t = pow(pow(p, e, m), -1, m) if m > 1 else 1
    return ClassFunction(tuple(v.galois(t) for v in cf.values))


def decompose_into_irreducibles(cf: ClassFunction, table: CharacterTable) -> Tuple[int, ...]:
    out = []
    for i, row in enumerate(table.rows):
        ip = table.inner(cf.values, row)
        if not ip.is_rational():
            raise NonIntegralMultiplicity(f"multiplicity of {table.names[i]} is irrational: {ip}")
        val = ip.to_fraction()
        if val.denominator != 1 or val < 0:
            raise NonIntegralMultiplicity(f"multiplicity of {table.names[i]} is {val}")
        out.append(int(val))
    return tuple(out)


def group_multiplicity_direct(action: FiniteGroupAction, e: int, j: int = 0) -> Tuple[int, ...]:
    """Multiplicities of each ``R(U_i)`` in ``e R(U_j)``."""
    t = action.table
    q = action.prime ** e
    cf = truncation_character(t.classes, q, t.m) * t.character(j)
    mults = decompose_into_irreducibles(frobenius_twist(cf, e, action.prime, t.m), t)
    dims = t.degrees
    if sum(a * b for a, b in zip(mults, dims)) != q ** t.dim_w * dims[j]:
        raise InvariantViolation("weighted column identity failed")
    return mults


def pushforward_multiplicities(action: FiniteGroupAction, e: int) -> Tuple[int, ...]:
    """Multiplicity of ``R(U_i)`` in ``eR`` for each irreducible ``U_i``."""
    if e < 1:
        raise InputError("pushforward exponent e must be >= 1")
    return group_multiplicity_direct(action, e, 0)


def group_multiplicity_matrix(action: FiniteGroupAction) -> MultiplicityMatrix:
    """``E`` over the irreducibles reachable from the trivial one, ranks = degrees."""
    t = action.table
    cols = {}
    order: List[int] = [0]
    todo = [0]
    while todo:
        j = todo.pop(0)
        cols[j] = group_multiplicity_direct(action, 1, j)
        for i, n in enumerate(cols[j]):
            if n and i not in cols and i not in todo:
                todo.append(i)
                order.append(i)
    idx = sorted(order)
    E = tuple(tuple(cols[j][i] for j in idx) for i in idx)
    mm = MultiplicityMatrix(E, tuple(t.names[i] for i in idx), tuple(t.degrees[i] for i in idx),
                            action.prime, t.dim_w)
    mm.rank_identity = "verified"
    return mm
