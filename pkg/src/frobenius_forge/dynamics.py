"""Growth of multiplicities under iterated Frobenius.

Everything is integer or ``Fraction`` arithmetic.  The dominant eigenvalue
is never searched for: the rank vector supplies the candidate eigenpair
``w E = p^dim w``, and we certify it exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import EigenCheckFailed, Inconclusive, InputError, InvariantViolation, NotPrimitive

__all__ = [
    "MultiplicityMatrix",
    "PerronData",
    "SFRCertificate",
    "MinFinDim",
    "BlockReport",
    "mat_mul",
    "mat_pow",
    "wielandt_bound",
    "primitivity",
    "perron",
    "sfr_positivity_certificate",
    "min_findim_sequence",
    "semisimple_block_report",
]

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass
class MultiplicityMatrix:
    entries: Matrix
    labels: tuple
    ranks: Tuple[int, ...]
    p: int
    dim: int
    rank_identity: str = "not evaluated"

    def __post_init__(self):
        self.entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise InputError("multiplicity matrix must be square")
        if any(v < 0 for row in self.entries for v in row):
            raise InputError("multiplicity matrix must be nonnegative")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise InputError("labels must be distinct, one per class")
        if len(self.ranks) != n or min(self.ranks, default=1) <= 0:
            raise InputError("ranks must be positive, one per class")

    @property
    def n(self) -> int:
        return len(self.entries)

    def power(self, e: int) -> Matrix:
        return mat_pow(self.entries, e)


def mat_mul(A, B):
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def mat_pow(A, e: int):
    n = len(A)
    result = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    base = A
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def wielandt_bound(n: int) -> int:
    return (n - 1) ** 2 + 1


def _entries(E):
    return E.entries if isinstance(E, MultiplicityMatrix) else tuple(tuple(r) for r in E)


def _pattern_powers(A):
    """Yield ``(u, pattern of A^u)`` for u = 1 .. Wielandt bound."""
    n = len(A)
    P = tuple(tuple(v > 0 for v in row) for row in A)
    cur = P
    for u in range(1, wielandt_bound(n) + 1):
        yield u, cur
        cur = tuple(tuple(any(cur[i][k] and P[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def primitivity(E) -> Optional[int]:
    """Smallest ``u`` with ``E^u`` entrywise positive, or ``None``.

    Searching up to Wielandt's bound ``(n-1)^2 + 1`` makes ``None`` a proof.
    """
    for u, pat in _pattern_powers(_entries(E)):
        if all(all(row) for row in pat):
            return u
    return None


@dataclass
class PerronData:
    lam: int
    verified: bool
    left_eigenvector: Tuple[int, ...]
    right_eigenvector: Tuple[Fraction, ...]
    limit_matrix: Tuple[Tuple[Fraction, ...], ...]
    exact_limit: Tuple[Tuple[Fraction, ...], ...]
    limit_exponent: int
    primitivity_exponent: int
    tolerance: Fraction


def _max_diff(A, B) -> Fraction:
    return max(abs(a - b) for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def perron(E: MultiplicityMatrix, tolerance=Fraction(1, 10 ** 9), max_squarings: int = 16) -> PerronData:
    """Certify ``w E = p^dim w`` and compute ``lim E^e / p^(dim e)``.

    The limit is approached by repeated squaring of ``E / p^dim`` in exact
    rationals until successive iterates agree within ``tolerance``; it is
    also computed in closed form ``v w / (w . v)`` from the exact right
    eigenvector, and the two must agree.
    """
    tolerance = Fraction(tolerance)
    A = E.entries
    n = E.n
    u = primitivity(A)
    if u is None:
        raise NotPrimitive("no power of E is strictly positive within the Wielandt bound")
    lam = E.p ** E.dim
    w = E.ranks
    wE = tuple(sum(w[i] * A[i][j] for i in range(n)) for j in range(n))
    if wE != tuple(lam * x for x in w):
        raise EigenCheckFailed(
            f"rank vector is not a left eigenvector for p^dim = {lam}: w E = {wE}; "
            f"the weight image may have torsion interacting with p")

    M = DomainMatrix([[QQ(A[i][j] - (lam if i == j else 0)) for j in range(n)] for i in range(n)], (n, n), QQ)
    null = M.nullspace().to_Matrix()
    if null.rows != 1:
        raise InvariantViolation(f"eigenvalue {lam} has geometric multiplicity {null.rows}, expected 1")
    v = [Fraction(int(x.p), int(x.q)) for x in null.row(0)]
    if v[0] < 0:
        v = [-x for x in v]
    wv = sum(wi * vi for wi, vi in zip(w, v))
    exact = tuple(tuple(v[i] * w[j] / wv for j in range(n)) for i in range(n))
    if any(x <= 0 for row in exact for x in row):
        raise InvariantViolation("Perron limit has a non-positive entry")

    cur = tuple(tuple(Fraction(x, lam) for x in row) for row in A)
    exponent = 1
    for _ in range(max_squarings):
        nxt = mat_mul(cur, cur)
        exponent *= 2
        if _max_diff(nxt, cur) < tolerance:
            cur = nxt
            break
        cur = nxt
    else:
        raise Inconclusive(f"E^e / p^(dim e) did not settle within tolerance after e = {exponent}")
    if _max_diff(cur, exact) >= tolerance:
        raise InvariantViolation("squared iterate disagrees with the closed-form Perron limit")
    return PerronData(lam, True, tuple(w), tuple(v), cur, exact, exponent, u, tolerance)


@dataclass
class SFRCertificate:
    verdict: str  # "CertifiedPositivity" or "Failed"
    u: Optional[int]
    bound: int
    statement: str = ("row and column of R in E^u are strictly positive; strong F-regularity forces this "
                      "pattern, so this is a necessary-condition check and does not prove strong F-regularity")


def sfr_positivity_certificate(E, index_of_R: int = 0) -> SFRCertificate:
    A = _entries(E)
    n = len(A)
    for u, pat in _pattern_powers(A):
        if all(pat[index_of_R][j] for j in range(n)) and all(pat[i][index_of_R] for i in range(n)):
            return SFRCertificate("CertifiedPositivity", u, wielandt_bound(n))
    return SFRCertificate("Failed", None, wielandt_bound(n),
                          f"no power E^u with u <= {wielandt_bound(n)} has positive row and column at R")


@dataclass
class MinFinDim:
    sequence: List[int]
    running_sup: List[int]
    verdict: str  # "NoFiniteDimensionalReps" or "Inconclusive"


def min_findim_sequence(columns: Sequence, d_vec: Optional[Sequence[int]] = None, E=None) -> MinFinDim:
    """Smallest simple-module dimension of ``End_R(eR)`` for each ``e``.

    ``columns[e-1][i]`` is ``m(e, M_i, R)``; it may also be a
    :class:`DecompositionReport`, read in its canonical order.  ``d_vec``
    gives ``dim End(M_i)/rad`` per class (default 1).  Supplying the
    matrix ``E`` lets the verdict use primitivity: a primitive ``E`` with
    dominant eigenvalue above 1 drives every ``m(e, M, R)`` to infinity.
    """
    seq = []
    sups = []
    for col in columns:
        if hasattr(col, "entries"):
            col = [n for _, n in col.entries.values()]
        dv = d_vec or [1] * len(col)
        vals = [d * m for d, m in zip(dv, col) if m]
        seq.append(min(vals))
        sups.append(max(sups[-1], seq[-1]) if sups else seq[-1])
    verdict = "Inconclusive"
    if E is not None and primitivity(E) is not None:
        lam = E.p ** E.dim if isinstance(E, MultiplicityMatrix) else None
        if lam is not None and lam > 1:
            verdict = "NoFiniteDimensionalReps"
    return MinFinDim(seq, sups, verdict)


@dataclass
class BlockReport:
    labels: List[str]
    multiplicities: List[int]
    division_dims: List[int]
    simple_dims: List[int] = field(init=False)

    def __post_init__(self):
        self.simple_dims = [a * d for a, d in zip(self.multiplicities, self.division_dims)]

    def blocks(self) -> str:
        return " x ".join(f"M({a}, {'k' if d == 1 else f'D{i}'})"
                          for i, (a, d) in enumerate(zip(self.multiplicities, self.division_dims)))

    def lines(self) -> List[str]:
        out = [f"End_R(eR) / rad = {self.blocks()}"]
        for i, (lab, a, d, s) in enumerate(zip(self.labels, self.multiplicities, self.division_dims,
                                               self.simple_dims)):
            out.append(f"  block {i} [{lab}]: {a}x{a} matrices over a division algebra of dimension {d}; "
                       f"simple module dimension {s}; maximal ideal P_{i} = maps whose ({i},{i}) block "
                       f"has only non-invertible entries")
        return out


def semisimple_block_report(multiplicities: Sequence[int], d_vec: Optional[Sequence[int]] = None,
                            labels: Optional[Sequence[str]] = None) -> BlockReport:
    """Describe ``End_R(M)/rad`` for ``M = (+) M_i^{a_i}`` as a product of matrix rings."""
    a = [int(x) for x in multiplicities]
    if any(x < 1 for x in a):
        raise InputError("block multiplicities must be >= 1")
    d = list(d_vec) if d_vec is not None else [1] * len(a)
    labels = list(labels) if labels is not None else [f"M{i}" for i in range(len(a))]
    return BlockReport(labels, a, d)
