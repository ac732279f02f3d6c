"""Search for a differential operator on ``R`` sending ``c^2`` to 1.

For a diagonal action and an invariant monomial ``c = x^c``, an
``R^q``-linear map ``R -> R`` with ``theta(x^{2c}) = 1`` only has to be
defined on the residue piece of ``R`` containing ``2c``.  Untwisted, that
piece is ``S_beta'`` with generator set ``G`` and ``x^{2c}`` sits at
``m0 = (2c - v)/q``; a map of fine degree ``-m0`` sends each generator ``g``
to ``a_g x^{g - m0}``.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from .errors import FrontierInconclusive, InputError, InvariantViolation, PresentationIncomplete
from .lattice import WeightSystem, divide_character, in_supp
from .monomial import hilbert_basis, invariant_monomials, minimal_generators

__all__ = ["Witness", "dsimplicity_witness_search", "witness_at", "replay_witness"]


@dataclass
class Witness:
    q: int
    residue: Tuple[int, ...]
    anchor: Tuple[int, ...]  # m0, untwisted position of x^{2c}
    images: Dict[Tuple[int, ...], int]  # generator g -> coefficient a_g
    method: str  # "projection" or "linear-solve"
    verified: bool = False
    tried: Tuple[int, ...] = field(default=())

    def table(self):
        """Rows ``(x^(q g + v), coefficient, x^(q (g - m0)))`` for the nonzero images."""
        rows = []
        for g, a in sorted(self.images.items()):
            if a:
                src = tuple(self.q * gi + vi for gi, vi in zip(g, self.residue))
                dst = tuple(self.q * (gi - mi) for gi, mi in zip(g, self.anchor))
                rows.append((src, a, dst))
        return rows


def _geq(a, b):
    return all(x >= y for x, y in zip(a, b))


def _overlaps(ws, beta, g, h, cutoff):
    """Minimal common multiples ``w`` of ``g`` and ``h`` inside ``M_beta``."""
    lcm = tuple(max(a, b) for a, b in zip(g, h))
    try:
        rest = minimal_generators(ws, beta - ws.degree(lcm), cutoff)
    except FrontierInconclusive as exc:
        raise PresentationIncomplete(str(exc)) from exc
    return [tuple(a + b for a, b in zip(lcm, n)) for n in rest]


def _solve(ws, beta, gens, m0, cutoff):
    """Solve for the coefficients ``a_g`` over the prime field."""
    p = ws.prime
    idx = {g: i for i, g in enumerate(gens)}
    n = len(gens)
    eqs = []
    one = [0] * n
    one[idx[m0]] = 1
    eqs.append((one, 1))
    for g in gens:
        if not _geq(g, m0):
            row = [0] * n
            row[idx[g]] = 1
            eqs.append((row, 0))
    for i, g in enumerate(gens):
        for h in gens[i + 1:]:
            for w in _overlaps(ws, beta, g, h, cutoff):
                if _geq(w, m0):
                    row = [0] * n
                    row[idx[g]] += int(_geq(g, m0))
                    row[idx[h]] -= int(_geq(h, m0))
                    if any(row):
                        eqs.append((row, 0))
    F = GF(p)
    aug = DomainMatrix([[F(c) for c in row] + [F(b)] for row, b in eqs], (len(eqs), n + 1), F)
    rref, pivots = aug.rref()
    if n in pivots:
        return None
    sol = [0] * n
    rows = rref.to_Matrix()
    for r, col in enumerate(pivots):
        sol[col] = int(rows[r, n]) % p
    return {g: sol[idx[g]] for g in gens}


def witness_at(ws: WeightSystem, c_exponent: Sequence[int], q: int,
               relation_cutoff: Optional[int] = None, method: str = "auto") -> Optional[Witness]:
    """Witness at a single ``q``; ``method`` forces one route (``projection`` or ``linear-solve``)."""
    if method not in ("auto", "projection", "linear-solve"):
        raise InputError(f"unknown witness method {method!r}")
    two_c = tuple(2 * a for a in c_exponent)
    v = tuple(a % q for a in two_c)
    m0 = tuple((a - b) // q for a, b in zip(two_c, v))
    beta = divide_character(-ws.degree(v), q).to_character()
    gens = minimal_generators(ws, beta)
    if m0 not in gens:
        return None
    # fine-graded projection: every other generator must stay clear of m0 + Lambda_0
    if method != "linear-solve":
        if all(g == m0 or not in_supp(ws, beta - ws.degree(tuple(max(a, b) for a, b in zip(g, m0))))
               for g in gens):
            return Witness(q, v, m0, {g: int(g == m0) for g in gens}, "projection")
        if method == "projection":
            return None
    images = _solve(ws, beta, list(gens), m0, relation_cutoff)
    if images is None:
        return None
    return Witness(q, v, m0, images, "linear-solve")


def replay_witness(ws: WeightSystem, c_exponent: Sequence[int], wit: Witness, window: Optional[int] = None) -> bool:
    """Re-evaluate the witness on invariant monomials and check it post hoc.

    Checks ``theta(x^{2c}) = 1`` and ``theta(h^q f) = h^q theta(f)`` for every
    algebra generator ``h`` of ``R`` and every invariant monomial ``f`` in the
    window.
    """
    q, v, m0 = wit.q, wit.residue, wit.anchor
    gens = sorted(wit.images)
    p = ws.prime

    def theta(m):
        if any((a - b) % q for a, b in zip(m, v)):
            return None
        mp = tuple((a - b) // q for a, b in zip(m, v))
        if not _geq(mp, m0):
            return None
        g = next(g for g in gens if _geq(mp, g))
        coeff = wit.images[g] % p
        if not coeff:
            return None
        return coeff, tuple(q * (a - b) for a, b in zip(mp, m0))

    two_c = tuple(2 * a for a in c_exponent)
    if theta(two_c) != (1, (0,) * ws.d):
        return False
    hb = hilbert_basis(ws)
    if window is None:
        window = sum(two_c) + q * max((sum(h) for h in hb), default=1) + 2
    for f in invariant_monomials(ws, window):
        tf = theta(f)
        for h in hb:
            lhs = theta(tuple(a + q * b for a, b in zip(f, h)))
            rhs = None if tf is None else (tf[0], tuple(a + q * b for a, b in zip(tf[1], h)))
            if lhs != rhs:
                return False
    return True


def dsimplicity_witness_search(ws: WeightSystem, c_exponent: Sequence[int], q_max: int,
                               relation_cutoff: Optional[int] = None) -> Optional[Witness]:
    """Try ``q = p, p^2, ... <= q_max`` and return the first verified witness.

    ``None`` means no witness up to ``q_max``; that is inconclusive, not a
    proof that ``R`` fails to be D-simple.
    """
    c = tuple(int(a) for a in c_exponent)
    if len(c) != ws.d or min(c) < 0:
        raise InputError(f"c must be an exponent vector in N^{ws.d}")
    if not ws.degree(c).is_zero():
        raise InputError(f"x^{c} is not invariant: degree {ws.degree(c)}")
    tried = []
    q = ws.prime
    while q <= q_max:
        tried.append(q)
        wit = witness_at(ws, c, q, relation_cutoff)
        if wit is not None:
            if not replay_witness(ws, c, wit):
                raise InvariantViolation(f"witness at q = {q} failed replay")
            wit.verified = True
            wit.tried = tuple(tried)
            return wit
        q *= ws.prime
    return None
