"""Frobenius pushforwards for diagonalizable group actions.

The summand of ``eS_beta`` spanned by exponents ``m = q m' + v`` with fixed
residue ``v`` is, after untwisting, the module ``S_beta'`` with
``beta' = (beta - deg v) / q``.  Class labels follow that convention: a
piece is recorded under the degree ``beta'`` of the module it untwists to.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import List, Optional

from .dynamics import MultiplicityMatrix
from .errors import BudgetExceeded, InputError, InvariantViolation, NotFFRT
from .lattice import Character, WeightSystem, divide_character, in_supp, is_strongly_critical
from .monomial import CovariantClass, DecompositionReport, minimal_generators

__all__ = [
    "ClosureResult",
    "DEFAULT_BUDGET",
    "closure_classes",
    "multiplicity_direct",
    "multiplicity_matrix",
    "pushforward_decompose",
    "residue_degree_counts",
    "strongly_critical_classes",
]

DEFAULT_BUDGET = 10 ** 12

SIGN_CONVENTION = ("residue v of eS_beta is labelled by beta' = (beta - deg v)/q, the degree of the "
                   "module it untwists to; a strongly critical chi labels S_chi")


def residue_degree_counts(ws: WeightSystem, q: int):
    """``{deg v: #v}`` over ``v in [0, q)^d``, by convolving one variable at a time."""
    zero = ws.zero()
    counts = {zero: 1}
    for w in ws.weights:
        new = defaultdict(int)
        steps = [w.scale(t) for t in range(q)]
        for deg, c in counts.items():
            for s in steps:
                new[deg + s] += c
        counts = new
    return counts


@lru_cache(maxsize=None)
def _piece(ws: WeightSystem, beta: Character, delta: Character, q: int) -> Optional[CovariantClass]:
    shifted = divide_character(beta - delta, q)
    if not shifted.is_integral():
        return None
    target = shifted.to_character()
    gens = minimal_generators(ws, target)
    return CovariantClass(target, gens) if gens else None


def pushforward_decompose(ws: WeightSystem, cls: CovariantClass, e: int,
                          budget: int = DEFAULT_BUDGET, method: str = "convolve") -> DecompositionReport:
    """Decompose ``eM`` for ``M = cls`` into covariant classes.

    ``method="enumerate"`` walks every residue ``v`` explicitly;
    ``"convolve"`` first tallies residues by degree, which gives the same
    multiset far faster for large ``q``.
    """
    if e < 1:
        raise InputError("pushforward exponent e must be >= 1")
    q = ws.prime ** e
    if q ** ws.d > budget:
        raise BudgetExceeded(f"q^d = {q}^{ws.d} exceeds the enumeration budget {budget}")
    if method == "convolve":
        tally = residue_degree_counts(ws, q).items()
    elif method == "enumerate":
        t = defaultdict(int)
        for v in itertools.product(range(q), repeat=ws.d):
            t[ws.degree(v)] += 1
        tally = t.items()
    else:
        raise InputError(f"unknown method {method!r}")
    entries = {}
    zero = 0
    for delta, count in tally:
        piece = _piece(ws, cls.degree, delta, q)
        if piece is None:
            zero += count
            continue
        key = piece.canonical_key
        if key in entries:
            rep, n = entries[key]
            if (piece.degree.free, piece.degree.torsion) < (rep.degree.free, rep.degree.torsion):
                rep = piece
            entries[key] = (rep, n + count)
        else:
            entries[key] = (piece, count)
    report = DecompositionReport(e, q, ws.d, entries, zero, source=cls)
    report.check_conservation()
    return report


@dataclass
class ClosureResult:
    classes: List[CovariantClass]
    verdict: str  # "FFRT" or "Inconclusive"
    iterations: int

    @property
    def keys(self):
        return [c.canonical_key for c in self.classes]


def closure_classes(ws: WeightSystem, budget: int = 16, enum_budget: int = DEFAULT_BUDGET) -> ClosureResult:
    """Close ``{R}`` under one-step pushforward; FFRT once a round adds nothing."""
    R = CovariantClass.free(ws)
    found = {R.canonical_key: R}
    frontier = [R]
    for it in range(1, budget + 1):
        new = []
        for cls in frontier:
            for piece in pushforward_decompose(ws, cls, 1, enum_budget).classes():
                if piece.canonical_key not in found:
                    found[piece.canonical_key] = piece
                    new.append(piece)
        if not new:
            return ClosureResult([found[k] for k in sorted(found)], "FFRT", it)
        frontier = sorted(new, key=lambda c: c.canonical_key)
    return ClosureResult([found[k] for k in sorted(found)], "Inconclusive", budget)


def strongly_critical_classes(ws: WeightSystem, max_points: int = 10 ** 6) -> List[CovariantClass]:
    """Classes ``S_chi`` for strongly critical ``chi`` lying in ``Supp S``.

    Scans the integer points of the box around the zonotope
    ``sum (-1, 0] alpha_i``, crossed with every torsion value.
    """
    r = ws.grading.free_rank
    ranges = []
    for k in range(r):
        lo = sum(min(0, -w.free[k]) for w in ws.weights)
        hi = sum(max(0, -w.free[k]) for w in ws.weights)
        ranges.append(range(lo, hi + 1))
    tors = ws.grading.torsion_elements()
    size = len(tors)
    for rg in ranges:
        size *= len(rg)
    if size > max_points:
        raise BudgetExceeded(f"zonotope scan of {size} points exceeds {max_points}")
    found = {}
    for free in itertools.product(*ranges):
        for t in tors:
            chi = Character(free, t, ws.grading.torsion_orders)
            if is_strongly_critical(ws, chi) and in_supp(ws, chi):
                cls = CovariantClass(chi, minimal_generators(ws, chi))
                found.setdefault(cls.canonical_key, cls)
    return [found[k] for k in sorted(found)]


def multiplicity_matrix(ws: WeightSystem, closure: Optional[ClosureResult] = None,
                        budget: int = 16) -> MultiplicityMatrix:
    """``E[i][j]`` = multiplicity of class ``i`` in the one-step pushforward of class ``j``."""
    closure = closure or closure_classes(ws, budget)
    if closure.verdict != "FFRT":
        raise NotFFRT(f"closure did not stabilize within {closure.iterations} rounds")
    keys = closure.keys
    index = {k: i for i, k in enumerate(keys)}
    n = len(keys)
    E = [[0] * n for _ in range(n)]
    for j, cls in enumerate(closure.classes):
        rep = pushforward_decompose(ws, cls, 1)
        for key, (_, mult) in rep.entries.items():
            if key not in index:
                raise InvariantViolation(f"pushforward of class {j} left the closed class set")
            E[index[key]][j] = mult
    mm = MultiplicityMatrix(tuple(tuple(r) for r in E), tuple(keys), (1,) * n, ws.prime, ws.krull_dim)
    tors = lcm(*ws.grading.torsion_orders) if ws.grading.torsion_orders else 1
    if tors % ws.prime == 0:
        mm.rank_identity = "unchecked: p divides the torsion of the weight image"
    else:
        target = ws.prime ** ws.krull_dim
        sums = [sum(E[i][j] for i in range(n)) for j in range(n)]
        if any(s != target for s in sums):
            raise InvariantViolation(
                f"column sums {sums} != p^dim = {target}; suspect an interaction between p and the "
                f"torsion of Z^d / (degree-zero lattice)")
        mm.rank_identity = "verified"
    return mm


def multiplicity_direct(ws: WeightSystem, e: int, Mi: CovariantClass, Mj: CovariantClass,
                        budget: int = DEFAULT_BUDGET) -> int:
    """``m(e, Mi, Mj)`` by a single e-step decomposition, no matrix powers."""
    return pushforward_decompose(ws, Mj, e, budget).multiplicity(Mi)
