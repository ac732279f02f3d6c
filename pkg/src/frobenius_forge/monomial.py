"""Monomial modules of covariants ``S_beta`` and their canonical forms."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from .errors import FrontierInconclusive, InvariantViolation
from .lattice import Character, RationalCharacter, WeightSystem, divide_character, solution_norm_bound

__all__ = [
    "CovariantClass",
    "DecompositionReport",
    "canonical_key",
    "class_of_residue",
    "iso_test",
    "minimal_generators",
    "minimal_elements",
    "format_key",
    "hilbert_basis",
    "invariant_monomials",
]

Exponent = Tuple[int, ...]
Key = Tuple[Exponent, ...]


def canonical_key(generators) -> Key:
    """Translate so every coordinate's minimum is 0, then sort."""
    gens = list(generators)
    if not gens:
        return ()
    mins = [min(col) for col in zip(*gens)]
    return tuple(sorted(tuple(a - b for a, b in zip(g, mins)) for g in gens))


def format_key(key: Key) -> str:
    return "{" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in key) + "}"


def minimal_elements(points) -> Tuple[Exponent, ...]:
    """Minimal elements under the componentwise order, sorted."""
    pts = sorted(set(points), key=lambda m: (sum(m), m))
    out = []
    for m in pts:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class CovariantClass:
    """The module ``S_beta``, recorded by its minimal generating exponents."""

    degree: Character
    generators: Tuple[Exponent, ...]
    canonical_key: Key = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted(tuple(g) for g in self.generators)))
        object.__setattr__(self, "canonical_key", canonical_key(self.generators))

    @classmethod
    def free(cls, ws: WeightSystem) -> "CovariantClass":
        """The class of ``R`` itself."""
        return cls(ws.zero(), ((0,) * ws.d,))

    @property
    def is_free(self) -> bool:
        return len(self.generators) == 1

    def __str__(self):
        return f"S_{self.degree} {format_key(self.canonical_key)}"


def _points_with_degree(ws: WeightSystem, beta: Character, l1_bound=None, g_bound=None):
    """All ``m`` in ``N^d`` with ``deg m = beta`` and the given size bound."""
    d = ws.d
    r = ws.grading.free_rank
    orders = ws.grading.torsion_orders
    vecs = [w.free + w.torsion for w in ws.weights]
    target_f = beta.free
    target_t = beta.torsion
    g = ws.positivity
    out = []
    m = [0] * d

    def rec(i, acc, l1_left, g_left):
        if i == d:
            if tuple(acc[:r]) == target_f and all(
                    a % o == t for a, o, t in zip(acc[r:], orders, target_t)):
                out.append(tuple(m))
            return
        k = 0
        cur = list(acc)
        while True:
            m[i] = k
            rec(i + 1, cur, l1_left - k if l1_left is not None else None,
                g_left - k * g[i] if g_left is not None else None)
            k += 1
            if (l1_left is not None and k > l1_left) or (g_left is not None and k * g[i] > g_left):
                break
            cur = [a + b for a, b in zip(cur, vecs[i])]
        m[i] = 0

    rec(0, [0] * (r + len(orders)), l1_bound, g_bound)
    return out


@lru_cache(maxsize=None)
def _certified_generators(ws: WeightSystem, beta: Character) -> Tuple[Exponent, ...]:
    bound = solution_norm_bound(ws, beta)
    return minimal_elements(_points_with_degree(ws, beta, l1_bound=bound))


def minimal_generators(ws: WeightSystem, beta, degree_cutoff: Optional[int] = None) -> Tuple[Exponent, ...]:
    """Minimal elements of ``M_beta = {m in N^d : sum m_i alpha_i = beta}``.

    Without ``degree_cutoff`` the search runs to the Hilbert-basis norm bound
    and is complete.  With a cutoff (in ``g``-degree) the answer is accepted
    only if the certified bound is reached, or if a whole layer of width
    ``max g_i`` beyond the last generator found adds nothing.
    """
    if isinstance(beta, RationalCharacter):
        if not beta.is_integral():
            return ()
        beta = beta.to_character()
    if degree_cutoff is None:
        return _certified_generators(ws, beta)
    certified = solution_norm_bound(ws, beta) * max(ws.positivity)
    if degree_cutoff >= certified:
        return _certified_generators(ws, beta)
    pts = _points_with_degree(ws, beta, g_bound=degree_cutoff)
    gens = minimal_elements(pts)
    if not gens:
        raise FrontierInconclusive(f"no generator of degree {beta} found below g-degree {degree_cutoff}")
    last = max(ws.g_degree(m) for m in gens)
    if degree_cutoff < last + max(ws.positivity):
        raise FrontierInconclusive(
            f"cutoff {degree_cutoff} leaves no full layer beyond the last generator (g-degree {last})")
    return gens


def class_of_residue(ws: WeightSystem, base: CovariantClass, v: Sequence[int], e: int) -> Optional[CovariantClass]:
    """The summand of ``e(base)`` spanned by exponents congruent to ``v`` mod ``q``.

    Untwisting ``m = q m' + v`` identifies it with ``S_beta'`` where
    ``beta' = (beta - deg v) / q``; ``None`` when that module is zero.
    """
    q = ws.prime ** e
    shifted = divide_character(base.degree - ws.degree(v), q)
    if not shifted.is_integral():
        return None
    beta = shifted.to_character()
    gens = minimal_generators(ws, beta)
    if not gens:
        return None
    return CovariantClass(beta, gens)


def iso_test(c1: CovariantClass, c2: CovariantClass) -> bool:
    """Isomorphic up to degree shift: generator sets are translates of each other."""
    return c1.canonical_key == c2.canonical_key


@dataclass
class DecompositionReport:
    """Multiset of covariant classes making up ``eM`` (plus empty residue pieces)."""

    e: int
    q: int
    d: int
    entries: Dict[Key, Tuple[CovariantClass, int]]
    zero_piece_count: int
    source: Optional[CovariantClass] = None

    def __post_init__(self):
        self.entries = dict(sorted(self.entries.items()))

    def multiplicity(self, cls) -> int:
        key = cls.canonical_key if isinstance(cls, CovariantClass) else cls
        return self.entries.get(key, (None, 0))[1]

    def classes(self):
        return [c for c, _ in self.entries.values()]

    def total(self) -> int:
        return sum(n for _, n in self.entries.values())

    def check_conservation(self) -> None:
        if self.total() + self.zero_piece_count != self.q ** self.d:
            raise InvariantViolation(
                f"conservation failed: {self.total()} summands + {self.zero_piece_count} empty pieces "
                f"!= q^d = {self.q ** self.d}")
        if any(n < 1 for _, n in self.entries.values()):
            raise InvariantViolation("stored multiplicity below 1")


@lru_cache(maxsize=None)
def hilbert_basis(ws: WeightSystem) -> Tuple[Exponent, ...]:
    """Minimal nonzero exponents of invariant monomials (algebra generators of ``R``)."""
    zero = ws.zero()
    bound = solution_norm_bound(ws, zero) + 1
    pts = [m for m in _points_with_degree(ws, zero, l1_bound=bound) if any(m)]
    return minimal_elements(pts)


def invariant_monomials(ws: WeightSystem, l1_bound: int):
    return _points_with_degree(ws, ws.zero(), l1_bound=l1_bound)
