"""Weight lattices, semigroup membership and strongly critical characters.

A grading group is ``Z^r + Z/m_1 + ... + Z/m_s``.  The variables of the
polynomial ring ``S = k[x_1..x_d]`` carry weights in it, and the invariant
ring ``R`` is the degree-zero part.  Characters are small immutable value
objects; all arithmetic is exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple

from sympy import QQ, isprime
from sympy.polys.matrices import DomainMatrix

from .errors import InputError
from .simplex import maximize

__all__ = [
    "GradingGroup",
    "Character",
    "RationalCharacter",
    "WeightSystem",
    "divide_character",
    "multiply_character",
    "in_supp",
    "is_strongly_critical",
    "strongly_critical_certificate",
    "solution_norm_bound",
    "exact_rank",
]


def exact_rank(rows) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    n = len(rows[0])
    M = DomainMatrix([[QQ(int(v.numerator), int(v.denominator)) if isinstance(v, Fraction) else QQ(v) for v in r]
                      for r in rows], (len(rows), n), QQ)
    return M.rank()


@dataclass(frozen=True)
class Character:
    """An element of ``Z^r + (+) Z/m_j``; torsion entries kept reduced."""

    free: Tuple[int, ...]
    torsion: Tuple[int, ...] = ()
    orders: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.torsion) != len(self.orders):
            raise InputError(f"torsion part {self.torsion} does not match orders {self.orders}")
        object.__setattr__(self, "free", tuple(int(v) for v in self.free))
        object.__setattr__(self, "torsion", tuple(int(t) % m for t, m in zip(self.torsion, self.orders)))

    def _same(self, other):
        if len(self.free) != len(other.free) or self.orders != other.orders:
            raise InputError("characters belong to different grading groups")

    def __add__(self, other):
        self._same(other)
        return Character(tuple(a + b for a, b in zip(self.free, other.free)),
                         tuple(a + b for a, b in zip(self.torsion, other.torsion)), self.orders)

    def __neg__(self):
        return Character(tuple(-a for a in self.free), tuple(-a for a in self.torsion), self.orders)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "Character":
        return Character(tuple(k * a for a in self.free), tuple(k * a for a in self.torsion), self.orders)

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def __str__(self):
        parts = [",".join(str(a) for a in self.free)] if self.free else []
        parts += [f"{t} mod {m}" for t, m in zip(self.torsion, self.orders)]
        return "(" + "; ".join(parts) + ")"


@dataclass(frozen=True)
class RationalCharacter:
    """Free part in ``Q^r`` plus an honest torsion element."""

    free: Tuple[Fraction, ...]
    torsion: Tuple[int, ...] = ()
    orders: Tuple[int, ...] = ()

    def is_integral(self) -> bool:
        return all(f.denominator == 1 for f in self.free)

    def to_character(self) -> Character:
        if not self.is_integral():
            raise InputError(f"{self} has a non-integral free part")
        return Character(tuple(int(f) for f in self.free), self.torsion, self.orders)

    def __str__(self):
        parts = [",".join(str(a) for a in self.free)] if self.free else []
        parts += [f"{t} mod {m}" for t, m in zip(self.torsion, self.orders)]
        return "(" + "; ".join(parts) + ")"


@dataclass(frozen=True)
class GradingGroup:
    free_rank: int = 0
    torsion_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(int(m) for m in self.torsion_orders))
        if self.free_rank < 0:
            raise InputError("free rank must be nonnegative")
        bad = [m for m in self.torsion_orders if m < 2]
        if bad:
            raise InputError(f"torsion orders must be >= 2, got {bad}")

    def character(self, free=(), torsion=()) -> Character:
        free = tuple(free) or (0,) * self.free_rank
        torsion = tuple(torsion) or (0,) * len(self.torsion_orders)
        if len(free) != self.free_rank:
            raise InputError(f"expected {self.free_rank} free components, got {len(free)}")
        return Character(free, torsion, self.torsion_orders)

    def zero(self) -> Character:
        return self.character()

    def torsion_elements(self):
        """All torsion tuples, in lexicographic order."""
        out = [()]
        for m in self.torsion_orders:
            out = [t + (i,) for t in out for i in range(m)]
        return out


@dataclass(frozen=True)
class WeightSystem:
    """Weights of ``x_1..x_d`` together with the characteristic ``p``.

    ``positivity`` is a positive integer degree per variable (the N-grading
    of ``S``); it orders enumerations and defaults to the standard grading.
    """

    grading: GradingGroup
    weights: Tuple[Character, ...]
    prime: int
    positivity: Optional[Tuple[int, ...]] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise InputError("at least one variable is required")
        if not isprime(self.prime):
            raise InputError(f"p = {self.prime} is not prime")
        for m in self.grading.torsion_orders:
            if gcd(self.prime, m) != 1:
                raise InputError(f"p = {self.prime} and torsion order {m} are not coprime (gcd(p, m_j) = 1 required)")
        for w in self.weights:
            if len(w.free) != self.grading.free_rank or w.orders != self.grading.torsion_orders:
                raise InputError(f"weight {w} does not lie in the grading group")
        if self.positivity is None:
            object.__setattr__(self, "positivity", (1,) * len(self.weights))
        else:
            object.__setattr__(self, "positivity", tuple(int(g) for g in self.positivity))
        if len(self.positivity) != len(self.weights) or min(self.positivity) <= 0:
            raise InputError("positivity must give a positive degree to every variable")

    @property
    def d(self) -> int:
        return len(self.weights)

    @property
    def krull_dim(self) -> int:
        return self.d - exact_rank([w.free for w in self.weights])

    def degree(self, m: Sequence[int]) -> Character:
        """``sum m_i alpha_i``."""
        free = [0] * self.grading.free_rank
        tors = [0] * len(self.grading.torsion_orders)
        for mi, w in zip(m, self.weights):
            if mi:
                for k, a in enumerate(w.free):
                    free[k] += mi * a
                for k, a in enumerate(w.torsion):
                    tors[k] += mi * a
        return Character(tuple(free), tuple(tors), self.grading.torsion_orders)

    def g_degree(self, m: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(m, self.positivity))

    def zero(self) -> Character:
        return self.grading.zero()


def multiply_character(chi: Character, q: int) -> Character:
    return chi.scale(q)


def divide_character(chi: Character, q: int) -> RationalCharacter:
    """Exact division by ``q``; torsion is multiplied by ``q^-1 mod m_j``."""
    tors = []
    for t, m in zip(chi.torsion, chi.orders):
        if gcd(q, m) != 1:
            raise InputError(f"cannot divide by {q} in Z/{m}: gcd(q, m) = {gcd(q, m)}")
        tors.append(t * pow(q, -1, m) % m)
    return RationalCharacter(tuple(Fraction(a, q) for a in chi.free), tuple(tors), chi.orders)


def solution_norm_bound(ws: WeightSystem, chi: Character) -> int:
    """Upper bound on ``|m|_1`` for every minimal element of ``{m in N^d : deg m = chi}``.

    Minimal elements lift to Hilbert basis elements ``(m, y, 1)`` of the
    homogenized system (free rows, plus one row per torsion factor with a
    nonnegative slack ``y_j``), so Pottier's bound
    ``|x|_1 <= (1 + max_row |a_i|_1)^rank`` applies.
    """
    s = len(ws.grading.torsion_orders)
    rows = []
    for k in range(ws.grading.free_rank):
        rows.append([w.free[k] for w in ws.weights] + [0] * s + [-chi.free[k]])
    for j, mj in enumerate(ws.grading.torsion_orders):
        slack = [0] * s
        slack[j] = -mj
        rows.append([w.torsion[j] for w in ws.weights] + slack + [-chi.torsion[j]])
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    norm = max(sum(abs(v) for v in r) for r in rows)
    return (1 + norm) ** exact_rank(rows) - 1


@lru_cache(maxsize=None)
def _reachable(ws: WeightSystem, chi: Character) -> bool:
    if chi.is_zero():
        return True
    bound = solution_norm_bound(ws, chi)
    seen = {ws.zero()}
    frontier = {ws.zero()}
    for _ in range(bound):
        new = set()
        for s in frontier:
            for w in ws.weights:
                t = s + w
                if t not in seen:
                    new.add(t)
        if chi in new:
            return True
        if not new:
            return False
        seen |= new
        frontier = new
    return False


def in_supp(ws: WeightSystem, chi: Character) -> bool:
    """Whether ``chi = sum a_i alpha_i`` with ``a_i`` natural numbers.

    Breadth-first dynamic programming over reachable degrees by total
    exponent, stopped at the Hilbert-basis norm bound, so the answer is exact.
    """
    return _reachable(ws, chi)


def strongly_critical_certificate(ws: WeightSystem, chi):
    """Return ``(verdict, u, slack)`` for the strongly-critical LP.

    Solves ``max eps`` subject to ``sum u_i alpha_i = chi`` on free parts,
    ``-1 + eps <= u_i <= 0`` and ``0 <= eps <= 1``.  ``chi`` may be a
    :class:`Character` or :class:`RationalCharacter`.
    """
    r = ws.grading.free_rank
    if r == 0:
        return True, (Fraction(0),) * ws.d, Fraction(1)
    d = ws.d
    # variables: w_i = -u_i (i < d), then eps
    A_eq = [[w.free[k] for w in ws.weights] + [0] for k in range(r)]
    b_eq = [-Fraction(chi.free[k]) for k in range(r)]
    A_ub = []
    b_ub = []
    for i in range(d):
        row = [0] * (d + 1)
        row[i] = 1
        row[d] = 1
        A_ub.append(row)
        b_ub.append(1)
    A_ub.append([0] * d + [1])
    b_ub.append(1)
    res = maximize([0] * d + [1], A_ub, b_ub, A_eq, b_eq)
    if res.status != "optimal":
        return False, None, None
    u = tuple(-v for v in res.x[:d])
    return res.value > 0, u, res.value


def is_strongly_critical(ws: WeightSystem, chi) -> bool:
    """Free part of ``chi`` is ``sum u_i alpha_i`` with every ``u_i`` in ``(-1, 0]``."""
    return strongly_critical_certificate(ws, chi)[0]
