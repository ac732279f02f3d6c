"""Differential operators on truncated polynomial windows.

An operator on ``S = k[x_1..x_d]`` (``k = F_p``, or ``Q`` when the
characteristic is 0) is stored by its values on the monomials of total
degree below ``window``.  Outputs of degree ``>= window`` are cut off, so only
inputs up to ``safe_degree`` have exactly known images; every verdict is
computed on that safe part.
"""

import itertools
from math import comb
from typing import Callable, Dict, Optional, Sequence, Tuple

from .errors import InputError, WindowTooSmall

__all__ = [
    "TruncatedOperator",
    "monomials_upto",
    "mult_op",
    "hasse_op",
    "frobenius_projection_op",
    "rq_linear_op",
    "op_sum",
    "op_compose",
    "commutator",
    "operator_order",
    "is_rq_linear",
]

Mono = Tuple[int, ...]
Poly = Dict[Mono, object]
OpFunc = Callable[[Mono], Poly]


def monomials_upto(nvars: int, max_degree: int):
    """Monomials of total degree ``<= max_degree``, graded then lexicographic."""
    out = []
    for deg in range(max_degree + 1):
        for c in itertools.combinations_with_replacement(range(nvars), deg):
            m = [0] * nvars
            for i in c:
                m[i] += 1
            out.append(tuple(m))
    return out


def _norm(poly: Poly, char: int) -> Poly:
    if char:
        return {m: c % char for m, c in poly.items() if c % char}
    return {m: c for m, c in poly.items() if c}


def _add(a: Poly, b: Poly, char: int, sign: int = 1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sign * c
    return _norm(out, char)


def _shift(poly: Poly, mono: Mono) -> Poly:
    return {tuple(a + b for a, b in zip(m, mono)): c for m, c in poly.items()}


def _deg(m: Mono) -> int:
    return sum(m)


class TruncatedOperator:
    def __init__(self, nvars: int, char: int, window: int, matrix: Dict[Mono, Poly], safe_degree: int,
                 order_bound: Optional[int] = None):
        self.order_bound = order_bound  # a priori bound on the order, when known from the construction
        self.nvars = nvars
        self.char = char
        self.window = window
        self.matrix = matrix
        self.safe_degree = safe_degree

    @classmethod
    def from_function(cls, f: OpFunc, nvars: int, char: int, window: int,
                      order_bound: Optional[int] = None) -> "TruncatedOperator":
        """Tabulate ``f`` on monomials of degree ``< window``.

        The degree shift observed on the window fixes ``safe_degree``.
        """
        if char and char < 2:
            raise InputError("characteristic must be 0 or a prime")
        shift = 0
        matrix = {}
        for m in monomials_upto(nvars, window - 1):
            out = _norm(f(m), char)
            for o in out:
                shift = max(shift, _deg(o) - _deg(m))
            matrix[m] = {o: c for o, c in out.items() if _deg(o) < window}
        return cls(nvars, char, window, matrix, window - 1 - shift, order_bound)

    def apply(self, m: Mono) -> Poly:
        if _deg(m) > self.safe_degree:
            raise WindowTooSmall(f"input degree {_deg(m)} exceeds safe degree {self.safe_degree}")
        return self.matrix[m]

    def safe_monomials(self, slack: int = 0):
        return [m for m in self.matrix if _deg(m) <= self.safe_degree - slack]

    def is_zero(self) -> bool:
        return not any(self.apply(m) for m in self.safe_monomials())

    def dense(self):
        """Matrix on the window's monomial basis (columns = inputs)."""
        basis = monomials_upto(self.nvars, self.window - 1)
        idx = {m: i for i, m in enumerate(basis)}
        rows = [[0] * len(basis) for _ in basis]
        for m, out in self.matrix.items():
            for o, c in out.items():
                rows[idx[o]][idx[m]] = c
        return basis, rows


def mult_op(exp: Sequence[int], coeff=1) -> OpFunc:
    exp = tuple(exp)
    return lambda m: {tuple(a + b for a, b in zip(m, exp)): coeff}


def hasse_op(b: Sequence[int], coeff=1) -> OpFunc:
    """Divided-power derivative: ``x^m -> prod C(m_i, b_i) x^(m - b)``."""
    b = tuple(b)

    def f(m):
        if any(mi < bi for mi, bi in zip(m, b)):
            return {}
        c = coeff
        for mi, bi in zip(m, b):
            c *= comb(mi, bi)
        return {tuple(mi - bi for mi, bi in zip(m, b)): c}

    return f


def frobenius_projection_op(p: int) -> OpFunc:
    """``x^m -> x^m`` when every exponent is divisible by ``p``, else 0."""
    return lambda m: {m: 1} if all(a % p == 0 for a in m) else {}


def rq_linear_op(q: int, images: Dict[Mono, Poly]) -> OpFunc:
    """The ``S^q``-linear map sending ``x^v`` (``0 <= v_i < q``) to ``images[v]``."""
    def f(m):
        v = tuple(a % q for a in m)
        base = tuple(a - b for a, b in zip(m, v))
        return _shift(images.get(v, {}), base)

    return f


def op_sum(*terms: OpFunc) -> OpFunc:
    def f(m):
        out: Poly = {}
        for t in terms:
            for o, c in t(m).items():
                out[o] = out.get(o, 0) + c
        return out

    return f


def op_compose(outer: OpFunc, inner: OpFunc) -> OpFunc:
    def f(m):
        out: Poly = {}
        for o, c in inner(m).items():
            for o2, c2 in outer(o).items():
                out[o2] = out.get(o2, 0) + c * c2
        return out

    return f


def commutator(theta: TruncatedOperator, i: int) -> TruncatedOperator:
    """``[x_i, theta]``, exact on inputs of degree ``<= safe_degree - 1``."""
    e = tuple(int(k == i) for k in range(theta.nvars))
    safe = theta.safe_degree - 1
    if safe < 0:
        raise WindowTooSmall("no safe inputs left for another commutator")
    matrix = {}
    for m in theta.safe_monomials(1):
        xm = tuple(a + b for a, b in zip(m, e))
        matrix[m] = _add(_shift(theta.apply(m), e), theta.apply(xm), theta.char, -1)
    return TruncatedOperator(theta.nvars, theta.char, theta.window, matrix, safe)


def operator_order(theta: TruncatedOperator, max_order: int) -> Optional[int]:
    """Smallest ``n`` such that all ``(n+1)``-fold commutators with the variables vanish.

    Exact for operators of order at most ``max_order``: such an operator,
    and every commutator of it, is fixed by its values in degrees
    ``<= max_order``, so a safe degree of ``max_order`` settles the question.
    ``None`` means the order exceeds ``max_order``.  Commutators with
    different variables commute, so multisets of variable indices suffice.
    """
    if theta.safe_degree < max_order:
        raise WindowTooSmall(f"safe degree {theta.safe_degree} cannot certify orders up to {max_order}")
    layer = {(): theta}
    for n in range(max_order + 1):
        nxt = {}
        for key, op in layer.items():
            start = key[-1] if key else 0
            for i in range(start, theta.nvars):
                nxt[key + (i,)] = commutator(op, i)
        if all(op.is_zero() for op in nxt.values()):
            return n
        layer = nxt
    return None


def is_rq_linear(theta: TruncatedOperator, q: int) -> bool:
    """``theta(x_i^q m) = x_i^q theta(m)`` for every variable and safe ``m``."""
    mons = theta.safe_monomials(q)
    if not mons:
        raise WindowTooSmall(f"safe degree {theta.safe_degree} < q = {q}")
    for i in range(theta.nvars):
        e = tuple(q * int(k == i) for k in range(theta.nvars))
        for m in mons:
            lhs = theta.apply(tuple(a + b for a, b in zip(m, e)))
            if _add(lhs, _shift(theta.apply(m), e), theta.char, -1):
                return False
    return True
