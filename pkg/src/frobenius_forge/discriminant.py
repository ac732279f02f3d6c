"""Trace-form discriminants of module-finite extensions ``T -> R``.

``R`` is presented over the polynomial ring ``T`` by a basis ``r_1 = 1, ..., r_n``
and structure constants ``r_i r_j = sum_k c_ijk r_k`` with ``c_ijk`` in ``T``.
The trace is taken in the regular representation, so all entries stay
polynomial and the determinant is fraction-free.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import sympy as sp

from .errors import InputError, ZeroDiscriminant

__all__ = ["RingExtensionPresentation", "trace_form", "discriminant", "reduce_mod_p"]


def reduce_mod_p(expr, gens, p: int):
    """Reduce a polynomial with rational coefficients modulo ``p`` (0 leaves it alone)."""
    expr = sp.expand(expr)
    if not p:
        return expr
    poly = sp.Poly(expr, *gens, domain=sp.QQ)
    out = 0
    for monom, coeff in poly.terms():
        num, den = int(coeff.p), int(coeff.q)
        if den % p == 0:
            raise InputError(f"coefficient {coeff} has denominator divisible by p = {p}")
        c = num * pow(den, -1, p) % p
        if c:
            term = sp.Integer(c)
            for g, k in zip(gens, monom):
                term *= g ** k
            out += term
    return sp.expand(out)


@dataclass
class RingExtensionPresentation:
    variables: Tuple[sp.Symbol, ...]
    characteristic: int
    basis_size: int
    structure: Dict[Tuple[int, int], Tuple[object, ...]]  # 0-based (i, j) -> coefficients over the basis

    def __post_init__(self):
        n = self.basis_size
        self.structure = {k: tuple(sp.sympify(c) for c in v) for k, v in self.structure.items()}
        for i in range(n):
            for j in range(n):
                if (i, j) not in self.structure:
                    if (j, i) in self.structure:
                        self.structure[(i, j)] = self.structure[(j, i)]
                    elif i == 0 or j == 0:
                        k = j if i == 0 else i
                        self.structure[(i, j)] = tuple(int(t == k) for t in range(n))
                    else:
                        raise InputError(f"missing product r{i + 1}*r{j + 1}")
                if len(self.structure[(i, j)]) != n:
                    raise InputError(f"product r{i + 1}*r{j + 1} needs {n} coefficients")
        for j in range(n):
            if not self._eq(self.structure[(0, j)], tuple(int(t == j) for t in range(n))):
                raise InputError("r1 must be the identity")
            for i in range(n):
                if not self._eq(self.structure[(i, j)], self.structure[(j, i)]):
                    raise InputError(f"multiplication is not commutative: r{i + 1}*r{j + 1} != r{j + 1}*r{i + 1}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not self._eq(self._triple(i, j, k, True), self._triple(i, j, k, False)):
                        raise InputError(f"multiplication is not associative on (r{i + 1}, r{j + 1}, r{k + 1})")

    def _eq(self, a, b) -> bool:
        return all(reduce_mod_p(x - y, self.variables, self.characteristic) == 0 for x, y in zip(a, b))

    def _triple(self, i, j, k, left):
        n = self.basis_size
        outer = self.structure[(i, j)] if left else self.structure[(j, k)]
        other = k if left else i
        return tuple(sum(outer[l] * self.structure[(l, other)][s] for l in range(n)) for s in range(n))


def trace_form(ext: RingExtensionPresentation) -> sp.Matrix:
    n = ext.basis_size
    tr = [sum(ext.structure[(k, l)][l] for l in range(n)) for k in range(n)]
    M = sp.Matrix(n, n, lambda i, j: sum(ext.structure[(i, j)][k] * tr[k] for k in range(n)))
    return M.applyfunc(lambda e: reduce_mod_p(e, ext.variables, ext.characteristic))


def discriminant(ext: RingExtensionPresentation):
    """``det(trace(r_i r_j))`` as a polynomial in ``T``, reduced mod the characteristic."""
    det = trace_form(ext).det(method="bareiss")
    det = reduce_mod_p(det, ext.variables, ext.characteristic)
    if det == 0:
        raise ZeroDiscriminant("trace form is degenerate: extension not generically separable")
    return det
