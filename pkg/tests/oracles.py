"""Brute-force reference computations used to check the library.

Nothing here imports the engines' algorithms; each oracle works straight
from the definitions on small boxes of exponents.
"""

import cmath
import itertools

import numpy as np
import sympy as sp
from scipy.optimize import linprog


def degree(weights, tors_orders, m):
    """(free part, torsion part) of x^m for weights given as (free tuple, torsion tuple)."""
    r = len(weights[0][0])
    free = tuple(sum(mi * w[0][k] for mi, w in zip(m, weights)) for k in range(r))
    tors = tuple(sum(mi * w[1][k] for mi, w in zip(m, weights)) % o for k, o in enumerate(tors_orders))
    return free, tors


def box(d, n):
    return itertools.product(range(n), repeat=d)


def minimal(points):
    pts = set(points)
    return sorted(p for p in pts
                  if not any(o != p and all(a <= b for a, b in zip(o, p)) for o in pts))


def key(gens):
    """Generators up to translation: shift each coordinate to start at 0, then sort."""
    if not gens:
        return None
    lo = [min(g[i] for g in gens) for i in range(len(gens[0]))]
    return tuple(sorted(tuple(a - b for a, b in zip(g, lo)) for g in gens))


def residue_classes(weights, tors_orders, base_gens_degree, q, side):
    """Pieces of the pushforward of the module {m : deg m = beta}.

    Returns {key: count} and the number of empty pieces.  For every residue
    v in [0, q)^d the piece is {m' : deg(q m' + v) = beta}; its generators
    are found as minimal elements of a box of side ``side``.
    """
    d = len(weights)
    out = {}
    empty = 0
    for v in box(d, q):
        pts = [mp for mp in box(d, side)
               if degree(weights, tors_orders, tuple(q * a + b for a, b in zip(mp, v))) == base_gens_degree]
        k = key(minimal(pts))
        if k is None:
            empty += 1
        else:
            out[k] = out.get(k, 0) + 1
    return out, empty


def class_key(weights, tors_orders, beta, side):
    pts = [m for m in box(len(weights), side) if degree(weights, tors_orders, m) == beta]
    return key(minimal(pts))


def reachable(weights, tors_orders, beta, side):
    return any(degree(weights, tors_orders, m) == beta for m in box(len(weights), side))


def strongly_critical_lp(free_weights, chi, eps_floor=1e-7):
    """Float LP: is chi = sum u_i alpha_i with u_i in (-1, 0]?"""
    d = len(free_weights)
    r = len(chi)
    if r == 0:
        return True
    # variables w_1..w_d (w = -u), eps; maximize eps
    c = [0.0] * d + [-1.0]
    A_eq = [[float(free_weights[i][k]) for i in range(d)] + [0.0] for k in range(r)]
    b_eq = [-float(x) for x in chi]
    A_ub = [[1.0 if j == i else 0.0 for j in range(d)] + [1.0] for i in range(d)]
    b_ub = [1.0] * d
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq,
                  bounds=[(0, None)] * d + [(0, 1)], method="highs")
    return res.status == 0 and -res.fun > eps_floor


def numeric_group_multiplicities(m, class_sizes, exponents, chars, p, e, j=0):
    """Multiplicity of each irreducible in the e-th pushforward of R(U_j), in floating point."""
    z = cmath.exp(2j * cmath.pi / m)
    q = p ** e
    order = sum(class_sizes)
    chi = [[complex(sp.N(sp.sympify(v).subs("z", sp.exp(2 * sp.pi * sp.I / m)))) for v in row] for row in chars]
    t_inv = pow(q, -1, m)
    out = []
    # twisting z -> z^t, t = q^-1 mod m, is the same as evaluating every class value at z^t
    for i in range(len(chars)):
        acc = 0
        for c, size in enumerate(class_sizes):
            tr = 1
            for a in exponents[c]:
                tr *= sum(z ** (a * t_inv * k) for k in range(q))
            twisted_chi_j = _galois_numeric(chars[j][c], m, t_inv)
            acc += size * tr * twisted_chi_j * chi[i][c].conjugate()
        out.append(acc / order)
    return out


def _galois_numeric(value, m, t):
    expr = sp.sympify(value)
    zz = sp.Symbol("z")
    return complex(sp.N(expr.subs(zz, sp.exp(2 * sp.pi * sp.I * t / m))))


def trace_matrix_direct(basis_products, gens, n):
    """Trace form from multiplication matrices built by sympy."""
    def mult_matrix(i):
        return sp.Matrix(n, n, lambda row, col: basis_products[(i, col)][row])
    mats = [mult_matrix(i) for i in range(n)]
    return sp.Matrix(n, n, lambda a, b: sp.expand((mats[a] * mats[b]).trace()))


def mat_power(E, e):
    return np.linalg.matrix_power(np.array(E, dtype=object), e).tolist()
