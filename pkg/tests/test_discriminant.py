import random

import pytest
import sympy as sp

from frobenius_forge import InputError, RingExtensionPresentation, ZeroDiscriminant, discriminant, trace_form
from frobenius_forge.discriminant import reduce_mod_p

import oracles

x = sp.Symbol("x")


def sqrt_x(char):
    return RingExtensionPresentation((x,), char, 2, {(1, 1): (x, 0)})


def cube_root(char):
    # basis 1, y, y^2 with y^3 = x
    return RingExtensionPresentation((x,), char, 3, {(1, 1): (0, 0, 1), (1, 2): (x, 0, 0), (2, 2): (0, x, 0)})


def test_quadratic():
    assert trace_form(sqrt_x(0)) == sp.Matrix([[2, 0], [0, 2 * x]])
    assert discriminant(sqrt_x(0)) == 4 * x
    assert discriminant(sqrt_x(5)) == 4 * x
    assert discriminant(sqrt_x(3)) == x  # 4 = 1 mod 3
    with pytest.raises(ZeroDiscriminant):
        discriminant(sqrt_x(2))


def test_cubic():
    assert discriminant(cube_root(0)) == -27 * x ** 2
    assert discriminant(cube_root(5)) == 3 * x ** 2
    with pytest.raises(ZeroDiscriminant):
        discriminant(cube_root(3))


def test_trivial_extension():
    assert discriminant(RingExtensionPresentation((x,), 0, 1, {})) == 1


def test_trace_matches_direct_matrices():
    for ext in (sqrt_x(0), cube_root(0)):
        assert trace_form(ext) == oracles.trace_matrix_direct(ext.structure, ext.variables, ext.basis_size)


def test_presentation_validation():
    with pytest.raises(InputError, match="missing"):
        RingExtensionPresentation((x,), 0, 3, {(1, 1): (0, 0, 1)})
    with pytest.raises(InputError, match="associative"):
        RingExtensionPresentation((x,), 0, 3, {(1, 1): (0, 0, 1), (1, 2): (x, 0, 0), (2, 2): (0, 0, x)})
    with pytest.raises(InputError, match="commut"):
        RingExtensionPresentation((x,), 0, 3, {(1, 1): (0, 0, 1), (1, 2): (x, 0, 0), (2, 1): (0, x, 0),
                                               (2, 2): (0, x, 0)})
    with pytest.raises(InputError):
        reduce_mod_p(x / 3, (x,), 3)


def _rebased(ext, P):
    """Same ring in the basis s_i = sum_k P[i, k] r_k (P[0] = e_0, so s_1 = 1)."""
    n = ext.basis_size
    Pinv = P.inv()
    structure = {}
    for i in range(1, n):
        for j in range(i, n):
            prod = sp.zeros(1, n)
            for a in range(n):
                for b in range(n):
                    coeff = P[i, a] * P[j, b]
                    if coeff:
                        prod += coeff * sp.Matrix([ext.structure[(a, b)]])
            new = (prod * Pinv)
            structure[(i, j)] = tuple(sp.expand(sp.simplify(c)) for c in new)
    return RingExtensionPresentation(ext.variables, ext.characteristic, n, structure)


def _random_base_change(rng, n):
    P = sp.eye(n)
    # scale and permute the non-identity basis elements, then a polynomial unitriangular shear
    perm = list(range(1, n))
    rng.shuffle(perm)
    Q = sp.zeros(n)
    Q[0, 0] = 1
    for i, j in enumerate(perm, start=1):
        Q[i, j] = sp.Rational(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 5]))
    L = sp.eye(n)
    for i in range(1, n):
        for j in range(i):
            L[i, j] = rng.randint(-2, 2) + rng.randint(-1, 1) * x
    return Q * L * P


@pytest.mark.parametrize("seed", range(12))
def test_discriminant_changes_by_a_square(seed):
    rng = random.Random(seed)
    ext = cube_root(0) if seed % 2 else sqrt_x(0)
    P = _random_base_change(rng, ext.basis_size)
    new = _rebased(ext, P)
    d0, d1 = discriminant(ext), discriminant(new)
    det = P.det()
    for point in (2, 3, 7, sp.Rational(1, 3)):
        assert sp.simplify((d1 - det ** 2 * d0).subs(x, point)) == 0
        assert det.subs(x, point) != 0
