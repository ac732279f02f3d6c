import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from frobenius_forge import (GradingGroup, InputError, divide_character, in_supp,
                             is_strongly_critical, multiply_character, strongly_critical_certificate)
from frobenius_forge.lattice import solution_norm_bound

from conftest import diag, quadric, segre
import oracles


def test_character_arithmetic():
    G = GradingGroup(1, (3,))
    a, b = G.character((2,), (1,)), G.character((-1,), (2,))
    assert a + b == G.character((1,), (0,))
    assert a - b == G.character((3,), (2,))
    assert (a - a).is_zero()
    assert a.scale(4) == G.character((8,), (1,))


def test_character_group_mismatch():
    with pytest.raises(InputError):
        GradingGroup(1, (2,)).character((1,), (1, 1))
    with pytest.raises(InputError):
        GradingGroup(1).character((1,)) + GradingGroup(2).character((1, 0))


def test_weight_system_preconditions():
    with pytest.raises(InputError, match="not prime"):
        quadric(4)
    with pytest.raises(InputError, match="coprime"):
        quadric(2)
    with pytest.raises(InputError, match="positive"):
        diag(1, (), [((1,), ())], 2, positivity=(0,))
    with pytest.raises(InputError):
        diag(0, (), [], 2)


def test_krull_dim():
    assert quadric().krull_dim == 2
    assert segre().krull_dim == 3
    assert diag(2, (), [((1, 0), ()), ((0, 1), ()), ((-1, -1), ())], 2).krull_dim == 1


def test_divide_examples():
    G = GradingGroup(1)
    assert divide_character(G.character((3,)), 3).to_character() == G.character((1,))
    T = GradingGroup(0, (3,))
    assert divide_character(T.character((), (1,)), 7).to_character() == T.character((), (1,))
    with pytest.raises(InputError):
        divide_character(T.character((), (1,)), 3)
    half = divide_character(GradingGroup(1).character((-1,)), 2)
    assert not half.is_integral()
    assert half.free == (Fraction(-1, 2),)


@settings(max_examples=200, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 4), st.integers(0, 6),
       st.sampled_from([2, 3, 4, 8, 9, 11, 13, 27]))
def test_divide_inverts_multiply(f1, f2, t1, t2, q):
    G = GradingGroup(2, (5, 7))
    chi = G.character((f1, f2), (t1, t2))
    assert divide_character(multiply_character(chi, q), q).to_character() == chi


def test_in_supp_examples():
    ws = segre()
    G = ws.grading
    assert in_supp(ws, G.character((0,)))
    assert in_supp(ws, G.character((1,)))
    ws23 = diag(1, (), [((2,), ()), ((3,), ())], 5)
    assert not in_supp(ws23, ws23.grading.character((1,)))
    assert not in_supp(ws23, ws23.grading.character((-2,)))
    assert in_supp(ws23, ws23.grading.character((5,)))


WEIGHT_FIXTURES = [
    (1, (), [((2,), ()), ((3,), ())]),
    (1, (), [((1,), ()), ((1,), ()), ((-1,), ()), ((-1,), ())]),
    (1, (2,), [((1,), (1,)), ((-2,), (0,)), ((0,), (1,))]),
    (0, (4,), [((), (1,)), ((), (2,))]),
    (2, (), [((1, 0), ()), ((0, 1), ()), ((-1, -2), ())]),
]


@pytest.mark.parametrize("fx", WEIGHT_FIXTURES)
def test_in_supp_matches_enumeration(fx):
    r, orders, weights = fx
    ws = diag(r, orders, weights, 13)
    G = ws.grading
    side = 13
    for free in itertools.product(range(-4, 5), repeat=r):
        for tors in G.torsion_elements():
            chi = G.character(free, tors)
            assert in_supp(ws, chi) == oracles.reachable(weights, orders, (free, tors), side), chi


@pytest.mark.parametrize("fx", WEIGHT_FIXTURES)
def test_in_supp_monotone(fx):
    r, orders, weights = fx
    ws = diag(r, orders, weights, 13)
    G = ws.grading
    chars = [G.character(f, t) for f in itertools.product(range(-3, 4), repeat=r) for t in G.torsion_elements()]
    supp = [c for c in chars if in_supp(ws, c)]
    for a, b in itertools.product(supp[:25], repeat=2):
        assert in_supp(ws, a + b)


def test_solution_bound_covers_minimal_elements():
    ws = diag(1, (), [((2,), ()), ((3,), ()), ((-5,), ())], 7)
    G = ws.grading
    for k in range(-6, 7):
        chi = G.character((k,))
        bound = solution_norm_bound(ws, chi)
        pts = [m for m in oracles.box(3, 12) if oracles.degree([((2,), ()), ((3,), ()), ((-5,), ())], (), m) == ((k,), ())]
        for g in oracles.minimal(pts):
            assert sum(g) <= bound


def test_strongly_critical_examples():
    ws = segre()
    G = ws.grading
    ok, u, eps = strongly_critical_certificate(ws, G.character((1,)))
    assert ok and eps > 0
    assert sum(ui * w.free[0] for ui, w in zip(u, ws.weights)) == 1
    assert all(-1 < ui <= 0 for ui in u)
    assert is_strongly_critical(ws, G.zero())
    single = diag(1, (), [((1,), ())], 2)
    assert not is_strongly_critical(single, single.grading.character((-1,)))
    assert is_strongly_critical(quadric(), quadric().grading.character((), (1,)))


@pytest.mark.parametrize("fx", WEIGHT_FIXTURES)
def test_strongly_critical_matches_float_lp(fx):
    r, orders, weights = fx
    ws = diag(r, orders, weights, 13)
    G = ws.grading
    fw = [w[0] for w in weights]
    for free in itertools.product(range(-6, 7), repeat=r):
        chi = G.character(free, (0,) * len(orders))
        assert is_strongly_critical(ws, chi) == oracles.strongly_critical_lp(fw, free), free


@settings(max_examples=60, deadline=None)
@given(st.integers(-5, 5), st.integers(0, 5))
def test_strongly_critical_ignores_torsion(f, t):
    ws = diag(1, (6,), [((1,), (1,)), ((2,), (5,)), ((-3,), (2,))], 7)
    G = ws.grading
    assert is_strongly_critical(ws, G.character((f,), (t,))) == is_strongly_critical(ws, G.character((f,), (0,)))


@pytest.mark.parametrize("fx", [WEIGHT_FIXTURES[1], WEIGHT_FIXTURES[4]])
def test_strongly_critical_inside_zonotope_box(fx):
    r, orders, weights = fx
    ws = diag(r, orders, weights, 13)
    G = ws.grading
    lo = [sum(min(0, -w[0][k]) for w in weights) for k in range(r)]
    hi = [sum(max(0, -w[0][k]) for w in weights) for k in range(r)]
    found = [f for f in itertools.product(range(-10, 11), repeat=r) if is_strongly_critical(ws, G.character(f))]
    assert found
    for f in found:
        assert all(l <= x <= h for x, l, h in zip(f, lo, hi))
