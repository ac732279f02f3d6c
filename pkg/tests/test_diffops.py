import itertools
import random

import pytest

from frobenius_forge import (InputError, TruncatedOperator, WindowTooSmall, commutator, frobenius_projection_op,
                             hasse_op, is_rq_linear, mult_op, op_compose, op_sum, operator_order, rq_linear_op)

N_RANDOM = 100


def T(f, nvars, char, window=12):
    return TruncatedOperator.from_function(f, nvars, char, window)


def test_order_examples():
    assert operator_order(T(mult_op((1, 0)), 2, 3), 3) == 0
    assert operator_order(T(hasse_op((1, 0)), 2, 3), 3) == 1
    assert operator_order(T(hasse_op((1, 0)), 2, 0), 3) == 1
    assert operator_order(T(frobenius_projection_op(2), 1, 2), 3) == 1
    assert operator_order(T(hasse_op((2, 1)), 2, 5, 14), 5) == 3


def test_commutator_with_derivative():
    d1 = T(hasse_op((1,)), 1, 0)
    c = commutator(d1, 0)
    # [x, d] = -1
    assert all(c.apply(m) == {m: -1} for m in c.safe_monomials())


def test_rq_linearity_examples():
    assert is_rq_linear(T(hasse_op((1, 0)), 2, 2), 2)
    assert not is_rq_linear(T(hasse_op((1, 0)), 2, 3), 2)
    for q in (2, 3, 4):
        assert is_rq_linear(T(mult_op((2, 1)), 2, 3), q)


def test_window_errors():
    tiny = T(hasse_op((1, 0)), 2, 2, window=2)
    with pytest.raises(WindowTooSmall):
        operator_order(tiny, 3)
    with pytest.raises(WindowTooSmall):
        is_rq_linear(tiny, 4)
    with pytest.raises(WindowTooSmall):
        tiny.apply((3, 0))
    with pytest.raises(InputError):
        TruncatedOperator.from_function(mult_op((0,)), 1, 1, 4)


def test_dense_matrix():
    basis, rows = T(hasse_op((1,)), 1, 0, window=4).dense()
    assert basis == [(0,), (1,), (2,), (3,)]
    assert rows == [[0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3], [0, 0, 0, 0]]


def random_rq_linear(rng, d, p, q, max_deg=3):
    images = {}
    for v in itertools.product(range(q), repeat=d):
        poly = {}
        for _ in range(rng.randint(0, 3)):
            mono = tuple(rng.randint(0, max_deg) for _ in range(d))
            poly[mono] = rng.randint(1, p - 1)
        images[v] = poly
    return rq_linear_op(q, images)


def random_bounded_order(rng, d, p, n):
    terms = []
    for _ in range(rng.randint(1, 4)):
        a = tuple(rng.randint(0, 2) for _ in range(d))
        b = [0] * d
        for _ in range(rng.randint(0, n)):
            b[rng.randrange(d)] += 1
        terms.append(op_compose(mult_op(a, rng.randint(1, p - 1)), hasse_op(b)))
    return op_sum(*terms)


def rq_linear_cases(seed=1729):
    rng = random.Random(seed)
    cases = []
    for _ in range(N_RANDOM):
        d = rng.choice((1, 2))
        p, q = rng.choice(((2, 2), (2, 4), (3, 3)))
        cases.append((d, p, q, random_rq_linear(rng, d, p, q)))
    return cases


def bounded_order_cases(seed=4242):
    rng = random.Random(seed)
    cases = []
    for _ in range(N_RANDOM):
        d = rng.choice((1, 2))
        p = rng.choice((2, 3))
        n = rng.randint(0, 3)
        cases.append((d, p, n, random_bounded_order(rng, d, p, n)))
    return cases


def check_rq_linear_cases():
    failures = []
    for d, p, q, f in rq_linear_cases():
        theta = T(f, d, p, window=d * q + 10)
        assert is_rq_linear(theta, q)
        order = operator_order(theta, d * q)
        if order is None or order >= d * q:
            failures.append((d, p, q, order))
    return failures


def check_bounded_order_cases():
    failures = []
    for d, p, n, f in bounded_order_cases():
        theta = T(f, d, p, window=16)
        order = operator_order(theta, n + 1)
        if order is None or order > n:
            failures.append((d, p, n, "order", order))
            continue
        q = p
        while q <= theta.safe_degree:
            if q > n and not is_rq_linear(theta, q):
                failures.append((d, p, n, "q", q))
            q *= p
    return failures


def test_rq_linear_implies_small_order():
    assert check_rq_linear_cases() == []


def test_bounded_order_implies_rq_linear():
    assert check_bounded_order_cases() == []


def test_rq_linear_order_can_reach_the_bound():
    # the projection onto x^0 of k[x, y] over k[x^q, y^q] has order exactly d(q - 1)
    for p, q in ((2, 2), (2, 4), (3, 3)):
        theta = T(rq_linear_op(q, {(0, 0): {(0, 0): 1}}), 2, p, window=2 * q + 10)
        assert operator_order(theta, 2 * q) == 2 * (q - 1)


def test_multiplication_does_not_raise_order():
    rng = random.Random(7)
    for d, p, n, f in bounded_order_cases(seed=99)[:40]:
        theta = T(f, d, p, window=16)
        a = tuple(rng.randint(0, 2) for _ in range(d))
        composed = T(op_compose(mult_op(a), f), d, p, window=16)
        lhs = operator_order(composed, n + 1)
        assert lhs is not None and lhs <= operator_order(theta, n + 1)
