"""
Order of differential operators and linearity over R^q
=======================================================

Operators are stored by their action on monomials below a window.  An
operator linear over k[x^q] has order at most d(q-1); conversely an
operator of order n is linear over k[x^q] once q > n.
"""

from frobenius_forge import (TruncatedOperator, frobenius_projection_op, hasse_op, is_rq_linear, mult_op,
                             op_compose, op_sum, operator_order)

# x1 * D^(0,2) + projection onto exponents divisible by 2, in characteristic 2
f = op_sum(op_compose(mult_op((1, 0)), hasse_op((0, 2))), frobenius_projection_op(2))
theta = TruncatedOperator.from_function(f, 2, 2, window=14)
print("safe degree", theta.safe_degree)
print("order", operator_order(theta, 4))
for q in (2, 4, 8):
    print(f"  linear over R^{q}: {is_rq_linear(theta, q)}")

# The projection onto x^0 over k[x^q, y^q] reaches the bound d(q-1).
for q in (2, 4):
    proj = TruncatedOperator.from_function(frobenius_projection_op(q), 2, 2, window=2 * q + 8)
    print(f"projection mod {q}: order {operator_order(proj, 2 * q)}")
