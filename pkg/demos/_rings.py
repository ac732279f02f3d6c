"""Small rings shared by the demo scripts."""

from frobenius_forge import GradingGroup, WeightSystem


def diagonal(free_rank, orders, weights, p):
    G = GradingGroup(free_rank, tuple(orders))
    return WeightSystem(G, tuple(G.character(f, t) for f, t in weights), p)


def quadric(p=3):
    # k[x, y]^{Z/2} with both variables negated: the cone over a conic
    return diagonal(0, (2,), [((), (1,)), ((), (1,))], p)


def segre(p=2):
    # torus weights (1, 1, -1, -1): k[xz, xw, yz, yw]
    return diagonal(1, (), [((1,), ()), ((1,), ()), ((-1,), ()), ((-1,), ())], p)
