import time
from pathlib import Path

import pytest

from frobenius_forge import (CharacterTable, ConjugacyClassData, Cyclotomic, FiniteGroupAction, GradingGroup,
                             WeightSystem)

SESSION_START = time.monotonic()
ROOT = Path(__file__).resolve().parent.parent
ACCEPTANCE = {}


# ---- ring builders ------------------------------------------------------------------

def diag(free_rank, orders, weights, p, positivity=None):
    """WeightSystem from plain tuples: weights are (free, torsion) pairs."""
    G = GradingGroup(free_rank, tuple(orders))
    return WeightSystem(G, tuple(G.character(f, t) for f, t in weights), p, positivity)


def regular(d, p):
    return diag(0, (), [((), ())] * d, p)


def quadric(p=3):
    return diag(0, (2,), [((), (1,)), ((), (1,))], p)


def segre(p=2):
    return diag(1, (), [((1,), ()), ((1,), ()), ((-1,), ()), ((-1,), ())], p)


def cyclic_diag(m, exps, p):
    return diag(0, (m,), [((), (a,)) for a in exps], p)


def cyclic_action(m, exps, p):
    """Z/m acting diagonally by z^a; class k is the element z^k."""
    classes = [ConjugacyClassData(1, tuple(k * a % m for a in exps)) for k in range(m)]
    rows = [[Cyclotomic.zeta(m, i * k % m) for k in range(m)] for i in range(m)]
    return FiniteGroupAction(CharacterTable(m, classes, rows, [f"U{i}" for i in range(m)]), p)


def s3_action(p, with_sign=True):
    m = 6
    if with_sign:
        classes = [ConjugacyClassData(1, (0, 0, 0)), ConjugacyClassData(3, (0, 3, 3)),
                   ConjugacyClassData(2, (2, 4, 0))]
    else:
        classes = [ConjugacyClassData(1, (0, 0)), ConjugacyClassData(3, (0, 3)), ConjugacyClassData(2, (2, 4))]
    one = Cyclotomic.rational(m, 1)
    rows = [[one, one, one], [one, -one, one], [one * 2, one * 0, -one]]
    return FiniteGroupAction(CharacterTable(m, classes, rows, ["triv", "sign", "std"]), p)


# fixtures shipped with the repository (name -> builder), used by the "all shipped examples" checks
SHIPPED_DIAGONAL = {
    "regular2_p2": lambda: regular(2, 2),
    "regular3_p3": lambda: regular(3, 3),
    "quadric_p3": lambda: quadric(3),
    "quadric_p5": lambda: quadric(5),
    "segre_p2": lambda: segre(2),
    "segre_p3": lambda: segre(3),
    "z3_12_p7": lambda: cyclic_diag(3, (1, 2), 7),
    "z3_12_p2": lambda: cyclic_diag(3, (1, 2), 2),
    "weights_1_2_m3_p2": lambda: diag(1, (), [((1,), ()), ((2,), ()), ((-3,), ())], 2),
}


@pytest.fixture(params=sorted(SHIPPED_DIAGONAL))
def shipped(request):
    return request.param, SHIPPED_DIAGONAL[request.param]()


# ---- acceptance bookkeeping -----------------------------------------------------------

def pytest_collection_modifyitems(session, config, items):
    # acceptance criteria run last so the wall-clock criterion sees the whole suite
    rest = [it for it in items if "test_acceptance" not in it.nodeid]
    acc = [it for it in items if "test_acceptance" in it.nodeid]
    acc.sort(key=lambda it: it.get_closest_marker("criterion").args[0] if it.get_closest_marker("criterion") else 99)
    items[:] = rest + acc


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in report.user_properties:
        if mark[0] == "criterion":
            n, title = mark[1]
            ok = report.outcome == "passed"
            prev = ACCEPTANCE.get(n, (title, True))
            ACCEPTANCE[n] = (title, prev[1] and ok)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n}: {title}")
