from functools import lru_cache

import pytest

from springer_torus.repweights import freudenthal
from springer_torus.rootsystem import LieType, build

# grid of the main acceptance criteria
GRID_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"]


def rs_of(name):
    return build(LieType.parse(name))


@lru_cache(maxsize=None)
def multiset(name, lam):
    rs = rs_of(name)
    return rs, freudenthal(rs, tuple(lam))


def grid_weights(name):
    rs = rs_of(name)
    fund = [rs.fundamental_weight(i) for i in range(rs.rank)]
    return fund + ([rs.rho] if rs.rank > 1 else [])


def grid_instances():
    return [(t, lam) for t in GRID_TYPES for lam in grid_weights(t)]


# acceptance results, printed at the end of the session
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {label}")


@pytest.fixture
def record_criterion():
    def record(number, label, ok):
        ACCEPTANCE[number] = (bool(ok), label)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")
        assert ok
    return record
