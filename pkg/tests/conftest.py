import pytest

from udmg import Udmg, make_field, reference
from udmg.linalg import FqMatrix


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    lines = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, ()):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1]
                lines[name] = "PASS" if status == "passed" else "FAIL"
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name in sorted(lines):
            terminalreporter.write_line(f"{name}: {lines[name]}")

# A near-miss variant of the bundled genus-1 family: same shape and mostly the
# same column data, but several entries are off, so it must be rejected at
# genus 1.  Used as regression data for witness reporting: the first columns
# of members 7 and 8 coincide, so any allowable vector touching both of them
# plus two more columns from that corner fails the rank test.
NEAR_MISS_ROWS = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (4, 1, 0), (4, 3, 1)),
    ((1, 0, 0), (3, 1, 0), (4, 3, 1)),
    ((1, 0, 0), (0, 1, 0), (3, 4, 1)),
    ((1, 0, 0), (4, 1, 0), (0, 1, 1)),
    ((1, 0, 0), (3, 1, 0), (1, 1, 1)),
    ((1, 0, 0), (2, 1, 0), (4, 1, 1)),
    ((1, 0, 0), (2, 1, 0), (4, 3, 1)),
    ((1, 0, 1), (3, 1, 0), (1, 0, 0)),
)


@pytest.fixture(scope="session")
def f2():
    return make_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f5():
    return make_field(5)


@pytest.fixture(scope="session")
def f7():
    return make_field(7)


@pytest.fixture(scope="session")
def ref_udmg():
    return reference.matrix_set()


@pytest.fixture(scope="session")
def near_miss_udmg(f5):
    mats = tuple(FqMatrix.from_rows(f5, rows) for rows in NEAR_MISS_ROWS)
    return Udmg(f5, 3, 1, mats)
