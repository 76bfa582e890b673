import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from invsat.model import Column, Problem

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# (-x1 v x3 v x4) & (x2) & (x1 v -x2 v -x3 v x4) & (-x2 v -x4)
PAPER_COLUMNS = ("FUTT", "UTUU", "TFFT", "UFUF")


@pytest.fixture
def paper_problem() -> Problem:
    return Problem.from_strings(*PAPER_COLUMNS)


def brute_cube(col: Column) -> set[tuple[bool, ...]]:
    """Assignments matching every non-U cell, by direct enumeration."""
    out = set()
    for a in itertools.product((True, False), repeat=col.var_count):
        if all(c.value == "U" or (c.value == "T") == v for c, v in zip(col.cells, a)):
            out.add(a)
    return out


def brute_clause(col: Column) -> set[tuple[bool, ...]]:
    """Assignments satisfying the column read as a CNF clause."""
    out = set()
    for a in itertools.product((True, False), repeat=col.var_count):
        if any(c.value != "U" and (c.value == "T") == v for c, v in zip(col.cells, a)):
            out.add(a)
    return out


@st.composite
def columns(draw, min_vars=1, max_vars=8, var_count=None):
    v = var_count if var_count is not None else draw(st.integers(min_vars, max_vars))
    cells = draw(st.lists(st.sampled_from("TFU"), min_size=v, max_size=v))
    return Column.parse("".join(cells))


@st.composite
def column_pairs(draw, max_vars=8):
    v = draw(st.integers(1, max_vars))
    return draw(columns(var_count=v)), draw(columns(var_count=v))


@st.composite
def problems(draw, max_vars=8, max_clauses=10):
    v = draw(st.integers(1, max_vars))
    cols = draw(st.lists(columns(var_count=v), max_size=max_clauses))
    return Problem(v, tuple(cols))


# acceptance criteria report: one line per criterion after the run
_acceptance: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    cid, title = marker.args
    status = "PASS" if rep.passed else "FAIL"
    prev = _acceptance.get(cid)
    if prev is None or prev[0] == "PASS":
        _acceptance[cid] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_acceptance, key=lambda c: int(c.lstrip("AC"))):
        status, title = _acceptance[cid]
        terminalreporter.write_line(f"{cid} {status}  {title}")
