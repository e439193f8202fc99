from pathlib import Path

import pytest

from qtedit.graph import Graph, read_edge_list

DATA = Path(__file__).parent / "data"


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture(scope="session")
def karate():
    return read_edge_list(DATA / "karate.edges")


@pytest.fixture(scope="session")
def lesmis():
    return read_edge_list(DATA / "lesmis.edges")


# acceptance criteria append (id, status, detail) here; printed after the run
ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, status, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0][1:])):
        terminalreporter.write_line(f"{status:4} {cid:>3}  {detail}")
