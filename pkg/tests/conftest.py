import networkx as nx
import pytest

from covpack.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


@pytest.fixture
def report_line():
    """Record one PASS/FAIL line for the acceptance summary."""

    def record(name: str, ok: bool, info: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" :: {info}" if info else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
