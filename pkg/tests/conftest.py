import networkx as nx
import pytest

from aoaforge import datasets
from aoaforge.graph import AonDag
from aoaforge.schedule import build_aon

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def timed_table():
    return datasets.load("timed_project")


@pytest.fixture(scope="session")
def grouped_table():
    return datasets.load("grouped_dummies")


@pytest.fixture(scope="session")
def timed_aon(timed_table):
    return build_aon(timed_table)


@pytest.fixture(scope="session")
def grouped_aon(grouped_table):
    return build_aon(grouped_table)


@pytest.fixture
def chain():
    return AonDag.from_arcs([("α", "A"), ("A", "ω")])


def to_nx(g: AonDag) -> nx.DiGraph:
    d = nx.DiGraph()
    d.add_nodes_from(g.nodes)
    d.add_edges_from(g.arcs)
    return d
