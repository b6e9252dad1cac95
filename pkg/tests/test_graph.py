import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aoaforge.errors import CycleError, UnknownNodeError
from aoaforge.graph import (
    Activity,
    AonDag,
    NodeKind,
    group_levels,
    neighbors,
    require_valid,
    topological_levels,
    transitive_closure,
    validate_dag,
)

from conftest import to_nx
from oracles import bfs_closure, longest_levels

import networkx as nx

TIMED_LEVELS = [["α"], ["A", "B", "D"], ["G", "H"], ["C", "E", "I"], ["F", "J"], ["ω"]]


class TestValidate:
    def test_chain_ok(self, chain):
        assert validate_dag(chain).ok

    def test_timed_project_ok(self, timed_aon):
        assert validate_dag(timed_aon).ok

    def test_two_cycle_witness(self):
        g = AonDag.from_arcs([("A", "B"), ("B", "A")])
        report = validate_dag(g, require_terminals=False)
        assert not report.ok
        [cyc] = report.of_kind("cycle")
        assert cyc.witness == ("A", "B", "A")

    def test_dangling_reference(self):
        g = AonDag([Activity("α", NodeKind.SOURCE), Activity("ω", NodeKind.SINK)],
                   [("α", "X"), ("X", "ω"), ("α", "ω")])
        report = validate_dag(g)
        assert [v.witness for v in report.of_kind("unknown_node")] == [("X",), ("X",)]

    def test_duplicate_and_self_arcs_rejected(self):
        g = AonDag.from_arcs([("α", "A"), ("α", "A"), ("A", "A"), ("A", "ω")])
        kinds = {v.kind for v in validate_dag(g).violations}
        assert {"duplicate_arc", "self_arc"} <= kinds

    def test_terminals_required(self):
        g = AonDag.from_arcs([("A", "B")])
        assert not validate_dag(g).ok
        assert validate_dag(g, require_terminals=False).ok

    def test_isolated_node_reported(self):
        g = AonDag.from_arcs([("α", "A"), ("A", "ω")], nodes=["Z"])
        report = validate_dag(g)
        assert {v.witness for v in report.of_kind("disconnected")} == {("Z",)}

    def test_require_valid_raises_cycle(self):
        with pytest.raises(CycleError, match="A->B->A"):
            require_valid(AonDag.from_arcs([("A", "B"), ("B", "A")]), require_terminals=False)


class TestLevels:
    def test_timed_project_matches_table(self, timed_aon):
        assert group_levels(topological_levels(timed_aon)) == TIMED_LEVELS

    def test_chain(self, chain):
        assert topological_levels(chain) == {"α": 1, "A": 2, "ω": 3}

    def test_transitive_arc_leaves_levels(self, timed_aon):
        g = timed_aon.with_arcs(list(timed_aon.arcs) + [("α", "G")])
        levels = topological_levels(g)
        assert levels == longest_levels(g.nodes, g.arcs)
        assert group_levels(levels) == TIMED_LEVELS

    def test_levels_increase_along_arcs(self, grouped_aon):
        levels = topological_levels(grouped_aon)
        assert all(levels[u] < levels[v] for u, v in grouped_aon.arcs)


class TestClosure:
    def test_chain(self):
        g = AonDag.from_arcs([("α", "A"), ("A", "B"), ("B", "ω")])
        closure = transitive_closure(g)
        assert {("α", "B"), ("A", "ω")} <= closure

    def test_timed_project_against_bfs(self, timed_aon):
        closure = transitive_closure(timed_aon)
        assert closure == bfs_closure(timed_aon.nodes, timed_aon.arcs)
        assert ("D", "F") in closure

    def test_single_arc(self):
        assert transitive_closure(AonDag.from_arcs([("α", "ω")])) == {("α", "ω")}

    def test_against_networkx(self, grouped_aon):
        tc = nx.transitive_closure_dag(to_nx(grouped_aon))
        assert transitive_closure(grouped_aon) == set(tc.edges)


class TestNeighbors:
    def test_out(self, timed_aon):
        assert neighbors(timed_aon, "D", "out") == ["G", "H"]

    def test_source_has_no_preds(self, timed_aon):
        assert neighbors(timed_aon, "α", "in") == []

    def test_in(self, grouped_aon):
        assert neighbors(grouped_aon, "J", "in") == ["C", "F", "G"]

    def test_unknown(self, timed_aon):
        with pytest.raises(UnknownNodeError, match="'Q'"):
            neighbors(timed_aon, "Q")

    def test_augmented_graph_fully_connected(self, grouped_aon):
        for v in grouped_aon.nodes:
            if v != "ω":
                assert neighbors(grouped_aon, v, "out")
            if v != "α":
                assert neighbors(grouped_aon, v, "in")


@st.composite
def dags(draw, max_nodes=12):
    n = draw(st.integers(1, max_nodes))
    names = [f"v{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return AonDag.from_arcs(arcs, nodes=names)


@settings(max_examples=150, deadline=None)
@given(dags())
def test_closure_is_idempotent(g):
    closure = transitive_closure(g)
    assert transitive_closure(AonDag.from_arcs(closure, nodes=g.nodes)) == closure


@settings(max_examples=150, deadline=None)
@given(dags(), st.data())
def test_adding_closure_arc_keeps_closure(g, data):
    closure = sorted(transitive_closure(g) - set(g.arcs))
    if not closure:
        return
    extra = data.draw(st.sampled_from(closure))
    assert transitive_closure(g.with_arcs(list(g.arcs) + [extra])) == transitive_closure(g)


@settings(max_examples=150, deadline=None)
@given(dags())
def test_levels_match_oracle(g):
    assert topological_levels(g) == longest_levels(g.nodes, g.arcs)
