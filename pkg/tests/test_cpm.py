from hypothesis import given, settings
from hypothesis import strategies as st

from aoaforge.aoa import convert
from aoaforge.cpm import aon_longest_path, schedule
from aoaforge.generate import generate_random_table
from aoaforge.schedule import ScheduleRow, ScheduleTable, build_aon

from oracles import exhaustive_longest_path


def test_timed_project(timed_table, timed_aon):
    best, winners = exhaustive_longest_path(timed_aon)
    assert best == 14 and winners == [("α", "D", "H", "I", "F", "ω")]
    result = schedule(convert(timed_table).aoa)
    assert result.makespan == 14
    assert result.critical == ("α", "D", "H", "I", "F", "ω")
    # the dummy standing in for D->H sits on the path
    assert len(result.path) == 7
    assert aon_longest_path(timed_aon) == 14


def test_chain():
    t = ScheduleTable([ScheduleRow("A", 2)])
    assert schedule(convert(t).aoa).makespan == 2
    assert aon_longest_path(build_aon(t)) == 2


def test_all_zero():
    t = ScheduleTable([ScheduleRow("A"), ScheduleRow("B", 0, ("A",)), ScheduleRow("C")])
    result = schedule(convert(t).aoa)
    assert result.makespan == 0
    assert set(result.total_float.values()) == {0}


def test_single_activity():
    assert aon_longest_path(build_aon(ScheduleTable([ScheduleRow("A", 7)]))) == 7


def test_result_invariants(grouped_table):
    aoa = convert(generate_random_table(25, 0.2, seed=3)).aoa
    r = schedule(aoa)
    assert r.early[aoa.source] == 0 and r.late[aoa.sink] == r.makespan
    assert all(r.early[e] <= r.late[e] for e in r.early)
    assert all(v >= 0 for v in r.total_float.values())
    assert all(r.total_float[label] == 0 for label in r.path)
    arcs = [aoa.arc(label) for label in r.path]
    assert arcs[0].tail == aoa.source and arcs[-1].head == aoa.sink
    assert all(a.head == b.tail for a, b in zip(arcs, arcs[1:]))
    assert sum(a.duration for a in arcs) == r.makespan


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 20), st.sampled_from([0.1, 0.3, 0.6]), st.integers(0, 10**6), st.data())
def test_monotone_in_durations(n, p, seed, data):
    t = generate_random_table(n, p, seed)
    base = schedule(convert(t).aoa).makespan
    i = data.draw(st.integers(0, n - 1))
    bump = data.draw(st.integers(1, 5))
    rows = list(t.rows)
    rows[i] = ScheduleRow(rows[i].code, rows[i].duration + bump, rows[i].predecessors)
    assert schedule(convert(ScheduleTable(rows)).aoa).makespan >= base
