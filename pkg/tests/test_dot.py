import re

import pytest

from aoaforge.aoa import convert
from aoaforge.dot import render_dot
from aoaforge.schedule import ScheduleRow, ScheduleTable


def test_chain_aoa():
    text = render_dot(convert(ScheduleTable([ScheduleRow("A", 2)])).aoa)
    assert text.count("shape=circle") == 4
    assert text.count("style=solid") == 3
    assert "style=dashed" not in text
    assert '[style=solid, label="A(2)"]' in text


def test_grouped_dummies_dashed_edges(grouped_table):
    conv = convert(grouped_table)
    text = render_dot(conv.aoa)
    assert text.count("style=dashed") == conv.stats.dummy_arc_count == 5


def test_aon_ranks(timed_aon):
    text = render_dot(timed_aon)
    ranks = re.findall(r"\{ rank=same; (.*?) \}", text)
    rows = [re.findall(r'"([^"]+)"', r) for r in ranks]
    assert rows == [["α"], ["A", "B", "D"], ["G", "H"], ["C", "E", "I"], ["F", "J"], ["ω"]]
    assert text.count("shape=box") == 12
    assert "rankdir=LR" in text


def test_byte_stable(grouped_table):
    assert render_dot(convert(grouped_table).aoa) == render_dot(convert(grouped_table).aoa)


def test_quoting():
    text = render_dot(convert(ScheduleTable([ScheduleRow('we"ird')])).aoa)
    assert 'label="we\\"ird(0)"' in text


def test_rejects_other_types():
    with pytest.raises(TypeError):
        render_dot(42)
