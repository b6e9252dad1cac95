"""Slow, obviously-correct reference computations used only by the tests."""

from collections import deque
from itertools import permutations

import networkx as nx


def bfs_closure(nodes, arcs):
    succ = {n: set() for n in nodes}
    for u, v in arcs:
        succ[u].add(v)
    pairs = set()
    for s in nodes:
        seen = set()
        todo = deque(succ[s])
        while todo:
            v = todo.popleft()
            if v in seen:
                continue
            seen.add(v)
            todo.extend(succ[v])
        pairs.update((s, v) for v in seen)
    return pairs


def brute_z(nodes, arcs):
    """Literal scan of all ordered quadruples."""
    arcs = set(arcs)
    out = []
    for a, b, c, d in permutations(nodes, 4):
        if (a, c) in arcs and (b, c) in arcs and (b, d) in arcs and (a, d) not in arcs:
            out.append((a, b, c, d))
    # d == a is allowed (a Δ hides a Z with d = a)
    for a, b, c in permutations(nodes, 3):
        if (a, c) in arcs and (b, c) in arcs and (b, a) in arcs:
            out.append((a, b, c, a))
    return sorted(out)


def brute_triangles(nodes, arcs):
    arcs = set(arcs)
    return sorted(
        (a, b, c) for a, b, c in permutations(nodes, 3)
        if (a, b) in arcs and (b, c) in arcs and (a, c) in arcs
    )


def longest_levels(nodes, arcs):
    d = nx.DiGraph()
    d.add_nodes_from(nodes)
    d.add_edges_from(arcs)
    level = {}
    for v in nx.topological_sort(d):
        level[v] = 1 + max((level[u] for u in d.predecessors(v)), default=0)
    return level


def exhaustive_longest_path(g):
    """Enumerate every source-to-sink path; return (weight, paths achieving it)."""
    d = nx.DiGraph()
    d.add_nodes_from(g.nodes)
    d.add_edges_from(g.arcs)
    starts = [v for v in d if d.in_degree(v) == 0]
    ends = [v for v in d if d.out_degree(v) == 0]
    best, winners = -1, []
    for s in starts:
        for t in ends:
            paths = [[s]] if s == t else nx.all_simple_paths(d, s, t)
            for path in paths:
                w = sum(g.duration(v) for v in path)
                if w > best:
                    best, winners = w, [tuple(path)]
                elif w == best:
                    winners.append(tuple(path))
    return best, winners


def aoa_reach_pairs(aoa, labels):
    """Activity pairs (u, v) with head(u) reaching tail(v) in the event graph, by BFS."""
    arcs = {a.label: a for a in aoa.arcs}
    succ = {}
    for a in aoa.arcs:
        succ.setdefault(a.tail, set()).add(a.head)
    pairs = set()
    for u in labels:
        start = arcs[u].head
        seen = {start}
        todo = deque([start])
        while todo:
            e = todo.popleft()
            for h in succ.get(e, ()):
                if h not in seen:
                    seen.add(h)
                    todo.append(h)
        pairs.update((u, v) for v in labels if arcs[v].tail in seen)
    return pairs
