import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from x1chambers.arith import divisors
from x1chambers.chamber import BALANCED, CYLINDER, TRIANGLE, UNBALANCED, boundary_count
from x1chambers.graph import (
    ChamberGraph,
    are_isomorphic,
    chamber_graph,
    decorated_triangle_graph,
    find_isomorphism,
    triangle_graph,
)


def to_nx(g):
    m = nx.MultiGraph()
    for key, kind, _ in g.vertices:
        m.add_node(key, kind=kind)
    for _, u, v in g.edges:
        m.add_edge(u, v)
    return m


def nx_iso(g1, g2, respect_kinds):
    match = (lambda p, q: p["kind"] == q["kind"]) if respect_kinds else None
    return nx.is_isomorphic(to_nx(g1), to_nx(g2), node_match=match)


def synthetic(n, edges, kinds=None):
    vertices = tuple((f"v:{i}", kinds[i] if kinds else "x", (i,)) for i in range(n))
    return ChamberGraph(0, 0, vertices, tuple((f"e:{j}", f"v:{u}", f"v:{v}") for j, (u, v) in enumerate(edges)))


def shuffled(g, seed):
    rng = random.Random(seed)
    perm = list(range(len(g.vertices)))
    rng.shuffle(perm)
    name = {v[0]: f"v:{perm[i]}" for i, v in enumerate(g.vertices)}
    kinds = [None] * len(perm)
    for i, v in enumerate(g.vertices):
        kinds[perm[i]] = v[1]
    edges = [(name[u], name[v]) for _, u, v in g.edges]
    rng.shuffle(edges)
    return synthetic(len(perm), [(int(u[2:]), int(v[2:])) for u, v in edges], kinds)


def test_triangle_graph_examples():
    t5 = triangle_graph(5, 1)
    assert t5.keys == ["tri:1,1,3", "tri:1,2,2"]
    assert t5.multiplicities() == Counter({("tri:1,1,3", "tri:1,2,2"): 2})
    t4 = triangle_graph(4, 1)
    assert t4.keys == ["tri:1,1,2"] and [e[1:] for e in t4.edges] == [("tri:1,1,2", "tri:1,1,2")]
    t6 = triangle_graph(6, 1)
    assert t6.keys == ["tri:1,1,4", "tri:1,2,3", "tri:1,3,2"]
    assert t6.multiplicities() == Counter(
        {("tri:1,1,4", "tri:1,2,3"): 1, ("tri:1,1,4", "tri:1,3,2"): 1, ("tri:1,2,3", "tri:1,3,2"): 2}
    )


def test_chamber_graph_examples():
    g5 = chamber_graph(5, 1)
    assert len(g5.vertices) == 8 and len(g5.edges) == 8
    deg = g5.degrees()
    by_kind = {k: sorted(deg[v[0]] for v in g5.vertices if v[1] == k) for k in (CYLINDER, BALANCED, UNBALANCED, TRIANGLE)}
    assert by_kind == {CYLINDER: [1, 1], BALANCED: [2, 2], UNBALANCED: [2, 2], TRIANGLE: [3, 3]}
    g2 = chamber_graph(2, 1)
    assert (len(g2.vertices), len(g2.edges)) == (2, 1)
    g4 = chamber_graph(4, 1)
    assert g4.multiplicities() == Counter(
        {("bal:1,3", "cyl:1,3"): 1, ("bal:1,3", "tri:1,1,2"): 1, ("tri:1,1,2", "unb:1,1,2"): 2}
    )


def test_isomorphism_examples():
    assert are_isomorphic(chamber_graph(10, 2), chamber_graph(5, 1), respect_kinds=True)
    assert not are_isomorphic(chamber_graph(5, 1), chamber_graph(6, 1))
    for a in range(2, 30):
        g = chamber_graph(a, 1)
        assert are_isomorphic(g, g, respect_kinds=True)


def test_isomorphism_against_networkx():
    graphs = [chamber_graph(a, d) for a in range(2, 25) for d in divisors(a)[:-1]]
    graphs += [triangle_graph(a, 1) for a in range(3, 25)]
    by_size = {}
    for g in graphs:
        by_size.setdefault((len(g.vertices), len(g.edges)), []).append(g)
    pairs = 0
    for group in by_size.values():
        for i, g1 in enumerate(group):
            for g2 in group[i:]:
                for kinds in (False, True):
                    assert are_isomorphic(g1, g2, kinds) == nx_iso(g1, g2, kinds)
                    pairs += 1
    assert pairs > 100


def test_relabelled_graphs_are_isomorphic():
    for a in range(3, 40):
        g = chamber_graph(a, 1)
        h = shuffled(g, a)
        mapping = find_isomorphism(g, h, respect_kinds=True)
        assert mapping is not None
        assert all(g.kind(k) == h.kind(mapping[k]) for k in g.keys)
        assert Counter(tuple(sorted((mapping[u], mapping[v]))) for _, u, v in g.edges) == Counter(
            tuple(sorted((u, v))) for _, u, v in h.edges
        )


multigraphs = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
)


@settings(max_examples=300, deadline=None)
@given(multigraphs, multigraphs)
def test_random_multigraphs_against_networkx(g1, g2):
    a, b = synthetic(*g1), synthetic(*g2)
    assert are_isomorphic(a, b) == nx_iso(a, b, False)


@settings(max_examples=100, deadline=None)
@given(multigraphs, st.integers(0, 10**6))
def test_random_relabelling(g, seed):
    a = synthetic(*g)
    assert are_isomorphic(a, shuffled(a, seed))


def test_regular_graphs_need_search():
    # colour refinement alone cannot split these: two triangles vs a hexagon
    two_triangles = synthetic(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    hexagon = synthetic(6, [(i, (i + 1) % 6) for i in range(6)])
    assert not are_isomorphic(two_triangles, hexagon)
    assert are_isomorphic(hexagon, shuffled(hexagon, 7))


def test_dual_construction():
    for a in range(2, 61):
        for d in divisors(a)[:-1]:
            assert decorated_triangle_graph(a, d).same_keyed(chamber_graph(a, d)), (a, d)


def test_degree_law():
    for a in range(2, 101):
        g = chamber_graph(a, 1)
        deg = g.degrees()
        assert all(deg[k] == boundary_count(g.chambers[k]) for k in g.keys)


def test_connectivity():
    for a in range(2, 101):
        assert chamber_graph(a, 1).is_connected()
        assert triangle_graph(a, 1).is_connected()


def test_leaves_are_cylinders():
    for a in range(3, 60):
        g = chamber_graph(a, 1)
        leaves = g.leaves()
        if a > 3:
            assert sorted(g.kind(k) for k in leaves) == [CYLINDER] * len(leaves)
        assert len([k for k in g.keys if g.kind(k) == CYLINDER]) == len([k for k in leaves if g.kind(k) == CYLINDER])


def test_triangle_graph_is_cubic():
    for a in range(5, 80):
        deg = triangle_graph(a, 1).degrees()
        assert set(deg.values()) <= {2, 3}
        leaves = sum(1 for n in deg.values() if n < 3)
        # each (a-2t,t,t) triangle loses one degree to its leaf
        assert leaves == sum(1 for _ in chamber_graph(a, 1).leaves())


def test_empty_triangle_graph_at_level_2():
    assert triangle_graph(2, 1).vertices == ()
    assert triangle_graph(4, 2).vertices == ()


def test_graph_validation():
    with pytest.raises(ValueError):
        ChamberGraph(0, 0, (("v:2", "x", ()), ("v:1", "x", ())), ())
    with pytest.raises(ValueError):
        ChamberGraph(0, 0, (("v:1", "x", ()),), (("e:0", "v:1", "v:9"),))
