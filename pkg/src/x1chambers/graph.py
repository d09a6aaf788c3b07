"""Adjacency multigraphs of chambers.

``triangle_graph`` has the triangle chambers as vertices and one edge per
unbalanced degenerate chamber.  ``chamber_graph`` has every chamber as a
vertex and one edge per wall.  The two are related by decorating the
former: hang a leaf on every triangle of shape (a-2t, t, t), then subdivide
every edge by a degenerate vertex; :func:`decorated_triangle_graph` carries
out that construction independently of the wall enumeration.

Both are multigraphs; T_4 already has a self-loop and T_5 a double edge.
"""

from collections import Counter, deque
from dataclasses import dataclass, field

from .chamber import (
    TRIANGLE,
    UNBALANCED,
    Chamber,
    check_component,
    enumerate_chambers,
    enumerate_walls,
    natural_key,
)
from .tripartition import apply_T, canonical_class


@dataclass(frozen=True)
class ChamberGraph:
    """An undirected multigraph with keyed vertices and keyed edges.

    ``vertices`` holds ``(key, kind, invariant)`` triples sorted by key and
    ``edges`` holds ``(edge_key, u, v)`` triples sorted by edge key.  For
    chamber graphs ``u`` is the degenerate side of the wall.
    """

    a: int
    d: int
    vertices: tuple
    edges: tuple
    chambers: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        keys = [v[0] for v in self.vertices]
        if keys != sorted(keys, key=natural_key) or len(set(keys)) != len(keys):
            raise ValueError("vertex keys must be unique and sorted")
        ekeys = [e[0] for e in self.edges]
        if ekeys != sorted(ekeys, key=natural_key) or len(set(ekeys)) != len(ekeys):
            raise ValueError("edge keys must be unique and sorted")
        known = set(keys)
        for key, u, v in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"edge {key} has an unknown endpoint")

    @classmethod
    def build(cls, a, d, chambers, edges, extra=()):
        vertices = sorted(
            ((c.key, c.kind, tuple(c.entries)) for c in chambers),
            key=lambda v: natural_key(v[0]),
        )
        lookup = {c.key: c for c in list(chambers) + list(extra)}
        return cls(a, d, tuple(vertices), tuple(sorted(edges, key=lambda e: natural_key(e[0]))), lookup)

    @property
    def keys(self):
        return [v[0] for v in self.vertices]

    def kind(self, key):
        return self.kinds[key]

    @property
    def kinds(self):
        return {v[0]: v[1] for v in self.vertices}

    def degrees(self):
        """Vertex degrees, a self-loop counting twice."""
        deg = Counter({k: 0 for k in self.keys})
        for _, u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return dict(deg)

    def multiplicities(self):
        """Counter of unordered endpoint pairs."""
        return Counter(tuple(sorted((u, v), key=natural_key)) for _, u, v in self.edges)

    def neighbours(self):
        adj = {k: [] for k in self.keys}
        for _, u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj

    def is_connected(self):
        if not self.vertices:
            return True
        adj = self.neighbours()
        start = self.keys[0]
        seen = {start}
        queue = deque([start])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def leaves(self):
        return [k for k, n in self.degrees().items() if n == 1]

    def same_keyed(self, other):
        """Identical vertex keys/kinds and identical keyed edges."""
        return self.vertices == other.vertices and self.edges == other.edges


def triangle_graph(a: int, d: int = 1) -> ChamberGraph:
    """Triangle chambers of C_d^a joined by the unbalanced chambers.

    Levels a/d <= 2 have no triangle chamber; the graph is then empty.
    """
    check_component(a, d)
    chambers = enumerate_chambers(a, d)
    triangles = [c for c in chambers if c.kind == TRIANGLE]
    edges = []
    edge_chambers = []
    for c in chambers:
        if c.kind == UNBALANCED:
            t1, t2 = c.invariant
            u = Chamber.triangle(canonical_class(t1)).key
            v = Chamber.triangle(canonical_class(t2)).key
            edges.append((c.key, u, v))
            edge_chambers.append(c)
    return ChamberGraph.build(a, d, triangles, edges, extra=edge_chambers)


def chamber_graph(a: int, d: int = 1) -> ChamberGraph:
    """All chambers of C_d^a, one edge per wall."""
    chambers = enumerate_chambers(a, d)
    edges = [(w.id, w.degenerate_side.key, w.other_side.key) for w in enumerate_walls(a, d)]
    return ChamberGraph.build(a, d, chambers, edges)


def _leaf_size(c):
    """The t for which a triangle class has the shape (a-2t, t, t), else None."""
    t = c.invariant.rep
    for _ in range(3):
        if t.y == t.z and t.x + t.y + t.z == t.a:
            return t.y
        t = apply_T(t)
    return None


def decorated_triangle_graph(a: int, d: int = 1) -> ChamberGraph:
    """Rebuild the full chamber graph from the triangle graph alone.

    Leaves go on triangle vertices of shape (a-2t, t, t); every edge, leaf
    edges included, is then split by a degenerate vertex.  At level 2 there
    is no triangle at all and the only leaf edge, for a = t + t, ends at its
    subdividing (balanced) vertex.
    """
    check_component(a, d)
    tg = triangle_graph(a, d)
    chambers = [tg.chambers[k] for k in tg.keys]
    edges = []
    for key, u, v in tg.edges:
        unb = tg.chambers[key]
        t1, t2 = unb.invariant
        chambers.append(unb)
        edges.append(("wall:%d,%d,%d" % t1.coords, key, u))
        edges.append(("wall:%d,%d,%d" % t2.coords, key, v))
    for key in tg.keys:
        t = _leaf_size(tg.chambers[key])
        if t is None:
            continue
        cyl, bal = Chamber.cylinder(a, t), Chamber.balanced(a, t)
        chambers += [cyl, bal]
        edges.append(("wall:%d,%d" % bal.invariant, bal.key, cyl.key))
        edges.append(("wall:%d,%d,%d" % (t, a - 2 * t, t), bal.key, key))
    if a == 2 * d:
        cyl, bal = Chamber.cylinder(a, d), Chamber.balanced(a, d)
        chambers += [cyl, bal]
        edges.append(("wall:%d,%d" % bal.invariant, bal.key, cyl.key))
    return ChamberGraph.build(a, d, chambers, edges)


def are_isomorphic(g1: ChamberGraph, g2: ChamberGraph, respect_kinds: bool = False) -> bool:
    """Multigraph isomorphism test, optionally preserving vertex kinds."""
    return find_isomorphism(g1, g2, respect_kinds) is not None


def find_isomorphism(g1, g2, respect_kinds=False):
    """Return a vertex bijection key -> key, or None.

    Colour refinement runs on the disjoint union of the two graphs so that
    colours are comparable across them; whenever the partition is not
    discrete a vertex of `g1` is individualized against every candidate of
    the same colour in `g2`.  Any complete candidate is checked edge by
    edge, so the search is exact.
    """
    n1, n2 = len(g1.vertices), len(g2.vertices)
    if n1 != n2 or len(g1.edges) != len(g2.edges):
        return None
    keys = g1.keys + g2.keys
    index = {}
    for i, k in enumerate(g1.keys):
        index[(0, k)] = i
    for i, k in enumerate(g2.keys):
        index[(1, k)] = n1 + i
    adj = [Counter() for _ in keys]
    for side, g in ((0, g1), (1, g2)):
        for _, u, v in g.edges:
            i, j = index[(side, u)], index[(side, v)]
            adj[i][j] += 1
            if i != j:
                adj[j][i] += 1
    kinds = [v[1] for v in g1.vertices] + [v[1] for v in g2.vertices]
    colours = [(kinds[i] if respect_kinds else "", adj[i][i], sum(adj[i].values())) for i in range(len(keys))]
    colours = _relabel(colours)
    mapping = _search(_refine(colours, adj), adj, n1)
    if mapping is None:
        return None
    return {g1.keys[i]: g2.keys[j - n1] for i, j in mapping.items()}


def _relabel(signatures):
    table = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [table[s] for s in signatures]


def _refine(colours, adj):
    count = len(set(colours))
    while True:
        colours = _relabel(
            [(colours[v], tuple(sorted((colours[u], m) for u, m in adj[v].items()))) for v in range(len(adj))]
        )
        new = len(set(colours))
        if new == count:
            return colours
        count = new


def _search(colours, adj, n1):
    cells = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, ([], []))[v >= n1].append(v)
    if any(len(left) != len(right) for left, right in cells.values()):
        return None
    open_cells = [cell for cell in cells.values() if len(cell[0]) > 1]
    if not open_cells:
        mapping = {left[0]: right[0] for left, right in cells.values()}
        return mapping if _is_isomorphism(mapping, adj, n1) else None
    left, right = min(open_cells, key=lambda cell: len(cell[0]))
    v = left[0]
    fresh = max(colours) + 1
    for w in right:
        trial = list(colours)
        trial[v] = trial[w] = fresh
        found = _search(_refine(trial, adj), adj, n1)
        if found is not None:
            return found
    return None


def _is_isomorphism(mapping, adj, n1):
    for i in range(n1):
        image = Counter({mapping[j]: m for j, m in adj[i].items()})
        if image != adj[mapping[i]]:
            return False
    return True
