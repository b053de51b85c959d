"""Digraphs, the graph families studied here, and graph surgeries.

Vertices are the integers ``0..n_vertices-1``.  Edges are kept in a tuple and
an edge's position in that tuple is its edge-id; edge-ids become the vertex
labels of the multipath complex, so every constructor here is deterministic
about edge order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    IneligibleVertex,
    SelfLoop,
    UnsupportedParameter,
    VertexOutOfRange,
)

Edge = tuple[int, int]

FAMILIES = (
    "I", "BL", "BP", "W", "BLHAT", "K", "C", "TT",
    "BP_MINUS1", "BP_MINUS2", "BP_MINUS_STAR",
)

_FAMILY_MIN = {
    "I": 0, "BL": 0, "BP": 2, "W": 1, "BLHAT": 0, "K": 1, "C": 1, "TT": 0,
    "BP_MINUS1": 2, "BP_MINUS2": 2, "BP_MINUS_STAR": 2,
}


@dataclass(frozen=True)
class Digraph:
    n_vertices: int
    edges: tuple[Edge, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n_vertices < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n_vertices}")
        seen = {}
        for eid, (s, t) in enumerate(self.edges):
            for v in (s, t):
                if not 0 <= v < self.n_vertices:
                    raise VertexOutOfRange(
                        f"edge {eid} = ({s}, {t}) references vertex {v} "
                        f"outside [0, {self.n_vertices})")
            if s == t:
                raise SelfLoop(f"edge {eid} = ({s}, {t}) is a self-loop")
            if (s, t) in seen:
                raise DuplicateEdge(
                    f"edge ({s}, {t}) appears twice (ids {seen[(s, t)]} and {eid})")
            seen[(s, t)] = eid
        object.__setattr__(self, "_index", seen)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_id(self, s: int, t: int) -> int:
        """Edge-id of ``s -> t``; raises ``KeyError`` when absent."""
        return self._index[(s, t)]

    def has_edge(self, s: int, t: int) -> bool:
        return (s, t) in self._index

    def indegree(self, v: int) -> int:
        return sum(1 for _, t in self.edges if t == v)

    def outdegree(self, v: int) -> int:
        return sum(1 for s, _ in self.edges if s == v)

    def reversed(self) -> "Digraph":
        return Digraph(self.n_vertices, tuple((t, s) for s, t in self.edges))

    def without_edges(self, drop: Iterable[Edge]) -> "Digraph":
        drop = set(drop)
        missing = drop - set(self.edges)
        if missing:
            raise UnsupportedParameter(f"edges not present: {sorted(missing)}")
        return Digraph(self.n_vertices, tuple(e for e in self.edges if e not in drop))

    def disjoint_union(self, other: "Digraph") -> "Digraph":
        k = self.n_vertices
        shifted = tuple((s + k, t + k) for s, t in other.edges)
        return Digraph(k + other.n_vertices, self.edges + shifted)

    def to_json(self) -> dict:
        return {"n_vertices": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Digraph":
        return make_digraph(data["n_vertices"], data["edges"])


@dataclass(frozen=True)
class UndirectedGraph:
    n_vertices: int
    edges: tuple[Edge, ...]  # sorted pairs (a, b) with a < b, sorted lexicographically

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise SelfLoop(f"undirected loop at {a}")
            if not (0 <= a < self.n_vertices and 0 <= b < self.n_vertices):
                raise VertexOutOfRange(f"edge ({a}, {b}) out of range")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise DuplicateEdge(f"undirected edge {key} appears twice")
            seen.add(key)
        object.__setattr__(
            self, "edges", tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges)))

    def is_bipartite(self) -> bool:
        color = [-1] * self.n_vertices
        adj = [[] for _ in range(self.n_vertices)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for root in range(self.n_vertices):
            if color[root] != -1:
                continue
            color[root] = 0
            stack = [root]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def to_json(self) -> dict:
        return {"n_vertices": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "UndirectedGraph":
        return cls(data["n_vertices"], tuple(tuple(e) for e in data["edges"]))


def make_digraph(n_vertices: int, edge_list: Iterable[Sequence[int]]) -> Digraph:
    return Digraph(int(n_vertices), tuple((int(s), int(t)) for s, t in edge_list))


def _bl_edges(n: int) -> list[Edge]:
    edges = []
    for i in range(n):
        edges.append((i, i + 1))
        edges.append((i + 1, i))
    return edges


def _bp_edges(n: int) -> list[Edge]:
    m = n + 1
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append(((i + 1) % m, i))
    return edges


def backward_edge(n: int, i: int) -> Edge:
    """The edge ``e'_i = (i+1, i)`` of BP_n, indices taken mod n+1."""
    m = n + 1
    return ((i + 1) % m, i % m)


def gen_family(family: str, n: int) -> Digraph:
    """Build the member of index ``n`` of a named graph family.

    ``BP_MINUS1``/``BP_MINUS2``/``BP_MINUS_STAR`` drop the backward edges
    ``e'_0``; ``e'_0, e'_1``; ``e'_0, e'_1, e'_2`` from BP_n respectively.
    """
    family = family.upper()
    if family not in _FAMILY_MIN:
        raise UnsupportedParameter(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < _FAMILY_MIN[family]:
        raise UnsupportedParameter(
            f"family {family} needs n >= {_FAMILY_MIN[family]}, got {n}")

    if family == "I":
        return make_digraph(n + 1, [(i, i + 1) for i in range(n)])
    if family == "BL":
        return make_digraph(n + 1, _bl_edges(n))
    if family == "W":
        edges = [e for e in _bl_edges(n) if e != (1, 0)] + [(n, n + 1)]
        return make_digraph(n + 2, edges)
    if family == "BLHAT":
        return make_digraph(n + 2, _bl_edges(n) + [(n, n + 1)])
    if family == "BP":
        return make_digraph(n + 1, _bp_edges(n))
    if family == "K":
        return make_digraph(n, [(i, j) for i in range(n) for j in range(n) if i != j])
    if family == "C":
        return make_digraph(n + 1, [(i, (i + 1) % (n + 1)) for i in range(n + 1)])
    if family == "TT":
        return make_digraph(n + 1, [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)])

    removed = {"BP_MINUS1": 1, "BP_MINUS2": 2, "BP_MINUS_STAR": 3}[family]
    drop = {backward_edge(n, i) for i in range(removed)}
    return make_digraph(n + 1, [e for e in _bp_edges(n) if e not in drop])


def t_operation(g: Digraph, t: int, u: int) -> Digraph:
    """Glue a copy of W_2 (v0 -> v1 <-> v2 -> v3) onto ``g`` at ``t``.

    If ``t`` has indegree 0 it plays v1 and ``u`` plays v0; the fresh vertices
    ``a, b`` play v2, v3 and the added edges are (u,t), (t,a), (a,t), (a,b).
    If ``t`` has outdegree 0 it plays v2 and ``u`` plays v3; the fresh ``a, b``
    play v0, v1 and the added edges are (a,b), (b,t), (t,b), (t,u).
    """
    for v in (t, u):
        if not 0 <= v < g.n_vertices:
            raise VertexOutOfRange(f"vertex {v} outside [0, {g.n_vertices})")
    if t == u:
        raise IneligibleVertex("t and u must be distinct")
    indeg, outdeg = g.indegree(t), g.outdegree(t)
    if (indeg == 0) == (outdeg == 0):
        raise IneligibleVertex(
            f"vertex {t} has indegree {indeg} and outdegree {outdeg}; "
            "exactly one of them must be zero")
    a, b = g.n_vertices, g.n_vertices + 1
    if indeg == 0:
        glued = [(u, t), (t, a), (a, t), (a, b)]
    else:
        glued = [(a, b), (b, t), (t, b), (t, u)]
    for e in glued:
        if g.has_edge(*e):
            raise DuplicateEdge(f"glued edge {e} already present")
    return Digraph(g.n_vertices + 2, g.edges + tuple(glued))


def blow_up_at(g: Digraph, v: int) -> Digraph:
    """Split ``v`` into v_in (keeps index ``v``) and v_out (new last index).

    Vertices with indegree or outdegree 0 are left alone.  Edge-ids are kept.
    """
    if not 0 <= v < g.n_vertices:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n_vertices})")
    if g.indegree(v) == 0 or g.outdegree(v) == 0:
        return g
    v_out = g.n_vertices
    edges = tuple((v_out if s == v else s, t) for s, t in g.edges)
    return Digraph(g.n_vertices + 1, edges)


def blow_up_with_map(g: Digraph, order: Sequence[int] | None = None
                     ) -> tuple[Digraph, dict[int, tuple[int, int]]]:
    """Blow up every original vertex; also return ``{v: (v_in, v_out)}``.

    Only vertices that were actually split appear in the map.  ``order`` is
    the processing order of the original vertices (default ascending); the
    fresh v_out indices are handed out in that order.
    """
    if order is None:
        order = range(g.n_vertices)
    order = list(order)
    if sorted(order) != list(range(g.n_vertices)):
        raise UnsupportedParameter("order must be a permutation of the vertices")
    relabel = {}
    h = g
    for v in order:
        before = h.n_vertices
        h = blow_up_at(h, v)
        if h.n_vertices > before:
            relabel[v] = (v, before)
    return h, relabel


def blow_up(g: Digraph) -> Digraph:
    return blow_up_with_map(g)[0]


def underlying(g: Digraph) -> UndirectedGraph:
    pairs = {(min(s, t), max(s, t)) for s, t in g.edges}
    return UndirectedGraph(g.n_vertices, tuple(sorted(pairs)))


def is_acyclic(g: Digraph) -> bool:
    """Kahn's algorithm; an antiparallel pair is a directed 2-cycle."""
    indeg = [0] * g.n_vertices
    succ = [[] for _ in range(g.n_vertices)]
    for s, t in g.edges:
        indeg[t] += 1
        succ[s].append(t)
    ready = [v for v in range(g.n_vertices) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == g.n_vertices
