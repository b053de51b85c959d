"""Multipaths of a digraph, the path poset and the multipath complex."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph
from .errors import BudgetExceeded, InvalidEdgeId
from .simplicial import SimplicialComplex

DEFAULT_BUDGET = 50_000_000


def default_budget() -> int:
    """Enumeration cap, overridable through the ``MPX_BUDGET`` variable."""
    raw = os.environ.get("MPX_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class PathPoset:
    """All multipaths of a digraph, sorted by (length, edge-ids)."""

    multipaths: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.multipaths)

    def __iter__(self):
        return iter(self.multipaths)

    def __contains__(self, item):
        return tuple(sorted(item)) in set(self.multipaths)

    def counts_by_length(self) -> list[int]:
        out = []
        for mp in self.multipaths:
            while len(out) <= len(mp):
                out.append(0)
            out[len(mp)] += 1
        return out

    def to_json(self) -> dict:
        return {"multipaths": [list(mp) for mp in self.multipaths]}

    @classmethod
    def from_json(cls, data: dict) -> "PathPoset":
        return cls(tuple(tuple(mp) for mp in data["multipaths"]))


def is_multipath(g: Digraph, s: Iterable[int]) -> bool:
    ids = list(s)
    for eid in ids:
        if not (isinstance(eid, int) and 0 <= eid < g.n_edges):
            raise InvalidEdgeId(f"edge-id {eid!r} not in [0, {g.n_edges})")
    if len(set(ids)) != len(ids):
        raise InvalidEdgeId("repeated edge-id")
    succ = {}
    has_pred = set()
    for eid in ids:
        a, b = g.edges[eid]
        if a in succ or b in has_pred:
            return False
        succ[a] = b
        has_pred.add(b)
    # out-degree <= 1 everywhere, so each component is a path or a cycle;
    # a path component has a start vertex with no predecessor.
    visited = set()
    for start in succ:
        if start in has_pred:
            continue
        v = start
        while v in succ:
            visited.add(v)
            v = succ[v]
    return len(visited) == len(succ)


def _extend(g: Digraph, budget: int):
    """DFS over edge-ids in increasing order, pruning on degree and cycles."""
    n = g.n_vertices
    succ = [-1] * n
    pred = [-1] * n
    # head[v]: for a path ending at v, its first vertex (valid at path ends)
    head = list(range(n))
    tail = list(range(n))
    edges = g.edges
    m = len(edges)
    chosen: list[int] = []
    out: list[tuple[int, ...]] = []

    def rec(start):
        if len(out) >= budget:
            raise BudgetExceeded(f"multipath enumeration exceeded {budget} entries", budget)
        out.append(tuple(chosen))
        for j in range(start, m):
            a, b = edges[j]
            if succ[a] != -1 or pred[b] != -1:
                continue
            # a is the end of a path starting at head[a]; b begins one ending at tail[b]
            h, t = head[a], tail[b]
            if h == b:
                continue
            succ[a] = b
            pred[b] = a
            head[t] = h
            tail[h] = t
            chosen.append(j)
            rec(j + 1)
            chosen.pop()
            succ[a] = -1
            pred[b] = -1
            head[t] = b
            tail[h] = a

    rec(0)
    return out


def enumerate_multipaths(g: Digraph, budget: int | None = None) -> PathPoset:
    if budget is None:
        budget = default_budget()
    found = _extend(g, budget)
    found.sort(key=lambda mp: (len(mp), mp))
    return PathPoset(tuple(found))


def multipath_complex(g: Digraph, budget: int | None = None) -> SimplicialComplex:
    poset = enumerate_multipaths(g, budget)
    return SimplicialComplex.from_faces(
        (mp for mp in poset.multipaths if mp), n_vertices=g.n_edges)
