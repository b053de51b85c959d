"""Certified search for (non-pure) shellings of small complexes.

A facet order F_1, ..., F_k is a shelling when every F_j (j >= 2) meets the
union of its predecessors in a pure complex of dimension dim(F_j) - 1.  Facets
are handled as vertex bitmasks.

Two facts keep the search small without losing completeness:

* whether F may be appended only depends on the *set* of facets already
  placed, so dead sets are memoised;
* a shellable complex always has a shelling listing facets by weakly
  decreasing dimension (the rearrangement lemma of Bjorner and Wachs), so
  only such orders are explored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotAFacetPermutation
from .simplicial import Face, SimplicialComplex

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class ShellingOutcome:
    result: str  # "shelling" | "not_shellable" | "timeout"
    nodes: int
    order: tuple[Face, ...] | None = None

    @property
    def is_shelling(self) -> bool:
        return self.result == "shelling"

    def to_json(self) -> dict:
        out = {"result": self.result, "nodes": self.nodes}
        if self.order is not None:
            out["order"] = [list(f) for f in self.order]
        return out


def _mask(face: Sequence[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _can_append(f: int, placed: Sequence[int]) -> bool:
    """Is <f> ∩ <placed> pure of codimension one in f?

    The intersection is generated by f & g for g placed.  Its codim-one faces
    are f minus one vertex v, present iff some g contains f minus v; collect
    those v in ``ridge``.  Every f & g must lie in one of these ridges, i.e.
    miss at least one vertex of ``ridge``.
    """
    if not placed:
        return True
    ridge = 0
    for g in placed:
        missing = f & ~g
        if missing & (missing - 1) == 0:  # exactly one vertex of f missing
            ridge |= missing
    if not ridge:
        return False
    return all(f & ~g & ridge for g in placed)


def is_shelling(x: SimplicialComplex, order: Sequence[Sequence[int]]) -> bool:
    order = [tuple(sorted(f)) for f in order]
    if sorted(order) != list(x.facets):
        raise NotAFacetPermutation("order is not a permutation of the facets")
    masks = [_mask(f) for f in order]
    return all(_can_append(masks[j], masks[:j]) for j in range(len(masks)))


def find_shelling(x: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> ShellingOutcome:
    facets = sorted(x.facets, key=lambda f: (-len(f), f))
    if not facets:
        return ShellingOutcome("shelling", 0, ())
    masks = [_mask(f) for f in facets]
    sizes = [len(f) for f in facets]
    k = len(facets)
    full = (1 << k) - 1
    dead: set[int] = set()
    path: list[int] = []
    nodes = 0

    class _Timeout(Exception):
        pass

    def extend(state: int) -> bool:
        nonlocal nodes
        if state == full:
            return True
        if state in dead:
            return False
        # dimensions never increase along the order
        want = max(sizes[i] for i in range(k) if not state >> i & 1)
        placed = [masks[i] for i in path]
        for i in range(k):
            if state >> i & 1 or sizes[i] != want:
                continue
            nodes += 1
            if nodes > budget:
                raise _Timeout
            if _can_append(masks[i], placed):
                path.append(i)
                if extend(state | 1 << i):
                    return True
                path.pop()
        dead.add(state)
        return False

    try:
        found = extend(0)
    except _Timeout:
        return ShellingOutcome("timeout", nodes)
    if found:
        return ShellingOutcome("shelling", nodes, tuple(facets[i] for i in path))
    return ShellingOutcome("not_shellable", nodes)
