"""Abstract simplicial complexes on integer vertex ids."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceeded, UnsupportedParameter

Face = tuple[int, ...]


class SimplicialComplex:
    """A finite simplicial complex, stored as its nonempty faces by dimension.

    ``faces[d]`` is the lexicographically sorted tuple of ``d``-faces, each a
    sorted vertex tuple.  ``n_vertices`` is the size of the vertex-id space,
    which may exceed the number of vertices actually used (subcomplexes keep
    the ids of their ambient complex).
    """

    def __init__(self, faces_by_dim: Sequence[Iterable[Face]], n_vertices: int | None = None):
        faces = tuple(tuple(sorted(set(tuple(f) for f in layer))) for layer in faces_by_dim)
        while faces and not faces[-1]:
            faces = faces[:-1]
        top = max((f[-1] for f in faces[0]), default=-1) if faces else -1
        if n_vertices is None:
            n_vertices = top + 1
        elif top >= n_vertices:
            raise UnsupportedParameter(f"vertex {top} outside declared range {n_vertices}")
        self.n_vertices = n_vertices
        self.faces = faces

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]], n_vertices: int | None = None):
        """Build from a face set that is already closed under subsets."""
        layers: list[list[Face]] = []
        for f in faces:
            f = tuple(sorted(f))
            if not f:
                continue
            while len(layers) < len(f):
                layers.append([])
            layers[len(f) - 1].append(f)
        return cls(layers, n_vertices)

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]], n_vertices: int | None = None):
        closure: set[Face] = set()
        for facet in facets:
            facet = tuple(sorted(set(facet)))
            if not facet:
                raise UnsupportedParameter("facets must be nonempty")
            if facet in closure:
                continue
            for k in range(1, len(facet) + 1):
                closure.update(combinations(facet, k))
        return cls.from_faces(closure, n_vertices)

    @classmethod
    def empty(cls, n_vertices: int = 0):
        return cls([], n_vertices)

    @classmethod
    def simplex(cls, k: int):
        """The solid k-simplex on vertices 0..k."""
        return cls.from_facets([range(k + 1)])

    # -- basic queries -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    def is_empty(self) -> bool:
        return not self.faces

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(f[0] for f in self.faces[0]) if self.faces else ()

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(f for layer in self.faces for f in layer)

    @cached_property
    def face_index(self) -> tuple[dict, ...]:
        return tuple({f: i for i, f in enumerate(layer)} for layer in self.faces)

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    def __iter__(self):
        for layer in self.faces:
            yield from layer

    def __len__(self):
        return sum(len(layer) for layer in self.faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return f"SimplicialComplex(n_vertices={self.n_vertices}, f_vector={self.f_vector()})"

    @cached_property
    def facets(self) -> tuple[Face, ...]:
        """Inclusion-maximal faces, sorted lexicographically."""
        covered: set[Face] = set()
        for layer in self.faces[1:]:
            for f in layer:
                covered.update(combinations(f, len(f) - 1))
        return tuple(sorted(f for layer in self.faces for f in layer if f not in covered))

    def f_vector(self) -> list[int]:
        return [len(layer) for layer in self.faces]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def is_closed(self) -> bool:
        fs = self.face_set
        return all(sub in fs for f in fs if len(f) > 1 for sub in combinations(f, len(f) - 1))

    def link(self, face: Sequence[int]) -> "SimplicialComplex":
        face = set(face)
        rest = [tuple(v for v in f if v not in face) for f in self if face.issubset(f)]
        return SimplicialComplex.from_faces(rest, self.n_vertices)

    def relabel(self, mapping, n_vertices: int | None = None) -> "SimplicialComplex":
        return SimplicialComplex.from_faces(
            (tuple(mapping[v] for v in f) for f in self), n_vertices)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"n_vertices": self.n_vertices, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        return cls.from_facets(data["facets"], data["n_vertices"])


def from_facets(facet_list, n_vertices=None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facet_list, n_vertices)


def matching_complex(h) -> SimplicialComplex:
    """Complex of nonempty matchings; vertex ``i`` is ``h.edges[i]``."""
    edges = h.edges
    faces: list[Face] = []
    used: set[int] = set()
    chosen: list[int] = []

    def rec(start):
        if chosen:
            faces.append(tuple(chosen))
        for j in range(start, len(edges)):
            a, b = edges[j]
            if a in used or b in used:
                continue
            used.update((a, b))
            chosen.append(j)
            rec(j + 1)
            chosen.pop()
            used.difference_update((a, b))

    rec(0)
    return SimplicialComplex.from_faces(faces, len(edges))


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Join with ``y``'s vertex ids shifted past ``x``'s id space."""
    shift = x.n_vertices
    xs = [()] + list(x)
    ys = [()] + [tuple(v + shift for v in f) for f in y]
    faces = (a + b for a in xs for b in ys if a or b)
    return SimplicialComplex.from_faces(faces, x.n_vertices + y.n_vertices)


def sphere0() -> SimplicialComplex:
    return SimplicialComplex.from_facets([[0], [1]])


def suspension(x: SimplicialComplex) -> SimplicialComplex:
    return join(x, sphere0())


def cone(x: SimplicialComplex) -> SimplicialComplex:
    return join(x, SimplicialComplex.from_facets([[0]]))


def cross_polytope_subcomplex(variant: str, n: int) -> SimplicialComplex:
    """Join of 0-spheres spanning a sphere inside X(BL_n), on BL_n's edge-ids.

    ``PRIME`` pairs each forward edge (2i, 2i+1) with its reversal.
    ``DOUBLE_PRIME`` (n divisible by 4) pairs (4j, 4j+1) with (4j+2, 4j+1)
    and (4j+3, 4j+2) with (4j+3, 4j+4).
    """
    from .digraph import gen_family

    variant = variant.upper()
    if variant == "PRIME":
        if n < 1:
            raise UnsupportedParameter("PRIME needs n >= 1")
        top = n if n % 2 == 1 else n - 1
        pairs = [((2 * i, 2 * i + 1), (2 * i + 1, 2 * i)) for i in range((top + 1) // 2)]
    elif variant == "DOUBLE_PRIME":
        if n < 4 or n % 4:
            raise UnsupportedParameter("DOUBLE_PRIME needs n a positive multiple of 4")
        pairs = []
        for j in range(n // 4):
            b = 4 * j
            pairs.append(((b, b + 1), (b + 2, b + 1)))
            pairs.append(((b + 3, b + 2), (b + 3, b + 4)))
    else:
        raise UnsupportedParameter(f"unknown variant {variant!r}")

    g = gen_family("BL", n)
    ids = [(g.edge_id(*p), g.edge_id(*q)) for p, q in pairs]
    faces = [()]
    for p, q in ids:
        faces = faces + [f + (p,) for f in faces] + [f + (q,) for f in faces]
    return SimplicialComplex.from_faces(faces, g.n_edges)


def is_subcomplex(x: SimplicialComplex, y: SimplicialComplex) -> bool:
    return x.face_set <= y.face_set


def _vertex_invariants(x: SimplicialComplex) -> dict[int, tuple]:
    counts: dict[int, list[int]] = {v: [0] * (x.dim + 1) for v in x.vertices}
    for f in x:
        for v in f:
            counts[v][len(f) - 1] += 1
    return {v: tuple(c) for v, c in counts.items()}


def are_isomorphic(x: SimplicialComplex, y: SimplicialComplex,
                   budget: int = 2_000_000) -> dict[int, int] | None:
    """Exhaustive search for a vertex bijection carrying faces onto faces.

    Returns the bijection, or ``None`` when none exists.  Vertices are
    partitioned by their link f-vector before backtracking.
    """
    if x.f_vector() != y.f_vector():
        return None
    if x.is_empty():
        return {}
    inv_x, inv_y = _vertex_invariants(x), _vertex_invariants(y)
    if sorted(inv_x.values()) != sorted(inv_y.values()):
        return None

    by_class: dict[tuple, list[int]] = {}
    for w, key in inv_y.items():
        by_class.setdefault(key, []).append(w)

    # neighbours in the 1-skeleton steer the order so edges get checked early
    nbrs: dict[int, set[int]] = {v: set() for v in x.vertices}
    for a, b in (x.faces[1] if x.dim >= 1 else ()):
        nbrs[a].add(b)
        nbrs[b].add(a)
    order: list[int] = []
    remaining = set(x.vertices)
    while remaining:
        placed = set(order)
        v = min(remaining, key=lambda u: (-len(nbrs[u] & placed),
                                          len(by_class[inv_x[u]]), u))
        order.append(v)
        remaining.discard(v)
    position = {v: i for i, v in enumerate(order)}

    # faces that become fully mapped once their last vertex (in `order`) is assigned
    closing: dict[int, list[Face]] = {v: [] for v in order}
    for f in x:
        if len(f) > 1:
            closing[max(f, key=position.__getitem__)].append(f)

    y_faces = y.face_set
    mapping: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def consistent(v):
        for f in closing[v]:
            if tuple(sorted(mapping[u] for u in f)) not in y_faces:
                return False
        return True

    def search(i):
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for w in by_class[inv_x[v]]:
            if w in used:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"isomorphism search exceeded {budget} nodes", budget)
            mapping[v] = w
            used.add(w)
            if consistent(v) and search(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(sorted(mapping.items())) if search(0) else None
