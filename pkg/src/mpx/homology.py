"""Exact integral simplicial homology through Smith normal forms.

Boundary matrices are kept as sparse integer columns.  Ranks are obtained by
a left-to-right column reduction that only ever uses pivots equal to +-1; when
that succeeds all invariant factors are 1.  As soon as a non-unit pivot shows
up the matrix is handed to a full sparse Smith normal form instead, so torsion
is never missed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyComplex
from .simplicial import SimplicialComplex

INFINITY = math.inf


@dataclass
class BoundaryMatrix:
    """Sparse integer matrix stored column-wise as ``{row: value}`` dicts."""

    n_rows: int
    n_cols: int
    columns: list[dict[int, int]]

    @classmethod
    def from_dense(cls, rows: list[list[int]]) -> "BoundaryMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        cols = [{i: rows[i][j] for i in range(n_rows) if rows[i][j]} for j in range(n_cols)]
        return cls(n_rows, n_cols, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.n_cols for _ in range(self.n_rows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def __matmul__(self, other: "BoundaryMatrix") -> "BoundaryMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        cols = []
        for col in other.columns:
            acc: dict[int, int] = {}
            for k, b in col.items():
                for i, a in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            cols.append({i: v for i, v in acc.items() if v})
        return BoundaryMatrix(self.n_rows, other.n_cols, cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def boundary_matrices(x: SimplicialComplex, reduced: bool = True) -> list[BoundaryMatrix]:
    """``result[d]`` is the boundary from d-chains to (d-1)-chains.

    ``result[0]`` is the augmentation onto Z when ``reduced`` and the zero map
    onto the zero group otherwise.
    """
    if x.is_empty():
        return []
    f0 = len(x.faces[0])
    if reduced:
        mats = [BoundaryMatrix(1, f0, [{0: 1} for _ in range(f0)])]
    else:
        mats = [BoundaryMatrix(0, f0, [{} for _ in range(f0)])]
    index = x.face_index
    for d in range(1, x.dim + 1):
        lower = index[d - 1]
        cols = []
        for face in x.faces[d]:
            col = {}
            for k in range(d + 1):
                col[lower[face[:k] + face[k + 1:]]] = -1 if k % 2 else 1
            cols.append(col)
        mats.append(BoundaryMatrix(len(x.faces[d - 1]), len(x.faces[d]), cols))
    return mats


def _normalize_diagonal(diag: Iterable[int]) -> tuple[int, ...]:
    """Turn a diagonal into the divisibility chain with the same SNF."""
    d = sorted(abs(v) for v in diag if v)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] // g * d[j]
    return tuple(d)


def smith_normal_form(m: BoundaryMatrix) -> SmithForm:
    """Invariant factors of an integer matrix (exact, arbitrary precision).

    Sparse elimination with the pivot chosen as an entry of smallest absolute
    value (ties broken by Markowitz cost).  Transforms are not kept.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for j, col in enumerate(m.columns):
        if col:
            cols[j] = dict(col)
            for i, v in col.items():
                rows.setdefault(i, {})[j] = v
    diag: list[int] = []

    def row_axpy(target, source, q):
        # row[target] -= q * row[source]
        trow = rows[target]
        for j, v in rows[source].items():
            nv = trow.get(j, 0) - q * v
            if nv:
                trow[j] = nv
                cols[j][target] = nv
            elif j in trow:
                del trow[j]
                del cols[j][target]
        if not trow:
            del rows[target]

    def col_axpy(target, source, q):
        tcol = cols[target]
        for i, v in cols[source].items():
            nv = tcol.get(i, 0) - q * v
            if nv:
                tcol[i] = nv
                rows[i][target] = nv
            elif i in tcol:
                del tcol[i]
                del rows[i][target]
        if not tcol:
            del cols[target]

    while cols:
        best = None
        for j, col in cols.items():
            clen = len(col) - 1
            for i, v in col.items():
                key = (abs(v), clen * (len(rows[i]) - 1))
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best[0] == (1, 0):
                break
        _, r, c = best
        p = cols[c][r]
        dirty = False
        for i in [i for i in cols[c] if i != r]:
            q = cols[c][i] // p
            if q:
                row_axpy(i, r, q)
            if c in cols and cols[c].get(i, 0):
                dirty = True
        if r in rows:
            for j in [j for j in rows[r] if j != c]:
                q = rows[r][j] // p
                if q:
                    col_axpy(j, c, q)
                if r in rows and rows[r].get(j, 0):
                    dirty = True
        if dirty:
            # remainders smaller than |p| are left; a smaller pivot exists now
            continue
        diag.append(p)
        del cols[c]
        del rows[r]
    return SmithForm(_normalize_diagonal(diag))


def _unit_column_reduction(m: BoundaryMatrix, cleared: set[int]):
    """Column reduction over Z using only unit pivots.

    Returns ``(rank, pivot_rows)`` or ``None`` if a non-unit pivot appears.
    Columns in ``cleared`` are known to reduce to zero and are skipped.
    """
    pivots: dict[int, dict[int, int]] = {}
    for j, col in enumerate(m.columns):
        if j in cleared or not col:
            continue
        col = dict(col)
        while col:
            low = max(col)
            pcol = pivots.get(low)
            if pcol is None:
                break
            q = col[low] * pcol[low]  # pcol[low] is +-1, its own inverse
            for i, v in pcol.items():
                nv = col.get(i, 0) - q * v
                if nv:
                    col[i] = nv
                else:
                    col.pop(i, None)
        if col:
            low = max(col)
            if abs(col[low]) != 1:
                return None
            pivots[low] = col
    return len(pivots), set(pivots)


@dataclass(frozen=True)
class Group:
    dim: int
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyResult:
    """Homology groups by degree; degrees not listed are zero."""

    reduced: bool
    groups: dict[int, Group] = field(default_factory=dict)

    @classmethod
    def from_groups(cls, reduced: bool, groups: Iterable[Group]) -> "HomologyResult":
        return cls(reduced, {g.dim: g for g in sorted(groups, key=lambda g: g.dim)
                             if not g.is_zero()})

    def betti(self, i: int) -> int:
        g = self.groups.get(i)
        return g.betti if g else 0

    def torsion(self, i: int) -> tuple[int, ...]:
        g = self.groups.get(i)
        return g.torsion if g else ()

    def group(self, i: int) -> Group:
        return self.groups.get(i, Group(i, 0))

    def nonzero_degrees(self) -> list[int]:
        return sorted(self.groups)

    def is_torsion_free(self) -> bool:
        return all(not g.torsion for g in self.groups.values())

    def betti_numbers(self) -> dict[int, int]:
        return {i: g.betti for i, g in self.groups.items() if g.betti}

    def to_unreduced(self) -> "HomologyResult":
        if not self.reduced:
            return self
        if self.betti(-1):  # empty complex
            return HomologyResult(False, {})
        h0 = self.group(0)
        groups = [g for i, g in self.groups.items() if i != 0]
        groups.append(Group(0, h0.betti + 1, h0.torsion))
        return HomologyResult.from_groups(False, groups)

    def to_reduced(self) -> "HomologyResult":
        if self.reduced:
            return self
        if not self.groups:
            return HomologyResult(True, {-1: Group(-1, 1)})
        h0 = self.group(0)
        groups = [g for i, g in self.groups.items() if i != 0]
        groups.append(Group(0, h0.betti - 1, h0.torsion))
        return HomologyResult.from_groups(True, groups)

    def describe(self) -> str:
        prefix = "H~" if self.reduced else "H"
        if not self.groups:
            return "0"
        return " ".join(f"{prefix}{i}={g}" for i, g in sorted(self.groups.items()))

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced,
            "groups": [{"dim": i, "betti": g.betti, "torsion": list(g.torsion)}
                       for i, g in sorted(self.groups.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HomologyResult":
        return cls.from_groups(
            data["reduced"],
            (Group(g["dim"], g["betti"], tuple(g["torsion"])) for g in data["groups"]))


def boundary_ranks(x: SimplicialComplex) -> list[SmithForm]:
    """Smith forms of the reduced boundary maps, indexed by source degree."""
    mats = boundary_matrices(x, reduced=True)
    forms: list[SmithForm | None] = [None] * len(mats)
    cleared: set[int] = set()
    for d in range(len(mats) - 1, -1, -1):
        fast = _unit_column_reduction(mats[d], cleared)
        if fast is None:
            forms[d] = smith_normal_form(mats[d])
            cleared = set()
        else:
            rank, cleared = fast
            forms[d] = SmithForm((1,) * rank)
    return forms


def reduced_homology(x: SimplicialComplex) -> HomologyResult:
    if x.is_empty():
        return HomologyResult(True, {-1: Group(-1, 1)})
    forms = boundary_ranks(x)
    f = x.f_vector()
    groups = []
    for d in range(x.dim + 1):
        rank_out = forms[d].rank
        upper = forms[d + 1] if d + 1 < len(forms) else SmithForm(())
        groups.append(Group(d, f[d] - rank_out - upper.rank, upper.torsion))
    # degree -1: Z modulo the image of the augmentation, which is onto
    return HomologyResult.from_groups(True, groups)


def homology(x: SimplicialComplex, reduced: bool = False) -> HomologyResult:
    h = reduced_homology(x)
    return h if reduced else h.to_unreduced()


def homological_connectivity(x: SimplicialComplex) -> float:
    """Largest k with vanishing reduced homology through degree k.

    Returns ``math.inf`` when all reduced homology vanishes.  This is only the
    homological shadow of k-connectivity; fundamental groups are not examined.
    """
    if x.is_empty():
        raise EmptyComplex("connectivity of the empty complex is not defined here")
    h = reduced_homology(x)
    if not h.groups:
        return INFINITY
    return min(h.groups) - 1
