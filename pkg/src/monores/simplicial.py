"""Facet-represented abstract simplicial complexes.

Faces are sorted tuples of non-negative integer vertex ids. A complex is stored
by its facets only; faces are enumerated on demand.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import CapacityError

Face = tuple[int, ...]

MAX_FOREST_FACETS = 25


def as_face(vertices: Iterable[int]) -> Face:
    return tuple(sorted(set(vertices)))


class SimplicialComplex:
    """Simplicial complex given by its facets.

    The void complex (no faces at all) has no facets; the complex ``{∅}`` has
    the single facet ``()``.
    """

    __slots__ = ("facets", "vertex_ids")

    def __init__(self, facets: Sequence[Face]):
        self.facets: tuple[Face, ...] = tuple(facets)
        self.vertex_ids: frozenset[int] = frozenset(v for f in self.facets for v in f)

    @classmethod
    def from_facets(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Drop duplicate and non-maximal faces; keep first-seen order of the rest."""
        faces = [as_face(f) for f in faces]
        order = sorted(range(len(faces)), key=lambda i: -len(faces[i]))
        kept: list[int] = []
        kept_sets: list[frozenset] = []
        for i in order:
            s = frozenset(faces[i])
            if any(s <= k for k in kept_sets):
                continue
            kept.append(i)
            kept_sets.append(s)
        return cls([faces[i] for i in sorted(kept)])

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        return cls([as_face(vertices)])

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def __contains__(self, face) -> bool:
        s = set(face)
        return any(s.issubset(f) for f in self.facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash(frozenset(self.facets))

    def __repr__(self):
        return f"SimplicialComplex({list(self.facets)})"

    def faces(self) -> set[Face]:
        """All faces, including ``()`` when the complex is non-void."""
        out: set[Face] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return out

    def faces_by_dim(self) -> dict[int, list[Face]]:
        by: dict[int, list[Face]] = {}
        for face in self.faces():
            by.setdefault(len(face) - 1, []).append(face)
        for lst in by.values():
            lst.sort()
        return by

    def num_faces(self) -> int:
        return len(self.faces())


def from_facets(faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(faces)


def faces_of_dim(cx: SimplicialComplex, d: int) -> list[Face]:
    if d < -1:
        raise ValueError("dimension must be >= -1")
    if cx.is_void:
        return []
    out: set[Face] = set()
    for f in cx.facets:
        if len(f) >= d + 1:
            out.update(combinations(f, d + 1))
    return sorted(out)


def f_vector(cx: SimplicialComplex, length: int | None = None) -> tuple[int, ...]:
    """``(f_0, ..., f_dim)``; pad with zeros up to ``length`` entries if given."""
    if cx.is_void:
        raise ValueError("f-vector of the void complex is undefined")
    counts = [0] * (cx.dim + 1)
    for face in cx.faces():
        if face:
            counts[len(face) - 1] += 1
    if length is not None:
        if length < len(counts) and any(counts[length:]):
            raise ValueError(f"f-vector has non-zero entries beyond length {length}")
        counts = (counts + [0] * length)[:length]
    return tuple(counts)


def induced_subcomplex(cx: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Faces of ``cx`` contained in ``vertices``; void if no vertex survives."""
    w = set(vertices)
    if not w & cx.vertex_ids:
        return SimplicialComplex.void()
    return SimplicialComplex.from_facets(tuple(v for v in f if v in w) for f in cx.facets)


def _facet_components(facets: Sequence[Face]) -> int:
    n = len(facets)
    sets = [set(f) for f in facets]
    seen = [False] * n
    comps = 0
    for start in range(n):
        if seen[start]:
            continue
        comps += 1
        seen[start] = True
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if not seen[j] and sets[i] & sets[j]:
                    seen[j] = True
                    stack.append(j)
    return comps


def is_connected(cx: SimplicialComplex) -> bool:
    """Facet-chain connectivity: consecutive facets share a vertex."""
    if cx.is_void:
        raise ValueError("connectivity of the void complex is undefined")
    return _facet_components(cx.facets) == 1


def num_components(cx: SimplicialComplex) -> int:
    if cx.is_void:
        return 0
    return _facet_components(cx.facets)


class Leaf(NamedTuple):
    leaf: Face
    joint: Face | None


def _leaf_in(facets: Sequence[frozenset]) -> tuple[int, int | None] | None:
    n = len(facets)
    if n == 1:
        return 0, None
    for i in range(n):
        inters = [facets[i] & facets[h] for h in range(n) if h != i]
        for g in range(n):
            if g != i and all(x <= facets[g] for x in inters):
                return i, g
    return None


def find_leaf(cx: SimplicialComplex) -> Leaf | None:
    """Lowest-indexed leaf with its lowest-indexed joint, or None."""
    if cx.is_void:
        raise ValueError("the void complex has no facets")
    hit = _leaf_in([frozenset(f) for f in cx.facets])
    if hit is None:
        return None
    i, g = hit
    return Leaf(cx.facets[i], None if g is None else cx.facets[g])


def leafless_subcollection(cx: SimplicialComplex) -> tuple[Face, ...] | None:
    """First subcollection (by size, then facet indices) that has no leaf."""
    n = len(cx.facets)
    if n > MAX_FOREST_FACETS:
        raise CapacityError(f"forest test limited to {MAX_FOREST_FACETS} facets, got {n}")
    sets = [frozenset(f) for f in cx.facets]
    # one or two facets always have a leaf
    for k in range(3, n + 1):
        for idx in combinations(range(n), k):
            if _leaf_in([sets[i] for i in idx]) is None:
                return tuple(cx.facets[i] for i in idx)
    return None


def is_forest(cx: SimplicialComplex) -> bool:
    if cx.is_void:
        return True
    return leafless_subcollection(cx) is None


def is_tree(cx: SimplicialComplex) -> bool:
    if cx.is_void:
        return False
    return is_connected(cx) and is_forest(cx)
