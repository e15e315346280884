"""Monomial-labeled complexes, Taylor and Scarf complexes, and the support criteria."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import CapacityError, MethodError, RingMismatchError
from .homology import DEFAULT_FIELD, FieldConfig, reduced_homology_dims
from .monomial import Monomial, MonomialIdeal, VariableSet, divides, lcm_all, lcm_lattice
from .simplicial import (
    Face,
    SimplicialComplex,
    as_face,
    induced_subcomplex,
    is_connected,
    leafless_subcollection,
    MAX_FOREST_FACETS,
)

MAX_TAYLOR = 20
MAX_SCARF = 16


@dataclass(frozen=True)
class LabeledComplex:
    """A simplicial complex whose vertices carry monomial labels.

    A face is labeled by the lcm of its vertex labels; the empty face by 1.
    """

    complex: SimplicialComplex
    labels: Mapping[int, Monomial] = field(hash=False)

    def __post_init__(self):
        missing = self.complex.vertex_ids - set(self.labels)
        if missing:
            raise ValueError(f"unlabeled vertices: {sorted(missing)}")
        rings = {m.ring for m in self.labels.values()}
        if len(rings) > 1:
            raise RingMismatchError("labels live in different rings")

    @property
    def ring(self) -> VariableSet:
        return next(iter(self.labels.values())).ring

    def face_label(self, face) -> Monomial:
        return face_label(self, face)

    def vertex_labels(self) -> list[Monomial]:
        return [self.labels[v] for v in sorted(self.complex.vertex_ids)]


def face_label(lc: LabeledComplex, face) -> Monomial:
    face = as_face(face)
    if face not in lc.complex:
        raise ValueError(f"{face} is not a face of the complex")
    return lcm_all((lc.labels[v] for v in face), lc.ring)


def _degree_vertices(lc: LabeledComplex, m: Monomial) -> set[int]:
    if m.ring != lc.ring:
        raise RingMismatchError("degree and labels live in different rings")
    return {v for v in lc.complex.vertex_ids if divides(lc.labels[v], m)}


def restrict_to_degree(lc: LabeledComplex, m: Monomial) -> LabeledComplex:
    """The subcomplex of faces whose labels divide ``m``.

    Face labels are lcms of vertex labels, so this is the induced subcomplex on
    the vertices whose labels divide ``m``.
    """
    vm = _degree_vertices(lc, m)
    sub = induced_subcomplex(lc.complex, vm)
    return LabeledComplex(sub, {v: lc.labels[v] for v in sub.vertex_ids})


def strict_restrict(lc: LabeledComplex, m: Monomial) -> SimplicialComplex:
    """Faces whose labels divide ``m`` but differ from it (``∅`` included when m != 1)."""
    vm = _degree_vertices(lc, m)
    sub = induced_subcomplex(lc.complex, vm)
    ring = lc.ring
    if sub.is_void:
        return SimplicialComplex([()]) if not m.is_one() else SimplicialComplex.void()
    keep = []
    for face in sub.faces():
        if lcm_all((lc.labels[v] for v in face), ring) != m:
            keep.append(face)
    if not keep:
        return SimplicialComplex.void()
    return SimplicialComplex.from_facets(keep)


def _generators(ideal_or_gens) -> list[Monomial]:
    if isinstance(ideal_or_gens, MonomialIdeal):
        return list(ideal_or_gens.generators)
    return list(ideal_or_gens)


def taylor_complex(ideal: MonomialIdeal | Sequence[Monomial]) -> LabeledComplex:
    """Full simplex on the generators; vertex ``i`` is labeled by generator ``i``."""
    gens = _generators(ideal)
    if len(gens) > MAX_TAYLOR:
        raise CapacityError(f"Taylor complex limited to {MAX_TAYLOR} generators")
    return LabeledComplex(SimplicialComplex.simplex(range(len(gens))), dict(enumerate(gens)))


def _subset_labels(gens: Sequence[Monomial]) -> np.ndarray:
    # row s = exponent vector of lcm over the generators in bitmask s
    q = len(gens)
    n = len(gens[0].ring)
    out = np.zeros((1 << q, n), dtype=np.int64)
    for k, g in enumerate(gens):
        lo = 1 << k
        out[lo:2 * lo] = np.maximum(out[:lo], np.array(g.exps, dtype=np.int64))
    return out


def scarf_complex(ideal: MonomialIdeal | Sequence[Monomial]) -> LabeledComplex:
    """Faces of the Taylor complex whose labels occur exactly once."""
    gens = _generators(ideal)
    q = len(gens)
    if q > MAX_SCARF:
        raise CapacityError(f"Scarf complex limited to {MAX_SCARF} generators")
    labels = _subset_labels(gens)
    rows = np.ascontiguousarray(labels).view(np.dtype((np.void, labels.dtype.itemsize * labels.shape[1])))
    _, inverse, counts = np.unique(rows.ravel(), return_inverse=True, return_counts=True)
    unique = counts[inverse.ravel()] == 1
    masks = np.arange(1 << q)
    for k in range(q):
        has = (masks >> k) & 1 == 1
        sub = masks[has & unique] ^ (1 << k)
        if not np.all(unique[sub] | (sub == 0)):
            raise ValueError("unique-label faces are not closed under taking subsets")
    maximal = unique.copy()
    for k in range(q):
        without = ((masks >> k) & 1) == 0
        ext = masks | (1 << k)
        maximal &= ~(without & unique[ext])
    facets = [tuple(k for k in range(q) if (s >> k) & 1) for s in np.flatnonzero(maximal)]
    if not facets:
        facets = [()]
    return LabeledComplex(SimplicialComplex.from_facets(facets), dict(enumerate(gens)))


@dataclass(frozen=True)
class SupportReport:
    supports: bool
    method: str  # "tree-connectivity" or "homology"
    checked_degrees: int
    # (degree, "disconnected" | "not-acyclic"); homology mode says "disconnected" when H~_0 != 0
    witness: tuple[Monomial, str] | None = None
    minimal: bool | None = None
    minimality_witness: tuple[Face, Face] | None = None


def _failure(sub: SimplicialComplex, method: str, field: FieldConfig) -> str | None:
    # None when the restriction passes; otherwise the reason it fails
    if method == "connectivity":
        return None if is_connected(sub) else "disconnected"
    dims = reduced_homology_dims(sub, field)
    if not any(dims):
        return None
    return "disconnected" if dims[1] else "not-acyclic"


def supports_resolution(
    lc: LabeledComplex,
    gens: Sequence[Monomial] | MonomialIdeal | None = None,
    method: str = "auto",
    field: FieldConfig = DEFAULT_FIELD,
    check_minimality: bool = False,
) -> SupportReport:
    """Check that every degree restriction over the lcm lattice is empty or acyclic.

    ``gens`` must equal the vertex labels as a multiset; it defaults to them.
    With ``method="connectivity"`` (or ``"auto"`` on a simplicial forest) the
    cheaper test "empty or connected" is used. The witness is the first failing
    degree in lattice order (lex, largest first).
    """
    labels = lc.vertex_labels()
    if gens is None:
        gens = labels
    else:
        gens = _generators(gens)
        if Counter(gens) != Counter(labels):
            raise ValueError("vertex labels do not match the given generators")
    if method not in ("auto", "homology", "connectivity"):
        raise MethodError(f"unknown method {method!r}")
    if method in ("auto", "connectivity"):
        nf = len(lc.complex.facets)
        forest = nf <= MAX_FOREST_FACETS and leafless_subcollection(lc.complex) is None
        if method == "connectivity" and not forest:
            raise MethodError("connectivity criterion requires a simplicial forest")
        method = "connectivity" if forest else "homology"
    name = "tree-connectivity" if method == "connectivity" else "homology"

    lattice = lcm_lattice(gens)
    failures: dict[frozenset, str | None] = {}
    witness = None
    for m in lattice:
        vm = frozenset(_degree_vertices(lc, m))
        if not vm:
            continue
        if vm not in failures:
            failures[vm] = _failure(induced_subcomplex(lc.complex, vm), method, field)
        if failures[vm]:
            witness = (m, failures[vm])
            break
    minimal = mw = None
    if check_minimality:
        minimal, mw = is_minimal_support(lc)
    return SupportReport(witness is None, name, len(lattice), witness, minimal, mw)


def face_labels(lc: LabeledComplex) -> dict[Face, Monomial]:
    """Labels of all faces, computed incrementally from smaller faces."""
    ring = lc.ring
    out: dict[Face, Monomial] = {(): ring.one()}
    for face in sorted(lc.complex.faces(), key=lambda f: (len(f), f)):
        if face:
            prev = out[face[:-1]]
            new = lc.labels[face[-1]]
            out[face] = Monomial._raw(ring, tuple(x if x >= y else y for x, y in zip(prev.exps, new.exps)))
    return out


def is_minimal_support(lc: LabeledComplex) -> tuple[bool, tuple[Face, Face] | None]:
    """True iff no face shares its label with a face obtained by adding one vertex."""
    if lc.complex.is_void:
        return True, None
    labels = face_labels(lc)
    for face in sorted(labels, key=lambda f: (len(f), f)):
        for k in range(len(face)):
            smaller = face[:k] + face[k + 1:]
            if labels[smaller] == labels[face]:
                return False, (smaller, face)
    return True, None


def all_labels_distinct(lc: LabeledComplex) -> bool:
    labels = face_labels(lc)
    return len(set(labels.values())) == len(labels)

