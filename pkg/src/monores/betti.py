"""Multigraded Betti numbers of monomial ideals, by two independent routes.

* :func:`betti_koszul` reads them off upper Koszul simplicial complexes.
* :func:`betti_supported` reads them off strict degree restrictions of any
  labeled complex that supports a free resolution of the ideal.

Homological indexing resolves the ideal itself, so ``beta_0`` counts minimal
generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import CapacityError, SupportError
from .homology import DEFAULT_FIELD, FieldConfig, reduced_homology_dims
from .labeled import LabeledComplex, face_labels, strict_restrict, supports_resolution
from .monomial import Monomial, MonomialIdeal, lcm_lattice, minimalize
from .simplicial import SimplicialComplex

MAX_KOSZUL_SUPPORT = 25


@dataclass(frozen=True)
class BettiTable:
    entries: dict[tuple[int, Monomial], int] = field(hash=False)

    @property
    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return tuple(out)

    @property
    def pd(self) -> int:
        return len(self.totals) - 1

    def degrees(self, i: int) -> dict[Monomial, int]:
        return {m: b for (j, m), b in self.entries.items() if j == i}

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries


def _table_from_homology(found: dict[Monomial, list[int]]) -> BettiTable:
    entries = {}
    for m, dims in found.items():
        # dims[0] is H~_{-1}, which feeds beta_0
        for k, h in enumerate(dims):
            if h:
                entries[(k, m)] = h
    return BettiTable(dict(sorted(entries.items(), key=lambda kv: (kv[0][0], tuple(-e for e in kv[0][1].exps)))))


def upper_koszul(ideal: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Squarefree ``tau <= a`` (as sets of variable indices) with ``x^(a - tau)`` in the ideal."""
    supp = a.support
    if len(supp) > MAX_KOSZUL_SUPPORT:
        raise CapacityError(f"upper Koszul complex limited to {MAX_KOSZUL_SUPPORT} variables")
    gens = [g.exps for g in ideal.generators]
    exps = a.exps

    def member(tau) -> bool:
        b = list(exps)
        for v in tau:
            b[v] -= 1
        return any(all(x <= y for x, y in zip(g, b)) for g in gens)

    if not member(()):
        return SimplicialComplex.void()
    # the face set is closed under subsets, so grow it level by level
    level = [()]
    faces = [()]
    for k in range(1, len(supp) + 1):
        prev = set(level)
        level = [
            tau for tau in combinations(supp, k)
            if all(tau[:j] + tau[j + 1:] in prev for j in range(k)) and member(tau)
        ]
        if not level:
            break
        faces.extend(level)
    return SimplicialComplex.from_facets(faces)


def betti_koszul(ideal: MonomialIdeal, field: FieldConfig = DEFAULT_FIELD) -> BettiTable:
    if not ideal.minimal:
        raise ValueError("betti_koszul expects a minimal ideal")
    found = {}
    for a in lcm_lattice(ideal.generators):
        found[a] = reduced_homology_dims(upper_koszul(ideal, a), field)
    return _table_from_homology(found)


def betti_supported(
    lc: LabeledComplex,
    ideal: MonomialIdeal,
    field: FieldConfig = DEFAULT_FIELD,
    verify: bool = True,
) -> BettiTable:
    """Betti numbers from a labeled complex that supports a resolution of ``ideal``.

    Only face labels can carry Betti numbers: at any other degree the strict
    restriction equals a full restriction, which is acyclic or empty.
    """
    labels = lc.vertex_labels()
    if set(minimalize(labels)[0].generators) != set(ideal.generators):
        raise ValueError("vertex labels do not generate the given ideal")
    if verify:
        report = supports_resolution(lc, field=field)
        if not report.supports:
            m, why = report.witness
            raise SupportError(f"complex does not support a resolution: {why} at {m}", report)
    found = {}
    for m in sorted(set(face_labels(lc).values()), key=Monomial.sort_key, reverse=True):
        if m.is_one():
            continue
        found[m] = reduced_homology_dims(strict_restrict(lc, m), field)
    return _table_from_homology(found)


def projective_dimension(table: BettiTable) -> int:
    return table.pd


def bound_cor1(q: int) -> tuple[int, ...]:
    """Betti bound for I^2 from the number of generators alone, d = 0..C(q,2)."""
    if q < 2:
        raise ValueError("bound requires q >= 2")
    n = comb(q, 2)
    return tuple(comb(n, d + 1) + q * comb(n, d) for d in range(n + 1))


def bound_cor2(q: int, s: int, t: int) -> tuple[int, ...]:
    """Betti bound for I^2 after ``s`` off-diagonal and ``t`` diagonal deletions."""
    if q < 2:
        raise ValueError("bound requires q >= 2")
    if not 0 <= s <= comb(q, 2):
        raise ValueError(f"s={s} outside 0..{comb(q, 2)}")
    if not 0 <= t <= q:
        raise ValueError(f"t={t} outside 0..{q}")
    n = comb(q, 2) - s
    return tuple(comb(n, d + 1) + (q - t) * comb(n, d) for d in range(comb(q, 2) + 1))


def taylor_bound(num_generators: int, length: int) -> tuple[int, ...]:
    """``C(N, d+1)`` for d = 0..length-1: face counts of the (N-1)-simplex."""
    return tuple(comb(num_generators, d + 1) for d in range(length))
