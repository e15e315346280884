"""The complexes M_q^2 and M^2(I), and the L_3^2 comparison fixture."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import CapacityError
from .labeled import LabeledComplex
from .monomial import MonomialIdeal, divides, index_pairs, product
from .simplicial import SimplicialComplex, f_vector, induced_subcomplex

MAX_Q = 8

Pair = tuple[int, int]


def pair_name(pair: Pair) -> str:
    return f"l{pair[0]},{pair[1]}"


def _pair_labels(pairs: dict[int, Pair], ideal: MonomialIdeal) -> dict:
    g = ideal.generators
    q = max(max(p) for p in pairs.values())
    if len(g) < q:
        raise ValueError(f"complex needs {q} generators, ideal has {len(g)}")
    return {v: product(g[i - 1], g[j - 1]) for v, (i, j) in pairs.items()}


@dataclass(frozen=True)
class MSquareComplex:
    """M_q^2: vertices l_{i,j} (1 <= i <= j <= q), facets M_k = M ∪ {l_{k,k}}.

    Vertex ids follow lexicographic pair order: l11, l12, ..., l1q, l22, ...
    """

    q: int
    vertex_index: dict[Pair, int] = field(hash=False)
    complex: SimplicialComplex

    @property
    def pairs(self) -> dict[int, Pair]:
        return {v: p for p, v in self.vertex_index.items()}

    def labeled_by(self, ideal: MonomialIdeal) -> LabeledComplex:
        """Label ``l_{i,j}`` with ``m_i m_j``."""
        if ideal.q != self.q:
            raise ValueError(f"M_{self.q}^2 needs an ideal with {self.q} generators")
        return LabeledComplex(self.complex, _pair_labels(self.pairs, ideal))

    def f_vector(self) -> tuple[int, ...]:
        return f_vector(self.complex)


def build_mq2(q: int) -> MSquareComplex:
    if not 1 <= q <= MAX_Q:
        raise CapacityError(f"M_q^2 supported for 1 <= q <= {MAX_Q}, got {q}")
    index = {p: k for k, p in enumerate(index_pairs(q))}
    shared = [index[(i, j)] for (i, j) in index if i < j]
    facets = [sorted(shared + [index[(k, k)]]) for k in range(1, q + 1)]
    return MSquareComplex(q, index, SimplicialComplex(tuple(tuple(f) for f in facets)))


@dataclass(frozen=True)
class Deletion:
    vertex: Pair
    cause: Pair
    relation: str  # "equal" or "strict"


@dataclass(frozen=True)
class M2OfIdeal:
    """M^2(I) with its deletion bookkeeping.

    ``s`` counts deleted off-diagonal vertices, ``t`` deleted diagonal ones.
    """

    ideal: MonomialIdeal
    mq2: MSquareComplex
    labeled: LabeledComplex
    s: int
    t: int
    log: tuple[Deletion, ...]

    @property
    def surviving_pairs(self) -> list[Pair]:
        pairs = self.mq2.pairs
        return [pairs[v] for v in sorted(self.labeled.complex.vertex_ids)]

    def f_vector(self) -> tuple[int, ...]:
        """f-vector padded to C(q,2)+1 entries, the length of the bound vectors."""
        return f_vector(self.labeled.complex, comb(self.mq2.q, 2) + 1)


def build_m2_of_ideal(ideal: MonomialIdeal) -> M2OfIdeal:
    """Delete the vertices of M_q^2 whose pair products are redundant in I^2.

    Both deletion rules are evaluated against the original pair products:
    a vertex is deleted when another pair product strictly divides its own,
    and within a class of equal products only the pair with the largest
    minimum index survives (the pairwise rule removes the pair holding the
    smallest index, and equal products never share an index).
    """
    if not ideal.minimal:
        raise ValueError("M^2(I) expects a minimally generated ideal")
    q = ideal.q
    mq = build_mq2(q)
    g = ideal.generators
    keys = list(mq.vertex_index)
    prods = {k: product(g[k[0] - 1], g[k[1] - 1]) for k in keys}

    log: list[Deletion] = []
    for uv in keys:
        strict = next((ij for ij in keys if ij != uv and prods[ij] != prods[uv]
                       and divides(prods[ij], prods[uv])), None)
        if strict is not None:
            log.append(Deletion(uv, strict, "strict"))
            continue
        equal = [ij for ij in keys if ij != uv and prods[ij] == prods[uv]]
        if equal:
            best = max(equal, key=lambda ij: ij[0])
            if best[0] > uv[0]:
                log.append(Deletion(uv, best, "equal"))
    deleted = {d.vertex for d in log}
    s = sum(1 for (i, j) in deleted if i != j)
    t = len(deleted) - s
    survivors = [mq.vertex_index[k] for k in keys if k not in deleted]
    sub = induced_subcomplex(mq.complex, survivors)
    labels = {mq.vertex_index[k]: prods[k] for k in keys if k not in deleted}
    return M2OfIdeal(ideal, mq, LabeledComplex(sub, labels), s, t, tuple(log))


# v1 = l11, v2 = l12, v3 = l22, v4 = l23, v5 = l33, v6 = l13
L32_PAIRS: dict[int, Pair] = {1: (1, 1), 2: (1, 2), 3: (2, 2), 4: (2, 3), 5: (3, 3), 6: (1, 3)}
L32_FACETS = ((1, 2, 6), (2, 3, 4), (4, 5, 6), (2, 4, 6))


@dataclass(frozen=True)
class L32Fixture:
    """L_3^2 with vertices v1..v6 (ids 1..6) and facets F1, F2, F3, F0 in that order."""

    complex: SimplicialComplex
    names: dict[int, str] = field(hash=False)
    pairs: dict[int, Pair] = field(hash=False)

    def labeled_by(self, ideal: MonomialIdeal) -> LabeledComplex:
        if ideal.q != 3:
            raise ValueError("L_3^2 needs an ideal with 3 generators")
        return LabeledComplex(self.complex, _pair_labels(self.pairs, ideal))


def l3_squared_fixture() -> L32Fixture:
    return L32Fixture(
        SimplicialComplex(L32_FACETS),
        {v: f"v{v}" for v in L32_PAIRS},
        dict(L32_PAIRS),
    )
