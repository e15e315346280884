"""Permutation ideals T_q, their reduced variant, and checks of their structure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial

from .errors import CapacityError
from .labeled import LabeledComplex, all_labels_distinct, scarf_complex
from .monomial import Monomial, MonomialIdeal, VariableSet, index_pairs, lcm_all, minimalize, square
from .msquare import build_mq2

MAX_Q = 5

Permutation = tuple[int, ...]  # one-line notation, sigma(j) = one_line[j - 1]


@dataclass(frozen=True)
class PermutationIdeal:
    """T_q (or the reduced T_q') in the ring with one variable x_sigma per sigma in S_q."""

    q: int
    ring: VariableSet
    permutations: tuple[Permutation, ...]
    ideal: MonomialIdeal
    reduced: bool = False

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self.ideal.generators


def _symmetric_group(q: int) -> tuple[Permutation, ...]:
    return tuple(permutations(range(1, q + 1)))


def _build(q: int, keep) -> tuple[MonomialIdeal, VariableSet, tuple[Permutation, ...]]:
    perms = _symmetric_group(q)
    ring = VariableSet(tuple("x" + "".join(map(str, s)) for s in perms))
    gens = [
        Monomial(ring, [s[i - 1] if keep(s[i - 1]) else 0 for s in perms])
        for i in range(1, q + 1)
    ]
    ideal, log = minimalize(gens)
    if log:
        raise AssertionError(f"generators of T_{q} are not minimal: {log}")
    return ideal, ring, perms


def build_permutation_ideal(q: int) -> PermutationIdeal:
    """tau_i = prod over sigma of x_sigma^sigma(i); variables in lex one-line order."""
    if not 1 <= q <= MAX_Q:
        raise CapacityError(f"permutation ideals supported for 1 <= q <= {MAX_Q}")
    ideal, ring, perms = _build(q, lambda v: True)
    return PermutationIdeal(q, ring, perms, ideal)


def build_reduced_permutation_ideal(q: int) -> PermutationIdeal:
    """tau_i' keeps only the factors x_sigma^sigma(i) with sigma(i) in {q-1, q}."""
    if not 2 <= q <= MAX_Q:
        raise CapacityError(f"reduced permutation ideals supported for 2 <= q <= {MAX_Q}")
    ideal, ring, perms = _build(q, lambda v: v >= q - 1)
    return PermutationIdeal(q, ring, perms, ideal, reduced=True)


def expected_degree(q: int) -> int:
    return factorial(q + 1) // 2


def check_divisibility_equivalences(p: PermutationIdeal) -> tuple[bool, dict | None]:
    """Exhaustively test, for all sigma and all i <= j:

    * x_sigma^(2q) | tau_i tau_j  iff  i = j and sigma(i) = q
    * x_sigma^(2q) does not divide but x_sigma^(2q-1) does  iff  {sigma(i), sigma(j)} = {q, q-1}

    Returns ``(True, None)`` or ``(False, counterexample)``.
    """
    q = p.q
    g = p.generators
    for i, j in index_pairs(q):
        prod = (g[i - 1] * g[j - 1]).exps
        for k, s in enumerate(p.permutations):
            e = prod[k]
            top = e >= 2 * q
            lhs1, rhs1 = top, (i == j and s[i - 1] == q)
            lhs2, rhs2 = (not top and e >= 2 * q - 1), ({s[i - 1], s[j - 1]} == {q, q - 1})
            if lhs1 != rhs1 or lhs2 != rhs2:
                return False, {"pair": (i, j), "sigma": s, "exponent": e}
    return True, None


def square_generators(p: PermutationIdeal) -> MonomialIdeal:
    return square(p.ideal).minimal_square


def labeled_mq2(p: PermutationIdeal) -> LabeledComplex:
    """M_q^2 with l_{i,j} labeled by tau_i tau_j."""
    return build_mq2(p.q).labeled_by(p.ideal)


def label_formula(p: PermutationIdeal, pairs) -> Monomial:
    """Closed form of the lcm of {tau_i tau_j : (i, j) in pairs}: the exponent of
    x_sigma is max of sigma(i) + sigma(j) over the pairs."""
    pairs = list(pairs)
    if not pairs:
        return p.ring.one()
    factor = 0 if not p.reduced else p.q - 1

    def part(s, i):
        v = s[i - 1]
        return v if v >= factor else 0

    return Monomial(p.ring, [max(part(s, i) + part(s, j) for i, j in pairs) for s in p.permutations])


def check_label_lemmas(p: PermutationIdeal) -> dict[str, bool]:
    """Labels of M, of each facet M_k, and of the full vertex set of M_q^2."""
    q = p.q
    lc = labeled_mq2(p)
    mq = build_mq2(q)
    idx = mq.vertex_index
    ring = p.ring

    def power_map(fn):
        return Monomial(ring, [fn(s) for s in p.permutations])

    shared = tuple(sorted(idx[(i, j)] for (i, j) in idx if i < j))
    out = {}
    if shared:
        out["m_M"] = lc.face_label(shared) == power_map(lambda s: 2 * q - 1)
    for k in range(1, q + 1):
        facet = tuple(sorted(shared + (idx[(k, k)],)))
        want = power_map(lambda s: 2 * q if s[k - 1] == q else 2 * q - 1)
        out[f"m_M{k}"] = lc.face_label(facet) == want
    out["m_V"] = lcm_all(lc.labels.values()) == power_map(lambda s: 2 * q)
    return out


def mq2_labels_distinct(q: int, reduced: bool = False) -> bool:
    p = build_reduced_permutation_ideal(q) if reduced else build_permutation_ideal(q)
    return all_labels_distinct(labeled_mq2(p))


@dataclass(frozen=True)
class ScarfCheck:
    q: int
    reduced: bool
    equal: bool
    scarf_facets: tuple[tuple[int, ...], ...]
    mq2_facets: tuple[tuple[int, ...], ...]
    labels_match: bool


def scarf_equals_mq2(q: int, reduced: bool = False) -> ScarfCheck:
    """Compare Scarf((T_q)^2) with M_q^2 labeled by T_q^2, as labeled complexes.

    Taylor vertex k is the k-th generator of the square in lexicographic pair
    order, which is also the vertex id of the matching l_{i,j} in M_q^2.
    """
    p = build_reduced_permutation_ideal(q) if reduced else build_permutation_ideal(q)
    sq = square_generators(p)
    scarf = scarf_complex(sq)
    mq = labeled_mq2(p)
    labels_match = all(scarf.labels[v] == mq.labels[v] for v in mq.complex.vertex_ids) and (
        set(scarf.complex.vertex_ids) == set(mq.complex.vertex_ids))
    equal = labels_match and scarf.complex == mq.complex
    return ScarfCheck(
        q, reduced, equal,
        tuple(sorted(scarf.complex.facets)),
        tuple(sorted(mq.complex.facets)),
        labels_match,
    )


def num_square_generators(q: int) -> int:
    return comb(q, 2) + q
