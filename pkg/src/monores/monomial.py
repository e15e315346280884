"""Exact monomial arithmetic, minimal generating sets, squares and lcm lattices.

Monomials are stored as dense exponent tuples over a fixed :class:`VariableSet`;
the :attr:`Monomial.exponents` view exposes the sparse (non-zero) entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import EmptyIdealError, RingMismatchError

MAX_EXPONENT = 2**63 - 1


@dataclass(frozen=True)
class VariableSet:
    """Ordered set of variable names for a polynomial ring."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * len(self.names))

    def var(self, name: str, power: int = 1) -> "Monomial":
        exps = [0] * len(self.names)
        exps[self.index(name)] = power
        return Monomial(self, exps)

    def monomial(self, exponents: Mapping[str | int, int] | Sequence[int]) -> "Monomial":
        """Build a monomial from an exponent sequence or a ``{var: exponent}`` map."""
        if isinstance(exponents, Mapping):
            exps = [0] * len(self.names)
            for key, e in exponents.items():
                i = key if isinstance(key, int) else self.index(key)
                exps[i] += e
            return Monomial(self, exps)
        return Monomial(self, exponents)


class Monomial:
    """A monomial ``x^a`` over a :class:`VariableSet`. Immutable and hashable."""

    __slots__ = ("ring", "exps", "_hash")

    def __init__(self, ring: VariableSet, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if len(exps) != len(ring):
            raise ValueError(f"expected {len(ring)} exponents, got {len(exps)}")
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds 64-bit range")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash((ring.names, exps)))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def _raw(cls, ring, exps):
        # trusted constructor for already-validated tuples
        m = object.__new__(cls)
        object.__setattr__(m, "ring", ring)
        object.__setattr__(m, "exps", exps)
        object.__setattr__(m, "_hash", hash((ring.names, exps)))
        return m

    @property
    def exponents(self) -> dict[int, int]:
        """Sparse view: variable index -> positive exponent."""
        return {i: e for i, e in enumerate(self.exps) if e}

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exps) if e)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def sort_key(self):
        """Key for lex order with x_1 > x_2 > ...; sort with ``reverse=True``
        to list monomials largest first (the package's canonical order)."""
        return self.exps

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps and self.ring == other.ring

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = tuple(e * k for e in self.exps)
        if any(e > MAX_EXPONENT for e in out):
            raise OverflowError("exponent overflow")
        return Monomial._raw(self.ring, out)

    def __str__(self):
        terms = []
        for name, e in zip(self.ring.names, self.exps):
            if e == 1:
                terms.append(name)
            elif e > 1:
                terms.append(f"{name}^{e}")
        return "*".join(terms) if terms else "1"

    def __repr__(self):
        return f"Monomial({self})"


def _check(a: Monomial, b: Monomial):
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatchError(f"{a.ring.names} vs {b.ring.names}")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return Monomial._raw(a.ring, tuple(x if x >= y else y for x, y in zip(a.exps, b.exps)))


def lcm_all(monomials: Iterable[Monomial], ring: VariableSet | None = None) -> Monomial:
    monomials = list(monomials)
    if not monomials:
        if ring is None:
            raise ValueError("lcm of an empty family needs a ring")
        return ring.one()
    exps = monomials[0].exps
    for m in monomials[1:]:
        _check(monomials[0], m)
        exps = tuple(x if x >= y else y for x, y in zip(exps, m.exps))
    return Monomial._raw(monomials[0].ring, exps)


def divides(a: Monomial, b: Monomial) -> bool:
    _check(a, b)
    return all(x <= y for x, y in zip(a.exps, b.exps))


def product(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    out = tuple(x + y for x, y in zip(a.exps, b.exps))
    if any(e > MAX_EXPONENT for e in out):
        raise OverflowError("exponent overflow in product")
    return Monomial._raw(a.ring, out)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by a generator list.

    ``minimal`` is True when no generator divides another and there are no
    duplicates. Use :func:`minimalize` or :meth:`from_generators` to obtain a
    minimal presentation.
    """

    ring: VariableSet
    generators: tuple[Monomial, ...]
    minimal: bool = False

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.ring != self.ring:
                raise RingMismatchError(f"generator {g} not in ring {self.ring.names}")

    @classmethod
    def from_generators(cls, gens: Sequence[Monomial]) -> "MonomialIdeal":
        return minimalize(gens)[0]

    @property
    def q(self) -> int:
        return len(self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class Removal:
    removed: Monomial
    by: Monomial
    index: int
    by_index: int
    relation: str  # "equal" or "strict"


def minimalize(gens: Sequence[Monomial]) -> tuple[MonomialIdeal, list[Removal]]:
    """Reduce a generator list to the minimal generating set.

    Survivors keep their input order. Among equal duplicates the earliest one
    is kept. The log records, for each removed generator, the first generator
    in input order that witnesses its redundancy.
    """
    gens = list(gens)
    if not gens:
        raise EmptyIdealError("cannot build an ideal from an empty generator list")
    ring = gens[0].ring
    for g in gens[1:]:
        _check(gens[0], g)
    kept: list[Monomial] = []
    log: list[Removal] = []
    for i, g in enumerate(gens):
        witness = None
        for j, h in enumerate(gens):
            if j == i:
                continue
            if h == g:
                if j < i:
                    witness = (j, "equal")
                    break
            elif divides(h, g):
                witness = (j, "strict")
                break
        if witness is None:
            kept.append(g)
        else:
            j, rel = witness
            log.append(Removal(g, gens[j], i, j, rel))
    return MonomialIdeal(ring, tuple(kept), True), log


@dataclass(frozen=True)
class PairRecord:
    product: Monomial
    status: str  # "kept" or "deleted"
    cause: tuple[int, int] | None = None
    relation: str | None = None  # "equal" or "strict" when deleted


@dataclass(frozen=True)
class SquarePresentation:
    """All pair products ``m_i m_j`` of a minimal ideal and which of them survive.

    Pair keys are 1-based ``(i, j)`` with ``i <= j``, in lexicographic order.
    """

    base: MonomialIdeal
    pairs: dict[tuple[int, int], PairRecord] = field(hash=False)
    minimal_square: MonomialIdeal

    def kept_pairs(self) -> list[tuple[int, int]]:
        return [p for p, r in self.pairs.items() if r.status == "kept"]

    def deleted_pairs(self) -> list[tuple[int, int]]:
        return [p for p, r in self.pairs.items() if r.status == "deleted"]


def index_pairs(q: int) -> list[tuple[int, int]]:
    """``[(1,1), (1,2), ..., (1,q), (2,2), ..., (q,q)]``."""
    return [(i, j) for i in range(1, q + 1) for j in range(i, q + 1)]


def square(ideal: MonomialIdeal) -> SquarePresentation:
    if not ideal.minimal:
        raise ValueError("square() expects a minimal ideal; call minimalize first")
    g = ideal.generators
    keys = index_pairs(len(g))
    products = [product(g[i - 1], g[j - 1]) for i, j in keys]
    minimal_square, log = minimalize(products)
    removed = {r.index: r for r in log}
    pairs = {}
    for idx, key in enumerate(keys):
        if idx in removed:
            r = removed[idx]
            pairs[key] = PairRecord(products[idx], "deleted", keys[r.by_index], r.relation)
        else:
            pairs[key] = PairRecord(products[idx], "kept")
    return SquarePresentation(ideal, pairs, minimal_square)


def lcm_lattice(gens: Sequence[Monomial]) -> list[Monomial]:
    """Distinct lcms of all non-empty subsets of ``gens``, largest first in lex order.

    Computed by closing the generator set under lcm, so the cost scales with
    the lattice size rather than with ``2**len(gens)``.
    """
    gens = list(gens)
    if not gens:
        raise EmptyIdealError("lcm lattice of an empty generator list")
    for g in gens[1:]:
        _check(gens[0], g)
    ring = gens[0].ring
    exps_gens = list(dict.fromkeys(g.exps for g in gens))
    seen = set(exps_gens)
    frontier = list(exps_gens)
    while frontier:
        new = []
        for a in frontier:
            for b in exps_gens:
                c = tuple(x if x >= y else y for x, y in zip(a, b))
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return [Monomial._raw(ring, e) for e in sorted(seen, reverse=True)]
