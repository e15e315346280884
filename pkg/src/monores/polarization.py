"""Standard polarization of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass, field

from .monomial import Monomial, MonomialIdeal, VariableSet


@dataclass(frozen=True)
class PolarizationMap:
    """Source ring x_i -> target variables x_i_1, ..., x_i_k (i major, k minor)."""

    source: VariableSet
    target: VariableSet
    blocks: dict[int, tuple[int, ...]] = field(hash=False)  # source index -> target indices

    def apply(self, m: Monomial) -> Monomial:
        exps = [0] * len(self.target)
        for i, e in enumerate(m.exps):
            block = self.blocks.get(i, ())
            if e > len(block):
                raise ValueError(f"exponent {e} of {self.source.names[i]} exceeds the polarization depth")
            for t in block[:e]:
                exps[t] = 1
        return Monomial(self.target, exps)

    def depolarize(self, m: Monomial) -> Monomial:
        exps = [0] * len(self.source)
        for i, block in self.blocks.items():
            exps[i] = sum(m.exps[t] for t in block)
        return Monomial(self.source, exps)


def polarization_map(ideal: MonomialIdeal) -> PolarizationMap:
    ring = ideal.ring
    names: list[str] = []
    blocks: dict[int, tuple[int, ...]] = {}
    for i, name in enumerate(ring.names):
        depth = max((g.exps[i] for g in ideal.generators), default=0)
        blocks[i] = tuple(range(len(names), len(names) + depth))
        names.extend(f"{name}_{k}" for k in range(1, depth + 1))
    return PolarizationMap(ring, VariableSet(tuple(names)), blocks)


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Squarefree ideal with x^a mapped to prod_i prod_{k <= a_i} x_i_k."""
    if not ideal.minimal:
        raise ValueError("polarize expects a minimal ideal")
    pmap = polarization_map(ideal)
    gens = tuple(pmap.apply(g) for g in ideal.generators)
    return MonomialIdeal(pmap.target, gens, True), pmap
