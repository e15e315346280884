"""Reduced simplicial homology over a prime field via exact boundary ranks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError
from .simplicial import Face, SimplicialComplex

DEFAULT_CHARACTERISTIC = 32003
MAX_FACES = 2_000_000
DENSE_COLUMN_LIMIT = 5000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Prime field F_p used for all homology computations."""

    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        p = self.characteristic
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        # products of residues must fit in int64
        if p >= 2**31:
            raise ValueError("characteristic must be below 2**31")


DEFAULT_FIELD = FieldConfig()


def _rank_dense(a: np.ndarray, p: int) -> int:
    a = a % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = np.flatnonzero(a[r + 1:, c]) + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def _rank_sparse(columns: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        v = {k: x % p for k, x in col.items() if x % p}
        while v:
            lead = max(v)
            if lead not in pivots:
                inv = pow(v[lead], p - 2, p)
                pivots[lead] = {k: (x * inv) % p for k, x in v.items()}
                rank += 1
                break
            f = v[lead]
            for k, x in pivots[lead].items():
                y = (v.get(k, 0) - f * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return rank


def rank_mod_p(matrix, p: int) -> int:
    """Exact rank of an integer matrix over F_p."""
    a = np.array(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    return _rank_dense(a.copy(), p)


@dataclass
class ChainComplexData:
    """Reduced chain complex: ``bases[d]`` for d = -1..dim and ``boundaries[d]``
    mapping C_d -> C_{d-1} for d = 0..dim (rows: (d-1)-faces, columns: d-faces).

    Matrices are stored sparsely as one ``{row: entry}`` dict per column.
    """

    field: FieldConfig
    bases: dict[int, list[Face]]
    boundaries: dict[int, list[dict[int, int]]]

    @property
    def top(self) -> int:
        return max(self.bases)

    def dense(self, d: int) -> np.ndarray:
        cols = self.boundaries[d]
        out = np.zeros((len(self.bases[d - 1]), len(cols)), dtype=np.int64)
        for j, col in enumerate(cols):
            for i, x in col.items():
                out[i, j] = x
        return out

    def rank(self, d: int) -> int:
        if d not in self.boundaries or not self.boundaries[d]:
            return 0
        p = self.field.characteristic
        cols = self.boundaries[d]
        if len(cols) > DENSE_COLUMN_LIMIT:
            return _rank_sparse(cols, p)
        return _rank_dense(self.dense(d), p)


def chain_complex(cx: SimplicialComplex, field: FieldConfig = DEFAULT_FIELD) -> ChainComplexData:
    """Oriented chain complex with the ascending-vertex orientation.

    The boundary of ``(v_0 < ... < v_d)`` is ``sum_k (-1)^k (face without v_k)``.
    """
    if cx.is_void:
        return ChainComplexData(field, {-1: []}, {})
    faces = cx.faces()
    if len(faces) > MAX_FACES:
        raise CapacityError(f"{len(faces)} faces exceeds the limit of {MAX_FACES}")
    bases: dict[int, list[Face]] = {}
    for f in faces:
        bases.setdefault(len(f) - 1, []).append(f)
    top = max(bases)
    for d in range(-1, top + 1):
        bases.setdefault(d, [])
        bases[d].sort()
    p = field.characteristic
    minus_one = p - 1
    boundaries: dict[int, list[dict[int, int]]] = {}
    for d in range(0, top + 1):
        index = {f: i for i, f in enumerate(bases[d - 1])}
        cols = []
        for f in bases[d]:
            col = {}
            for k in range(len(f)):
                col[index[f[:k] + f[k + 1:]]] = 1 if k % 2 == 0 else minus_one
            cols.append(col)
        boundaries[d] = cols
    return ChainComplexData(field, bases, boundaries)


def reduced_homology_dims(cx: SimplicialComplex, field: FieldConfig = DEFAULT_FIELD) -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ..., dim H~_dim]``; the void complex gives ``[0]``."""
    if cx.is_void:
        return [0]
    data = chain_complex(cx, field)
    top = data.top
    ranks = {d: data.rank(d) for d in range(0, top + 1)}
    ranks[top + 1] = 0
    out = []
    for d in range(-1, top + 1):
        n = len(data.bases[d])
        nullity = n - ranks.get(d, 0)
        out.append(nullity - ranks[d + 1])
    return out


def is_acyclic(cx: SimplicialComplex, field: FieldConfig = DEFAULT_FIELD) -> bool:
    """True when every reduced homology group vanishes (vacuously for the void complex)."""
    return not any(reduced_homology_dims(cx, field))
