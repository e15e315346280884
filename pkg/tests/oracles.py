"""Brute-force reference computations used to cross-check the package.

Nothing here calls into monores beyond reading exponent tuples, so a bug in
the package's lattice, homology or Scarf code cannot hide behind itself.
"""

from itertools import combinations

P = 32003


def lcm_e(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def divides_e(a, b):
    return all(x <= y for x, y in zip(a, b))


def subset_lcm(exps, idx):
    out = tuple(0 for _ in exps[0])
    for i in idx:
        out = lcm_e(out, exps[i])
    return out


def lattice(exps):
    """lcm of every non-empty subset, by direct enumeration."""
    n = len(exps)
    return {subset_lcm(exps, s) for k in range(1, n + 1) for s in combinations(range(n), k)}


def closure(faces):
    out = set()
    for f in faces:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


def rank_mod(rows, p=P):
    """Row-reduce a list of lists over F_p in plain Python."""
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def reduced_homology(faces, p=P):
    """Reduced Betti numbers of a face set (closed under subsets, may be empty).

    Returns a dict d -> dim H~_d, listing only the non-zero ones.
    """
    faces = set(faces)
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        rows = [[0] * len(by_dim[d]) for _ in lower]
        for j, f in enumerate(by_dim[d]):
            for k in range(len(f)):
                rows[lower[f[:k] + f[k + 1:]]][j] = (-1) ** k
        ranks[d] = rank_mod(rows, p) if rows else 0
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def koszul_betti(gen_exps, p=P):
    """{(i, degree): beta} via upper Koszul complexes at every lattice point."""
    out = {}
    for a in lattice(gen_exps):
        supp = [v for v, e in enumerate(a) if e]
        faces = set()
        for k in range(len(supp) + 1):
            for tau in combinations(supp, k):
                b = list(a)
                for v in tau:
                    b[v] -= 1
                if any(divides_e(g, b) for g in gen_exps):
                    faces.add(tau)
        for d, h in reduced_homology(faces, p).items():
            out[(d + 1, a)] = h
    return out


def totals(betti):
    if not betti:
        return ()
    top = max(i for i, _ in betti)
    t = [0] * (top + 1)
    for (i, _), b in betti.items():
        t[i] += b
    return tuple(t)


def scarf_faces(gen_exps):
    """Faces of the Taylor complex whose lcm label occurs exactly once."""
    n = len(gen_exps)
    seen = {}
    for k in range(n + 1):
        for s in combinations(range(n), k):
            seen.setdefault(subset_lcm(gen_exps, s) if s else None, []).append(s)
    return {s[0] for lab, s in seen.items() if len(s) == 1}


def supports(faces, labels, p=P):
    """Criterion check by brute force: every restriction to a lattice point is empty or acyclic."""
    faces = set(faces)
    for m in lattice(list(labels.values())):
        sub = {f for f in faces if all(divides_e(labels[v], m) for v in f)}
        if sub - {()} and reduced_homology(sub, p):
            return False
    return True
