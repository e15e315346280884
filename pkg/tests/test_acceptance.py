"""Acceptance criteria, one test per criterion.

Each check returns ``(ok, detail)``; the outcome is recorded and printed as a
single PASS/FAIL line in the terminal summary (see conftest.py). Running this
file directly prints the same lines.
"""

import io
import json
import random
import time
from itertools import combinations
from math import comb, factorial

import pytest

from monomial_tools import ring
from oracles import koszul_betti, reduced_homology
from strategies import random_minimal_ideal
from monores import (
    FieldConfig,
    Monomial,
    betti_koszul,
    betti_supported,
    build_m2_of_ideal,
    build_mq2,
    build_permutation_ideal,
    bound_cor2,
    divides,
    f_vector,
    is_forest,
    is_tree,
    l3_squared_fixture,
    lcm,
    load_fixture,
    minimalize,
    polarize,
    scarf_complex,
    scarf_equals_mq2,
    square,
    supports_resolution,
    taylor_complex,
)
from monores.cli import run
from monores.homology import chain_complex, reduced_homology_dims
from monores.io import fixture_names
from monores.labeled import is_minimal_support
from monores.permutation import check_divisibility_equivalences, mq2_labels_distinct
from monores.simplicial import SimplicialComplex, from_facets, leafless_subcollection

RESULTS: dict[int, tuple[bool, str]] = {}

TITLES = {
    1: "Table 1 bounds for q=4",
    2: "Table 2 f-vector of M^2(I)",
    3: "Betti table of I^2 by both oracles",
    4: "sharpness ideal",
    5: "L_3^2 failure witness",
    6: "simplicial tree facts",
    7: "permutation ideal structure",
    8: "Scarf(T_q^2) = M_q^2",
    9: "Betti dominance on random ideals",
    10: "polarization and pd",
    11: "homology soundness",
    12: "oracle equivalence and pair lemma",
}


def _cli(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stderr=io.StringIO())
    return code, out.getvalue()


def _sq(I):
    return square(I).minimal_square


def criterion_1():
    code, out = _cli("bounds", "--q", "4")
    r = json.loads(out)["result"]
    ok = code == 0 and tuple(r["mq2"]) == (10, 39, 80, 95, 66, 25, 4) and \
        tuple(r["taylor"]) == (10, 45, 120, 210, 252, 210, 120)
    return ok, f"mq2={r['mq2']} taylor={r['taylor']}"


def criterion_2():
    m2 = build_m2_of_ideal(load_fixture("ideal-example-3-2"))
    fv = m2.f_vector()
    ok = (m2.s, m2.t) == (1, 2) and len(m2.surviving_pairs) == 7 and fv == (7, 20, 30, 25, 11, 2, 0)
    return ok, f"s={m2.s} t={m2.t} vertices={len(m2.surviving_pairs)} f={fv}"


def criterion_3():
    I = load_fixture("ideal-example-3-2")
    k = betti_koszul(_sq(I))
    s = betti_supported(build_m2_of_ideal(I).labeled, _sq(I))
    ok = k == s and k.totals == (7, 12, 8, 2) and k.pd == 3 <= comb(4, 2)
    return ok, f"koszul={k.totals} supported={s.totals} pd={k.pd}"


def criterion_4():
    I = load_fixture("remark-sharpness")
    t = betti_koszul(_sq(I))
    m2 = build_m2_of_ideal(I)
    minimal, _ = is_minimal_support(m2.labeled)
    fm = build_mq2(3).f_vector()
    ok = t.totals == (6, 12, 10, 3) == fm and minimal and not m2.log and t.pd == 3 == comb(3, 2)
    return ok, f"beta={t.totals} f(M_3^2)={fm} minimal={minimal} deletions={len(m2.log)} pd={t.pd}"


def criterion_5():
    I = load_fixture("l32-failure")
    m = I.generators
    target = lcm(m[0] ** 2, m[1] * m[2])
    rep = supports_resolution(l3_squared_fixture().labeled_by(I))
    mq = build_mq2(3).labeled_by(I)
    conn = supports_resolution(mq, method="connectivity").supports
    hom = supports_resolution(mq, method="homology").supports
    got = rep.witness[0] if rep.witness else None
    ok = not rep.supports and got is not None and got.exps == target.exps and conn and hom
    return ok, f"witness={got} ({rep.witness and rep.witness[1]}) M_3^2 connectivity={conn} homology={hom}"


def criterion_6():
    trees = [is_tree(build_mq2(q).complex) for q in range(1, 7)]
    l32 = l3_squared_fixture().complex
    witness = leafless_subcollection(l32)
    ok = all(trees) and not is_forest(l32) and witness == l32.facets[:3]
    return ok, f"is_tree(M_q^2), q=1..6: {trees}; leafless witness {witness}"


def criterion_7():
    details = []
    ok = True
    for q in range(2, 6):
        p = build_permutation_ideal(q)
        degs = {g.degree for g in p.generators}
        removed = minimalize(list(p.generators))[1]
        n2 = _sq(p.ideal).q
        equiv, _ = check_divisibility_equivalences(p)
        good = degs == {factorial(q + 1) // 2} and not removed and n2 == comb(q, 2) + q and equiv
        ok &= good
        details.append(f"q={q}:{'ok' if good else 'bad'}")
    return ok, " ".join(details)


def criterion_8(deep=False):
    details = []
    ok = True
    for q in (2, 3, 4) + ((5,) if deep else ()):
        t0 = time.perf_counter()
        eq = scarf_equals_mq2(q).equal
        dt = time.perf_counter() - t0
        limit = 60 if q <= 4 else 900
        ok &= eq and dt < limit
        details.append(f"q={q}:{eq}({dt:.2f}s)")
    distinct = [mq2_labels_distinct(q) for q in (2, 3, 4)]
    ok &= all(distinct)
    if not deep:
        details.append("q=5 skipped (needs --deep)")
    return ok, " ".join(details) + f"; distinct labels q<=4: {all(distinct)}"


def criterion_9(n_ideals=210, seed=9):
    rng = random.Random(seed)
    checked = 0
    for k in range(n_ideals):
        q = (2, 3, 4)[k % 3]
        nvars = rng.randint(2, 5)
        I = random_minimal_ideal(rng, nvars, q, max_exp=4)
        table = betti_koszul(_sq(I))
        fm = build_mq2(q).f_vector()
        beta = table.totals + (0,) * (len(fm) - len(table.totals))
        if len(beta) > len(fm) or any(b > f for b, f in zip(beta, fm)):
            return False, f"dominance fails for {I}: beta={table.totals} f={fm}"
        if not supports_resolution(build_mq2(q).labeled_by(I)).supports:
            return False, f"M_q^2 does not support I^2 for {I}"
        m2 = build_m2_of_ideal(I)
        if not supports_resolution(m2.labeled).supports:
            return False, f"M^2(I) does not support I^2 for {I}"
        if m2.f_vector() != bound_cor2(q, m2.s, m2.t):
            return False, f"f(M^2(I)) != bound for {I}"
        checked += 1
    return checked >= 200, f"{checked} random ideals (q in 2,3,4; n<=5; exponents<=4)"


def criterion_10():
    I = load_fixture("remark-sharpness")
    I2 = _sq(I)
    pd_sq = betti_koszul(I2).pd
    PI2, _ = polarize(I2)
    pd_p_sq = betti_supported(taylor_complex(PI2), PI2).pd
    PI, _ = polarize(I)
    PIsq = _sq(PI)
    pd_sq_p = betti_supported(taylor_complex(PIsq), PIsq).pd
    ok = pd_sq == pd_p_sq == 3 and pd_sq_p == 2
    return ok, f"pd(I^2)={pd_sq} pd(P(I^2))={pd_p_sq} pd(P(I)^2)={pd_sq_p}"


def _random_complex(rng):
    n = rng.randint(1, 8)
    facets = []
    for _ in range(rng.randint(1, 6)):
        k = rng.randint(1, n)
        facets.append(tuple(sorted(rng.sample(range(n), k))))
    return from_facets(facets)


def _support_kinds(I):
    kinds = {"taylor^1": taylor_complex(I), "scarf^1": scarf_complex(I)}
    if I.q >= 2:
        sq = _sq(I)
        kinds.update({
            "mq2": build_mq2(I.q).labeled_by(I),
            "m2i": build_m2_of_ideal(I).labeled,
            "taylor^2": taylor_complex(sq),
            "scarf^2": scarf_complex(sq),
        })
    if I.q == 3:
        kinds["l32"] = l3_squared_fixture().labeled_by(I)
    return kinds


def criterion_11(n_complexes=200, seed=11):
    rng = random.Random(seed)
    p = FieldConfig().characteristic
    for _ in range(n_complexes):
        cx = _random_complex(rng)
        data = chain_complex(cx)
        for d in range(1, data.top + 1):
            if ((data.dense(d - 1) @ data.dense(d)) % p).any():
                return False, f"boundary of boundary non-zero on {cx}"
        dims = reduced_homology_dims(cx)
        euler = sum((-1) ** (len(f) - 1) for f in cx.faces())
        if euler != sum((-1) ** (d - 1) * h for d, h in enumerate(dims)):
            return False, f"Euler identity fails on {cx}"
    for n in range(1, 8):
        if any(reduced_homology_dims(SimplicialComplex.simplex(range(n + 1)))):
            return False, f"{n}-simplex not acyclic"
        sphere = reduced_homology_dims(from_facets(combinations(range(n + 1), n)))
        if [h for h in sphere if h] != [1] or sphere[n] != 1:
            return False, f"boundary of {n}-simplex has homology {sphere}"
    verdicts = 0
    for name in fixture_names():
        for kind, lc in _support_kinds(load_fixture(name)).items():
            a = supports_resolution(lc, method="homology", field=FieldConfig(2)).supports
            b = supports_resolution(lc, method="homology", field=FieldConfig(32003)).supports
            if a != b:
                return False, f"{name}/{kind}: char 2 says {a}, char 32003 says {b}"
            verdicts += 1
    return True, f"{n_complexes} random complexes, simplices and spheres n<=7, {verdicts} fixture verdicts agree"


def criterion_12(n_ideals=60, n_pairs=1200, seed=12):
    rng = random.Random(seed)
    for k in range(n_ideals):
        I = random_minimal_ideal(rng, rng.randint(2, 4), (2, 3, 4)[k % 3], max_exp=3)
        a = betti_koszul(I)
        b = betti_supported(taylor_complex(I), I)
        ref = koszul_betti([g.exps for g in I.generators])
        if a != b or {(i, m.exps): v for (i, m), v in a.entries.items()} != ref:
            return False, f"oracles disagree on {I}"
    R = ring(4)
    for _ in range(n_pairs):
        x = Monomial(R, [rng.randint(0, 6) for _ in range(4)])
        y = Monomial(R, [rng.randint(0, 6) for _ in range(4)])
        if not divides(x * y, lcm(x ** 2, y ** 2)):
            return False, f"pair lemma fails on {x}, {y}"
    return True, f"{n_ideals} ideals entry-for-entry; {n_pairs} monomial pairs"


CHECKS = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}


def _line(n, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {TITLES[n]} | {detail}"


@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n, request):
    if n == 8:
        ok, detail = criterion_8(deep=request.config.getoption("--deep"))
    else:
        ok, detail = CHECKS[n]()
    RESULTS[n] = (ok, detail)
    print(_line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for n, check in CHECKS.items():
        print(_line(n, *check()), flush=True)
