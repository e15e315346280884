"""Command-line entry point: ``monores <subcommand> ...``.

Every subcommand prints a JSON report (keys sorted) on standard output, except
``tables --format csv``. Exit status: 0 on success, 1 when a check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import warnings
from math import comb
from pathlib import Path

from . import __version__
from .betti import BettiTable, betti_koszul, betti_supported, bound_cor1, bound_cor2, taylor_bound
from .errors import MonoresError
from .homology import FieldConfig
from .io import IdealDocument, fixture_path, parse_document, document_to_ideal, serialize_document
from .labeled import is_minimal_support, scarf_complex, supports_resolution, taylor_complex
from .monomial import Monomial, MonomialIdeal, square
from .msquare import build_m2_of_ideal, build_mq2, l3_squared_fixture, pair_name
from .permutation import build_permutation_ideal, build_reduced_permutation_ideal, scarf_equals_mq2
from .polarization import polarize
from .simplicial import f_vector


class CheckFailed(Exception):
    """Raised by a subcommand whose verification did not pass; carries the report."""

    def __init__(self, result):
        self.result = result


def _mono(m: Monomial) -> str:
    return str(m)


def _betti_json(t: BettiTable) -> dict:
    return {
        "totals": list(t.totals),
        "pd": t.pd,
        "entries": [{"i": i, "degree": _mono(m), "value": b} for (i, m), b in t.entries.items()],
    }


class _Inputs:
    """Collects the bytes that determine a report, for the inputs digest."""

    def __init__(self):
        self.h = hashlib.sha256()

    def add(self, data: bytes | str):
        if isinstance(data, str):
            data = data.encode()
        self.h.update(hashlib.sha256(data).digest())

    def digest(self) -> str:
        return "sha256:" + self.h.hexdigest()


def _load(path: str, inputs: _Inputs) -> tuple[MonomialIdeal, list[str]]:
    p = Path(path)
    if not p.exists() and not p.suffix:
        candidate = fixture_path(path)
        if candidate.exists():
            p = candidate
    text = p.read_text()
    inputs.add(text)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ideal = document_to_ideal(parse_document(text))
    return ideal, [str(w.message) for w in caught]


def _target(ideal: MonomialIdeal, power: int) -> MonomialIdeal:
    return square(ideal).minimal_square if power == 2 else ideal


def cmd_ideal(args, inputs):
    ideal, notes = _load(args.file, inputs)
    return {
        "variables": list(ideal.ring.names),
        "generators": [_mono(g) for g in ideal.generators],
        "exponents": [list(g.exps) for g in ideal.generators],
        "q": ideal.q,
        "warnings": notes,
    }


def cmd_square(args, inputs):
    ideal, notes = _load(args.file, inputs)
    sq = square(ideal)
    out = {
        "base": [_mono(g) for g in ideal.generators],
        "generators": [_mono(g) for g in sq.minimal_square.generators],
        "num_generators": sq.minimal_square.q,
        "warnings": notes,
    }
    if args.log:
        out["pairs"] = [
            {
                "pair": pair_name(k),
                "product": _mono(r.product),
                "status": r.status,
                "cause": pair_name(r.cause) if r.cause else None,
                "relation": r.relation,
            }
            for k, r in sq.pairs.items()
        ]
    return out


def cmd_msq(args, inputs):
    mq = build_mq2(args.q)
    pairs = mq.pairs
    out = {
        "q": args.q,
        "vertices": [pair_name(pairs[v]) for v in sorted(pairs)],
        "facets": [[pair_name(pairs[v]) for v in f] for f in mq.complex.facets],
        "dim": mq.complex.dim,
    }
    if args.f_vector:
        out["f_vector"] = list(mq.f_vector())
    return out


def _m2_json(m2) -> dict:
    q = m2.mq2.q
    pairs = m2.mq2.pairs
    out = {
        "s": m2.s,
        "t": m2.t,
        "vertices": [pair_name(p) for p in m2.surviving_pairs],
        "labels": {pair_name(pairs[v]): _mono(m) for v, m in m2.labeled.labels.items()},
        "deletions": [
            {"vertex": pair_name(d.vertex), "cause": pair_name(d.cause), "relation": d.relation}
            for d in m2.log
        ],
        "facets": [[pair_name(pairs[v]) for v in f] for f in m2.labeled.complex.facets],
        "f_vector": list(m2.f_vector()),
    }
    if q >= 2:
        out["bound"] = list(bound_cor2(q, m2.s, m2.t))
    return out


def cmd_m2(args, inputs):
    ideal, notes = _load(args.file, inputs)
    out = _m2_json(build_m2_of_ideal(ideal))
    out["warnings"] = notes
    return out


def _build_complex(kind: str, ideal: MonomialIdeal, power: int):
    if kind in ("mq2", "m2i", "l32") and power != 2:
        raise MonoresError(f"--complex {kind} resolves I^2; use --power 2")
    if kind == "mq2":
        return build_mq2(ideal.q).labeled_by(ideal)
    if kind == "m2i":
        return build_m2_of_ideal(ideal).labeled
    if kind == "l32":
        return l3_squared_fixture().labeled_by(ideal)
    target = _target(ideal, power)
    if kind == "taylor":
        return taylor_complex(target)
    if kind == "scarf":
        return scarf_complex(target)
    raise MonoresError(f"unknown complex {kind!r}")


def cmd_support(args, inputs):
    ideal, notes = _load(args.ideal, inputs)
    lc = _build_complex(args.complex, ideal, args.power)
    report = supports_resolution(lc, method=args.method, field=FieldConfig(args.char), check_minimality=True)
    out = {
        "complex": args.complex,
        "power": args.power,
        "characteristic": args.char,
        "supports": report.supports,
        "method": report.method,
        "checked_degrees": report.checked_degrees,
        "witness": None,
        "minimal": report.minimal,
        "minimality_witness": [list(f) for f in report.minimality_witness] if report.minimality_witness else None,
        "f_vector": list(f_vector(lc.complex)),
        "warnings": notes,
    }
    if report.witness:
        m, why = report.witness
        out["witness"] = {"degree": _mono(m), "exponents": list(m.exps), "reason": why}
    if not report.supports:
        raise CheckFailed(out)
    return out


def cmd_betti(args, inputs):
    ideal, notes = _load(args.file, inputs)
    target = _target(ideal, args.power)
    field = FieldConfig(args.char)
    if args.method == "koszul":
        table = betti_koszul(target, field)
        via = "koszul"
    else:
        lc = build_m2_of_ideal(ideal).labeled if args.power == 2 else taylor_complex(target)
        via = "supported:m2i" if args.power == 2 else "supported:taylor"
        table = betti_supported(lc, target, field)
    out = _betti_json(table)
    out.update({"method": via, "power": args.power, "characteristic": args.char, "warnings": notes})
    return out


def cmd_bounds(args, inputs):
    if args.q is not None:
        q = args.q
        length = comb(q, 2) + 1
        return {
            "q": q,
            "mq2": list(bound_cor1(q)),
            "taylor": list(taylor_bound(comb(q, 2) + q, length)),
        }
    ideal, notes = _load(args.ideal, inputs)
    q = ideal.q
    m2 = build_m2_of_ideal(ideal)
    length = comb(q, 2) + 1
    return {
        "q": q,
        "s": m2.s,
        "t": m2.t,
        "mq2": list(bound_cor1(q)),
        "m2i": list(bound_cor2(q, m2.s, m2.t)),
        "m2i_f_vector": list(m2.f_vector()),
        "taylor": list(taylor_bound(comb(q, 2) + q, length)),
        "taylor_square": list(taylor_bound(len(m2.labeled.complex.vertex_ids), length)),
        "warnings": notes,
    }


def cmd_perm(args, inputs):
    p = build_reduced_permutation_ideal(args.q) if args.reduced else build_permutation_ideal(args.q)
    doc = IdealDocument.from_ideal(p.ideal)
    out = {
        "q": args.q,
        "reduced": args.reduced,
        "variables": list(p.ring.names),
        "generators": [_mono(g) for g in p.generators],
        "degrees": [g.degree for g in p.generators],
    }
    if args.out:
        Path(args.out).write_text(serialize_document(doc))
        out["written"] = args.out
    return out


def cmd_polarize(args, inputs):
    ideal, notes = _load(args.file, inputs)
    pol, pmap = polarize(ideal)
    out = {
        "variables": list(pol.ring.names),
        "generators": [_mono(g) for g in pol.generators],
        "warnings": notes,
    }
    if args.out:
        Path(args.out).write_text(serialize_document(IdealDocument.from_ideal(pol)))
        out["written"] = args.out
    return out


def table_rows(which: int) -> list[tuple[str, list]]:
    if which == 1:
        mq = build_mq2(4)
        return [
            ("d", list(range(7))),
            ("f_d(9-simplex)", list(taylor_bound(10, 7))),
            ("f_d(M_4^2)", list(mq.f_vector())),
        ]
    ideal = document_to_ideal(parse_document(fixture_path("ideal-example-3-2").read_text()))
    m2 = build_m2_of_ideal(ideal)
    taylor = taylor_complex(square(ideal).minimal_square)
    return [
        ("d", list(range(7))),
        ("f_d(Taylor(I^2))", list(f_vector(taylor.complex, 7))),
        ("f_d(M^2(I))", list(m2.f_vector())),
    ]


def cmd_tables(args, inputs):
    rows = table_rows(args.which)
    if args.format == "csv":
        return "".join(",".join([name] + [str(x) for x in vals]) + "\n" for name, vals in rows)
    return {"table": args.which, "rows": {name: vals for name, vals in rows}}


def cmd_scarfcheck(args, inputs):
    check = scarf_equals_mq2(args.q, reduced=args.reduced)
    ideal = "T'" if args.reduced else "T"
    verdict = "==" if check.equal else "!="
    out = {
        "q": args.q,
        "reduced": args.reduced,
        "equal": check.equal,
        "labels_match": check.labels_match,
        "scarf_facets": [list(f) for f in check.scarf_facets],
        "mq2_facets": [list(f) for f in check.mq2_facets],
        "message": f"Scarf({ideal}_{args.q}^2) {verdict} M_{args.q}^2",
    }
    if not check.equal:
        raise CheckFailed(out)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monores", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"monores {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ideal = sub.add_parser("ideal", help="inspect an ideal file")
    ideal_sub = ideal.add_subparsers(dest="action", required=True)
    show = ideal_sub.add_parser("show")
    show.add_argument("file")
    show.set_defaults(func=cmd_ideal)

    p = sub.add_parser("square", help="minimal generators of I^2")
    p.add_argument("file")
    p.add_argument("--log", action="store_true", help="include the pair-product log")
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("msq", help="the complex M_q^2")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--f-vector", action="store_true")
    p.set_defaults(func=cmd_msq)

    p = sub.add_parser("m2", help="the complex M^2(I)")
    p.add_argument("file")
    p.set_defaults(func=cmd_m2)

    p = sub.add_parser("support", help="check that a labeled complex supports a resolution")
    p.add_argument("--complex", choices=["mq2", "m2i", "taylor", "scarf", "l32"], required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--power", type=int, choices=[1, 2], default=2)
    p.add_argument("--method", choices=["auto", "homology", "connectivity"], default="auto")
    p.add_argument("--char", type=int, default=32003)
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("betti", help="multigraded Betti numbers")
    p.add_argument("file")
    p.add_argument("--power", type=int, choices=[1, 2], default=2)
    p.add_argument("--method", choices=["koszul", "supported"], default="supported")
    p.add_argument("--char", type=int, default=32003)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("bounds", help="Betti number bounds for I^2")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ideal")
    g.add_argument("--q", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("perm", help="permutation ideal T_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("polarize", help="polarization of an ideal")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("tables", help="reproduce the comparison tables")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("scarfcheck", help="verify Scarf(T_q^2) = M_q^2")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_scarfcheck)
    return parser


def _params(args) -> dict:
    skip = {"func", "file", "ideal"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(command: str, inputs: _Inputs, result, stream) -> None:
    if isinstance(result, str):
        stream.write(result)
        return
    report = {"command": command, "inputs_digest": inputs.digest(), "result": result, "version": __version__}
    stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    inputs = _Inputs()
    inputs.add(json.dumps(_params(args), sort_keys=True))
    try:
        result = args.func(args, inputs)
    except CheckFailed as exc:
        _emit(args.command, inputs, exc.result, stdout)
        return 1
    except (MonoresError, ValueError, OSError) as exc:
        stderr.write(f"monores: error: {exc}\n")
        return 2
    _emit(args.command, inputs, result, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
