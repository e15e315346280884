"""Reading and writing ideal documents.

Text format, one monomial per line::

    # comment
    x^2*y
    y^3

``monomial := term ("*" term)*``, ``term := varname ("^" uint)?``. Variables are
ordered by first appearance. The JSON alternative is
``{"variables": [...], "generators": [[uint, ...], ...]}``.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .monomial import Monomial, MonomialIdeal, VariableSet, minimalize

_TERM = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^([0-9]+))?")


class RedundantGeneratorWarning(UserWarning):
    pass


@dataclass(frozen=True)
class IdealDocument:
    variables: tuple[str, ...]
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(tuple(int(e) for e in r) for r in self.generators))
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise ParseError("duplicate variable names")
        for k, row in enumerate(self.generators):
            if len(row) != n:
                raise ParseError(f"generator {k + 1} has {len(row)} exponents, expected {n}")
            if any(e < 0 for e in row):
                raise ParseError(f"generator {k + 1} has a negative exponent")

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IdealDocument":
        return cls(ideal.ring.names, tuple(g.exps for g in ideal.generators))

    def monomials(self) -> list[Monomial]:
        ring = VariableSet(self.variables)
        return [Monomial(ring, row) for row in self.generators]


def _parse_text(text: str) -> IdealDocument:
    variables: dict[str, int] = {}
    terms_per_line: list[list[tuple[str, int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        terms = []
        pos = 0
        expect_term = True
        while pos < len(line):
            ch = line[pos]
            if ch.isspace():
                pos += 1
                continue
            if expect_term:
                m = _TERM.match(line, pos)
                if not m:
                    if ch == "-" or ch.isdigit():
                        raise ParseError("malformed or negative exponent", lineno, pos + 1)
                    raise ParseError(f"expected a variable name, got {ch!r}", lineno, pos + 1)
                name, exp = m.group(1), m.group(2)
                end = m.end()
                if end < len(line) and line[end] == "^":
                    raise ParseError("malformed or negative exponent", lineno, end + 2)
                terms.append((name, int(exp) if exp is not None else 1))
                variables.setdefault(name, len(variables))
                pos = end
                expect_term = False
            else:
                if ch != "*":
                    raise ParseError(f"expected '*', got {ch!r}", lineno, pos + 1)
                pos += 1
                expect_term = True
        if expect_term:
            raise ParseError("line ends where a term is expected", lineno, len(line.rstrip()) + 1)
        terms_per_line.append(terms)
    if not terms_per_line:
        raise ParseError("no generators found")
    names = tuple(variables)
    rows = []
    for terms in terms_per_line:
        row = [0] * len(names)
        for name, e in terms:
            row[variables[name]] += e
        rows.append(tuple(row))
    return IdealDocument(names, tuple(rows))


def _parse_json(text: str) -> IdealDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "variables" not in data or "generators" not in data:
        raise ParseError('JSON ideal needs "variables" and "generators"')
    for row in data["generators"]:
        if not isinstance(row, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in row):
            raise ParseError("generator rows must be lists of integers")
    if not data["generators"]:
        raise ParseError("no generators found")
    return IdealDocument(tuple(data["variables"]), tuple(tuple(r) for r in data["generators"]))


def parse_document(text: str) -> IdealDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def document_to_ideal(doc: IdealDocument) -> MonomialIdeal:
    """Minimalize the document's generators, warning about any that are dropped."""
    ideal, log = minimalize(doc.monomials())
    if log:
        removed = ", ".join(f"{r.removed} (by {r.by})" for r in log)
        warnings.warn(f"removed redundant generators: {removed}", RedundantGeneratorWarning, stacklevel=3)
    return ideal


def parse_ideal(text: str) -> MonomialIdeal:
    return document_to_ideal(parse_document(text))


def read_ideal(path: str | Path) -> MonomialIdeal:
    return parse_ideal(Path(path).read_text())


def serialize_document(doc: IdealDocument, fmt: str = "text") -> str:
    """Serialize so that :func:`parse_document` restores ``doc`` exactly.

    In text form the first line spells out every variable (with ``^0`` where
    needed) to pin the variable order.
    """
    if fmt == "json":
        return json.dumps({"variables": list(doc.variables), "generators": [list(r) for r in doc.generators]},
                          sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for k, row in enumerate(doc.generators):
        terms = []
        for name, e in zip(doc.variables, row):
            if e == 1:
                terms.append(name)
            elif e > 1 or (k == 0 and e == 0):
                terms.append(f"{name}^{e}")
        if not terms:
            terms = [f"{doc.variables[0]}^0"] if doc.variables else []
        if not terms:
            raise ValueError("cannot write a generator over an empty ring as text")
        lines.append("*".join(terms))
    return "\n".join(lines) + "\n"


def fixture_path(name: str) -> Path:
    """Path of a bundled example ideal, e.g. ``fixture_path("remark-sharpness")``."""
    if not name.endswith(".ideal"):
        name += ".ideal"
    return Path(str(resources.files("monores") / "fixtures" / name))


def fixture_names() -> list[str]:
    root = resources.files("monores") / "fixtures"
    return sorted(p.name[:-6] for p in root.iterdir() if p.name.endswith(".ideal"))


def load_fixture(name: str) -> MonomialIdeal:
    return read_ideal(fixture_path(name))
