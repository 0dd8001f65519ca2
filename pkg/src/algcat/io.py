"""Reading and writing algebra files, mapping files and classification reports."""
from __future__ import annotations

import os
from typing import Dict, List, Optional, Sequence, Union

from .algebra import FiniteAlgebra, InputError, SIGNATURES, from_tables, validate_axioms
from .catalog import builtin
from .classify import FAILS, HOLDS, PROPERTIES, ClassificationReport
from .homs import Homomorphism
from .words import LazyMonoid

BUILTIN_PREFIX = "builtin:"


def _err(lineno: int, msg: str) -> InputError:
    return InputError(f"line {lineno}: {msg}")


def parse_algebra_file(text: str, validate: bool = True) -> FiniteAlgebra:
    """Parse the line-based algebra format.

    Blank lines and ``#`` comments are skipped.  Headers are ``kind:``,
    ``name:``, ``elements:`` and one line per constant; each operation has a
    ``table <op>:`` block of ``n`` rows.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))

    header: Dict[str, tuple] = {}
    tables: Dict[str, list] = {}
    i = 0
    while i < len(lines):
        lineno, line = lines[i]
        if line.startswith("table"):
            rest = line[len("table"):].strip()
            if not rest.endswith(":") or not rest[:-1].strip():
                raise _err(lineno, "expected 'table <op>:'")
            op = rest[:-1].strip()
            if op in tables:
                raise _err(lineno, f"duplicate table for {op!r}")
            if "elements" not in header:
                raise _err(lineno, "'elements:' must come before any table")
            n = len(header["elements"][1])
            rows = []
            for k in range(n):
                i += 1
                if i >= len(lines) or lines[i][1].startswith("table") or ":" in lines[i][1]:
                    raise _err(lineno, f"table {op!r} has {k} rows, expected {n}")
                rlineno, rline = lines[i]
                row = rline.split()
                if len(row) != n:
                    raise _err(rlineno, f"row has {len(row)} entries, expected {n}")
                rows.append((rlineno, row))
            tables[op] = rows
            i += 1
            continue
        if ":" not in line:
            raise _err(lineno, f"cannot parse {line!r}")
        key, value = (part.strip() for part in line.split(":", 1))
        if key in header:
            raise _err(lineno, f"duplicate header {key!r}")
        header[key] = (lineno, value.split() if key == "elements" else value)
        i += 1

    for key in ("kind", "elements"):
        if key not in header:
            raise InputError(f"missing '{key}:' header")
    klineno, kind = header["kind"]
    if kind not in SIGNATURES:
        raise _err(klineno, f"unknown kind {kind!r}")
    sig = SIGNATURES[kind]
    elineno, elements = header["elements"]
    if not elements:
        raise _err(elineno, "no elements")
    seen = set()
    for e in elements:
        if e in seen:
            raise _err(elineno, f"duplicate element {e!r}")
        seen.add(e)

    allowed = {"kind", "name", "elements", *sig.constants}
    for key, (lineno, _) in header.items():
        if key not in allowed:
            raise _err(lineno, f"unexpected header {key!r} for kind {kind}")
    constants = {}
    for c in sig.constants:
        if c not in header:
            raise InputError(f"missing constant '{c}:'")
        lineno, value = header[c]
        if value not in seen:
            raise _err(lineno, f"constant {c} = {value!r} is not an element")
        constants[c] = value
    for op in tables:
        if op not in sig.operations:
            raise _err(tables[op][0][0] - 1, f"kind {kind} has no operation {op!r}")
    for op in sig.operations:
        if op not in tables:
            raise InputError(f"missing table for operation {op!r}")
        for rlineno, row in tables[op]:
            for e in row:
                if e not in seen:
                    raise _err(rlineno, f"unknown element {e!r}")

    name = header.get("name", (0, ""))[1]
    alg = from_tables(kind, elements, {op: [row for _, row in tables[op]] for op in sig.operations},
                      constants, name=name)
    if validate:
        report = validate_axioms(alg)
        bad = report.first_failure
        if bad is not None:
            raise InputError(f"axiom {bad.axiom} fails at ({', '.join(bad.witness)})")
    return alg


def render_algebra(alg: FiniteAlgebra) -> str:
    out = [f"kind: {alg.kind}"]
    if alg.name:
        out.append(f"name: {alg.name}")
    out.append("elements: " + " ".join(alg.elements))
    for c in alg.signature.constants:
        out.append(f"{c}: {alg.elements[alg.constants[c]]}")
    for op in alg.signature.operations:
        out.append(f"table {op}:")
        for row in alg.tables[op]:
            out.append(" ".join(alg.elements[x] for x in row))
    return "\n".join(out) + "\n"


def load_algebra(ref: str, validate: bool = True) -> Union[FiniteAlgebra, LazyMonoid]:
    """Load a file, or a ``builtin:<name>[:<param>]`` pseudo-path."""
    if ref.startswith(BUILTIN_PREFIX):
        parts = ref[len(BUILTIN_PREFIX):].split(":")
        try:
            params = [int(p) for p in parts[1:]]
        except ValueError:
            raise InputError(f"builtin parameter must be an integer: {ref!r}") from None
        return builtin(parts[0], *params)
    try:
        with open(ref, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {ref}: {exc.strerror}") from None
    alg = parse_algebra_file(text, validate)
    if not alg.name:
        alg = alg.renamed(os.path.splitext(os.path.basename(ref))[0])
    return alg


def load_pool(directory: str) -> List[FiniteAlgebra]:
    """Every ``*.alg`` file in ``directory``, in file-name order."""
    try:
        names = sorted(n for n in os.listdir(directory) if n.endswith(".alg"))
    except OSError as exc:
        raise InputError(f"cannot read pool directory {directory}: {exc.strerror}") from None
    return [load_algebra(os.path.join(directory, n)) for n in names]


def parse_mapping(text: str, A: FiniteAlgebra, B: FiniteAlgebra) -> Homomorphism:
    """Lines ``src -> tgt``; every source element must appear exactly once."""
    mapping: List[Optional[int]] = [None] * A.size
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise _err(lineno, f"expected 'source -> target', got {line!r}")
        src, tgt = (p.strip() for p in line.split("->", 1))
        if src not in A.elements:
            raise _err(lineno, f"{src!r} is not an element of the source")
        if tgt not in B.elements:
            raise _err(lineno, f"{tgt!r} is not an element of the target")
        i = A.index(src)
        if mapping[i] is not None:
            raise _err(lineno, f"{src!r} mapped twice")
        mapping[i] = B.index(tgt)
    missing = [A.elements[i] for i, v in enumerate(mapping) if v is None]
    if missing:
        raise InputError(f"mapping misses source elements: {' '.join(missing)}")
    return Homomorphism(A, B, mapping)


def load_mapping(path: str, A: FiniteAlgebra, B: FiniteAlgebra) -> Homomorphism:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_mapping(text, A, B)


def render_mapping(f: Homomorphism) -> str:
    A, B = f.source, f.target
    return "".join(f"{A.elements[i]} -> {B.elements[j]}\n" for i, j in enumerate(f.mapping))


_MARK = {HOLDS: "yes", FAILS: "no"}


def _cell(rec) -> str:
    mark = _MARK.get(rec.status, "?")
    return mark + ("" if rec.method == "exact-theorem" else "*")


def render_report(reports: Sequence[ClassificationReport], fmt: str = "text") -> str:
    """Text grid (one row per object) or the tab-separated machine format."""
    if fmt == "machine":
        lines = []
        for r in reports:
            for p in PROPERTIES:
                rec = r.records[p]
                witness = (rec.witness or "-").replace("\t", " ")
                lines.append("\t".join((r.object, p, rec.status, rec.method, witness)))
        return "".join(line + "\n" for line in lines)
    if fmt != "text":
        raise InputError(f"unknown format {fmt!r}")
    header = ["object", "kind", *PROPERTIES]
    rows = [[r.object, r.kind, *(_cell(r.records[p]) for p in PROPERTIES)] for r in reports]
    widths = [max(len(row[k]) for row in [header] + rows) for k in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [header] + rows]
    notes = []
    for r in reports:
        for p in PROPERTIES:
            rec = r.records[p]
            if rec.status == FAILS and rec.witness:
                notes.append(f"  {r.object} {p}: {rec.witness}")
            cc = rec.cross_check
            if cc is not None:
                notes.append(f"  {r.object} {p}: bounded cross-check {cc.status}"
                             + (f" ({cc.witness})" if cc.witness else ""))
    if reports:
        out.append("")
        out.append("yes/no = holds/fails, ? = unknown at bound, * = bounded search")
    if notes:
        out.append("witnesses:")
        out.extend(notes)
    return "\n".join(out) + "\n"
