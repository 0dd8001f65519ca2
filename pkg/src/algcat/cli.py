"""Command-line entry point ``algcat``.

Exit codes: 0 holds/success, 1 fails, 2 unknown at bound, 3 input error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .algebra import FiniteAlgebra, InputError, validate_axioms
from .classify import (ABSENT, FAILS, HOLDS, MODES, PROPERTIES, UNKNOWN, check_property,
                       classify_table, maltsev_freeproduct_probe)
from .constructions import (is_transitive, pullback, reflexive_relations, relation_is_subalgebra,
                            relations_commute)
from .homs import enumerate_homs
from .io import load_algebra, load_mapping, load_pool, render_mapping, render_report
from .points import (CERTIFIED, FALSIFIED, is_schreier_point, is_stably_strong, is_strong_point,
                     make_point)

EXIT_OK, EXIT_FAILS, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3
_STATUS_EXIT = {HOLDS: EXIT_OK, FAILS: EXIT_FAILS, UNKNOWN: EXIT_UNKNOWN}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _finite(ref: str, no_validate: bool = False) -> FiniteAlgebra:
    alg = load_algebra(ref, validate=not no_validate)
    if not isinstance(alg, FiniteAlgebra):
        raise InputError(f"{ref} is not a finite algebra")
    return alg


def _pool(spec: Optional[str]):
    """A directory of ``.alg`` files or a comma-separated list of references."""
    if spec is None:
        return None
    if os.path.isdir(spec):
        return load_pool(spec)
    return [_finite(ref) for ref in spec.split(",") if ref]


def _worst(statuses) -> int:
    statuses = list(statuses)
    if FAILS in statuses:
        return EXIT_FAILS
    if UNKNOWN in statuses:
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_validate(args) -> int:
    code = EXIT_OK
    for ref in args.files:
        alg = load_algebra(ref, validate=False)
        if not isinstance(alg, FiniteAlgebra):
            print(f"{ref}: lazy builtin, validated by construction")
            continue
        bad = validate_axioms(alg).first_failure
        if bad is None:
            print(f"{ref}: ok ({alg.kind}, {alg.size} elements)")
        else:
            print(f"{ref}: axiom {bad.axiom} fails at ({', '.join(bad.witness)})")
            code = EXIT_FAILS
    return code


def cmd_classify(args) -> int:
    objs = [load_algebra(ref, validate=not args.no_validate) for ref in args.files]
    reports = classify_table(objs, args.mode, _pool(args.pool), args.bound)
    sys.stdout.write(render_report(reports, args.format))
    return _worst(r.status(p) for r in reports for p in PROPERTIES)


def cmd_check(args) -> int:
    Y = load_algebra(args.file, validate=not args.no_validate)
    rec = check_property(args.property, Y, args.mode, _pool(args.pool), args.bound)
    name = getattr(Y, "name", args.file)
    if args.format == "machine":
        print("\t".join((name, rec.property, rec.status, rec.method, rec.witness or "-")))
    else:
        print(f"{name} {rec.property}: {rec.status} ({rec.method}"
              + (f", {rec.theorem}" if rec.theorem else "")
              + (f", {rec.bound}" if rec.bound else "") + ")")
        if rec.witness:
            print(f"  witness: {rec.witness}")
        if rec.cross_check is not None:
            print(f"  bounded cross-check: {rec.cross_check.status}")
    return _STATUS_EXIT[rec.status]


def cmd_homs(args) -> int:
    A, B = _finite(args.source), _finite(args.target)
    homs = enumerate_homs(A, B)
    if args.list:
        for k, h in enumerate(homs):
            if k:
                print("--")
            sys.stdout.write(render_mapping(h))
    else:
        print(len(homs))
    return EXIT_OK


def cmd_point_check(args) -> int:
    A, B = _finite(args.domain), _finite(args.base)
    f = load_mapping(args.f, A, B)
    s = load_mapping(args.s, B, A)
    p = make_point(f, s)
    v = is_strong_point(p)
    if v.strong:
        print("strong")
        for line in v.trace_lines(A):
            print(f"  {line}")
    else:
        names = ",".join(A.elements[x] for x in sorted(v.witness))
        print(f"not strong: kernel and section generate the proper subalgebra {{{names}}}")
    code = EXIT_OK if v.strong else EXIT_FAILS
    if args.schreier:
        sch = is_schreier_point(p)
        if sch.holds:
            print("schreier: yes")
        else:
            print(f"schreier: no, failing element {A.elements[sch.failing]} ({sch.reason})")
    pool = _pool(args.pool)
    if pool is not None:
        st = is_stably_strong(p, pool)
        print(f"stably strong: {st.status} ({st.method})")
        if st.status == FALSIFIED:
            P = st.pulled_back.point.domain
            names = ",".join(P.elements[x] for x in sorted(st.witness))
            print(f"  pullback along {st.g!r} generates only {{{names}}}")
            code = EXIT_FAILS
        elif st.status != CERTIFIED and code == EXIT_OK:
            code = EXIT_UNKNOWN
    return code


def cmd_pullback(args) -> int:
    A, C, B = _finite(args.a), _finite(args.c), _finite(args.b)
    f = load_mapping(args.f, A, B)
    g = load_mapping(args.g, C, B)
    pb = pullback(f, g)
    print(f"{pb.algebra.size} elements: " + " ".join(pb.algebra.elements))
    return EXIT_OK


def cmd_relations(args) -> int:
    Y = _finite(args.file)
    rels = reflexive_relations(Y)
    print(f"{len(rels)} reflexive relations on {Y.name or args.file}")
    all_trans = True
    for R in rels:
        t = is_transitive(R)
        all_trans &= t
        ok = relation_is_subalgebra(R)
        print(f"  {R!r}  transitive={'yes' if t else 'no'}  subalgebra={'yes' if ok else 'no'}")
    commute = all(relations_commute(R, S) for R in rels for S in rels)
    print(f"all transitive: {'yes' if all_trans else 'no'}")
    print(f"all pairs commute: {'yes' if commute else 'no'}")
    return EXIT_OK


def cmd_probe(args) -> int:
    M = _finite(args.file)
    if args.element not in M.elements:
        raise InputError(f"{args.element!r} is not an element of {M.name}")
    res = maltsev_freeproduct_probe(M, M.index(args.element), args.length)
    P = res.monoid
    print(f"{res.status} (length bound {args.length}, {len(res.closure)} elements reached)")
    for x, how in res.derivation():
        if how[0] == "gen":
            print(f"  {P.format(x)} = generator")
        else:
            print(f"  {P.format(x)} = {P.format(how[1])} * {P.format(how[2])}")
    return EXIT_UNKNOWN if res.status == ABSENT else EXIT_OK


def _parser() -> _Parser:
    p = _Parser(prog="algcat", description="Check categorical properties of finite algebras.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("validate", help="check algebra files against their axioms")
    v.add_argument("files", nargs="+")
    v.set_defaults(run=cmd_validate)

    def checker_flags(q):
        q.add_argument("--mode", choices=MODES, default="exact")
        q.add_argument("--bound", type=int, default=None, help="word-length bound for infinite objects")
        q.add_argument("--pool", default=None,
                       help="directory of .alg files, or comma-separated references")
        q.add_argument("--format", choices=("text", "machine"), default="text")
        q.add_argument("--no-validate", action="store_true")

    c = sub.add_parser("classify", help="classify objects by the five properties")
    c.add_argument("files", nargs="+")
    checker_flags(c)
    c.set_defaults(run=cmd_classify)

    k = sub.add_parser("check", help="check one property")
    k.add_argument("property", choices=PROPERTIES)
    k.add_argument("file")
    checker_flags(k)
    k.set_defaults(run=cmd_check)

    h = sub.add_parser("homs", help="enumerate homomorphisms")
    h.add_argument("source")
    h.add_argument("target")
    g = h.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    h.set_defaults(run=cmd_homs)

    pc = sub.add_parser("point-check", help="strength of a point (f, s)")
    pc.add_argument("--f", required=True, help="mapping file for f: A -> B")
    pc.add_argument("--s", required=True, help="mapping file for s: B -> A")
    pc.add_argument("domain")
    pc.add_argument("base")
    pc.add_argument("--pool", default=None)
    pc.add_argument("--schreier", action="store_true")
    pc.set_defaults(run=cmd_point_check)

    pb = sub.add_parser("pullback", help="pullback of f: A -> B and g: C -> B")
    pb.add_argument("--f", required=True)
    pb.add_argument("--g", required=True)
    pb.add_argument("a")
    pb.add_argument("c")
    pb.add_argument("b")
    pb.set_defaults(run=cmd_pullback)

    r = sub.add_parser("relations", help="reflexive relations and their transitivity")
    r.add_argument("file")
    r.set_defaults(run=cmd_relations)

    pr = sub.add_parser("probe-coproduct", help="bounded free-product probe")
    pr.add_argument("file")
    pr.add_argument("--element", required=True)
    pr.add_argument("--length", type=int, required=True)
    pr.set_defaults(run=cmd_probe)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
