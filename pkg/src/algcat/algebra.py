"""Signatures and finite operation-table algebras."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple


class InputError(ValueError):
    """Malformed algebra data (bad dimensions, names, indices)."""


@dataclass(frozen=True)
class Signature:
    kind: str
    operations: Tuple[str, ...]
    constants: Tuple[str, ...]
    pointed: str

    @property
    def is_monoid_like(self) -> bool:
        return self.kind in ("monoid", "commutative-monoid")


SIGNATURES: Dict[str, Signature] = {
    "monoid": Signature("monoid", ("mul",), ("unit",), "unit"),
    "commutative-monoid": Signature("commutative-monoid", ("mul",), ("unit",), "unit"),
    "semiring": Signature("semiring", ("add", "mul"), ("zero", "one"), "zero"),
    "subtraction-algebra": Signature("subtraction-algebra", ("sub",), ("zero",), "zero"),
}


def signature(kind: str) -> Signature:
    try:
        return SIGNATURES[kind]
    except KeyError:
        raise InputError(f"unknown algebra kind {kind!r}") from None


def same_theory(kind_a: str, kind_b: str) -> bool:
    """True when homomorphisms between the two kinds make sense."""
    return SIGNATURES[kind_a].operations == SIGNATURES[kind_b].operations


Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteAlgebra:
    """An algebra given by operation tables over indices ``0..n-1``.

    ``elements`` fixes the index order; every "smallest witness" in the
    library refers to it.
    """

    kind: str
    elements: Tuple[str, ...]
    tables: Mapping[str, Table]
    constants: Mapping[str, int]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        sig = signature(self.kind)
        n = len(self.elements)
        if n < 1:
            raise InputError("an algebra needs at least one element")
        if len(set(self.elements)) != n:
            seen = set()
            dup = next(e for e in self.elements if e in seen or seen.add(e))
            raise InputError(f"duplicate element {dup!r}")
        tables = {}
        for op in sig.operations:
            if op not in self.tables:
                raise InputError(f"missing table for operation {op!r}")
            rows = self.tables[op]
            if len(rows) != n or any(len(row) != n for row in rows):
                raise InputError(f"table {op!r} is not {n}x{n}")
            for row in rows:
                for v in row:
                    if not (isinstance(v, int) and 0 <= v < n):
                        raise InputError(f"table {op!r} has out-of-range entry {v!r}")
            tables[op] = tuple(tuple(int(v) for v in row) for row in rows)
        extra = set(self.tables) - set(sig.operations)
        if extra:
            raise InputError(f"unexpected operations {sorted(extra)} for kind {self.kind}")
        consts = {}
        for c in sig.constants:
            if c not in self.constants:
                raise InputError(f"missing constant {c!r}")
            v = self.constants[c]
            if not (isinstance(v, int) and 0 <= v < n):
                raise InputError(f"constant {c!r} out of range")
            consts[c] = int(v)
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "tables", tables)
        object.__setattr__(self, "constants", consts)

    def __hash__(self):
        return hash((self.kind, self.elements, tuple(sorted(self.tables.items()))))

    @property
    def signature(self) -> Signature:
        return SIGNATURES[self.kind]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> int:
        """Index of the pointed constant (unit for monoids, zero otherwise)."""
        return self.constants[self.signature.pointed]

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise InputError(f"{name!r} is not an element of {self.name or 'algebra'}") from None

    def op(self, name: str, x: int, y: int) -> int:
        return self.tables[name][x][y]

    def with_kind(self, kind: str, name: Optional[str] = None) -> "FiniteAlgebra":
        """Reinterpret under another kind with the same operation symbols."""
        if not same_theory(self.kind, kind):
            raise InputError(f"cannot view {self.kind} as {kind}")
        return FiniteAlgebra(kind, self.elements, self.tables, self.constants,
                             name=name if name is not None else self.name)

    def renamed(self, name: str) -> "FiniteAlgebra":
        return FiniteAlgebra(self.kind, self.elements, self.tables, self.constants, name=name)

    def __repr__(self):
        label = self.name or "algebra"
        return f"<FiniteAlgebra {label} kind={self.kind} size={self.size}>"


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    witness: Optional[Tuple[str, ...]] = None


@dataclass(frozen=True)
class AxiomReport:
    checks: Tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[AxiomCheck]:
        return next((c for c in self.checks if not c.passed), None)

    def __bool__(self):
        return self.passed


def _first(pred, n: int, arity: int) -> Optional[Tuple[int, ...]]:
    # itertools.product yields tuples in lexicographic order
    for tup in product(range(n), repeat=arity):
        if not pred(*tup):
            return tup
    return None


def validate_axioms(alg: FiniteAlgebra) -> AxiomReport:
    """Check every axiom of ``alg.kind`` exhaustively.

    Witnesses are element-name tuples: for unit laws the witness is the
    offending product's arguments, e.g. ``(e, a)`` when ``e*a != a``.
    """
    n = alg.size
    checks = []

    def run(name, pred, arity, wrap=None):
        bad = _first(pred, n, arity)
        if bad is not None and wrap is not None:
            bad = wrap(bad)
        checks.append(AxiomCheck(name, bad is None,
                                 None if bad is None else tuple(alg.elements[i] for i in bad)))

    if alg.kind in ("monoid", "commutative-monoid"):
        t, u = alg.tables["mul"], alg.constants["unit"]
        run("associativity", lambda x, y, z: t[t[x][y]][z] == t[x][t[y][z]], 3)
        run("left-unit", lambda x: t[u][x] == x, 1, lambda b: (u, b[0]))
        run("right-unit", lambda x: t[x][u] == x, 1, lambda b: (b[0], u))
        if alg.kind == "commutative-monoid":
            run("commutativity", lambda x, y: t[x][y] == t[y][x], 2)
    elif alg.kind == "semiring":
        a, m = alg.tables["add"], alg.tables["mul"]
        z, o = alg.constants["zero"], alg.constants["one"]
        run("add-associativity", lambda x, y, w: a[a[x][y]][w] == a[x][a[y][w]], 3)
        run("add-commutativity", lambda x, y: a[x][y] == a[y][x], 2)
        run("add-unit", lambda x: a[z][x] == x, 1, lambda b: (z, b[0]))
        run("mul-associativity", lambda x, y, w: m[m[x][y]][w] == m[x][m[y][w]], 3)
        run("mul-left-unit", lambda x: m[o][x] == x, 1, lambda b: (o, b[0]))
        run("mul-right-unit", lambda x: m[x][o] == x, 1, lambda b: (b[0], o))
        run("left-distributivity", lambda x, y, w: m[x][a[y][w]] == a[m[x][y]][m[x][w]], 3)
        run("right-distributivity", lambda x, y, w: m[a[x][y]][w] == a[m[x][w]][m[y][w]], 3)
        run("zero-absorbing", lambda x: m[z][x] == z and m[x][z] == z, 1)
    elif alg.kind == "subtraction-algebra":
        s, z = alg.tables["sub"], alg.constants["zero"]
        run("right-zero", lambda x: s[x][z] == x, 1, lambda b: (b[0], z))
        run("self-zero", lambda x: s[x][x] == z, 1, lambda b: (b[0], b[0]))
    return AxiomReport(tuple(checks))


def from_tables(kind: str, elements: Sequence[str], tables: Mapping[str, Sequence[Sequence[str]]],
                constants: Mapping[str, str], name: str = "") -> FiniteAlgebra:
    """Build an algebra from tables written with element names."""
    idx = {e: i for i, e in enumerate(elements)}
    if len(idx) != len(elements):
        raise InputError("duplicate element names")

    def lookup(e):
        try:
            return idx[e]
        except KeyError:
            raise InputError(f"unknown element {e!r}") from None

    int_tables = {op: tuple(tuple(lookup(e) for e in row) for row in rows)
                  for op, rows in tables.items()}
    int_consts = {c: lookup(e) for c, e in constants.items()}
    return FiniteAlgebra(kind, tuple(elements), int_tables, int_consts, name=name)


def from_function(kind: str, elements: Sequence, ops: Mapping[str, object],
                  constants: Mapping[str, object], names: Optional[Sequence[str]] = None,
                  name: str = "") -> FiniteAlgebra:
    """Tabulate Python callables over an explicit carrier."""
    elements = list(elements)
    idx = {e: i for i, e in enumerate(elements)}
    tables = {op: tuple(tuple(idx[fn(x, y)] for y in elements) for x in elements)
              for op, fn in ops.items()}
    consts = {c: idx[v] for c, v in constants.items()}
    labels = tuple(names) if names is not None else tuple(str(e) for e in elements)
    return FiniteAlgebra(kind, labels, tables, consts, name=name)


def iter_pairs(n: int) -> Iterator[Tuple[int, int]]:
    return product(range(n), repeat=2)
