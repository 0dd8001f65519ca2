"""Products, pullbacks, subalgebra closure, free products and reflexive relations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .algebra import FiniteAlgebra, InputError, same_theory
from .homs import Algebra, HomError, Homomorphism
from .words import NATURALS, FreeProduct


def _pair_name(A: FiniteAlgebra, B: FiniteAlgebra, a: int, b: int) -> str:
    return f"({A.elements[a]},{B.elements[b]})"


def _check_same_kind(A: Algebra, B: Algebra) -> None:
    if not same_theory(A.kind, B.kind):
        raise InputError(f"kinds differ: {A.kind} vs {B.kind}")


# ---------------------------------------------------------------- products

class Product(NamedTuple):
    algebra: FiniteAlgebra
    left: Homomorphism
    right: Homomorphism

    def pair(self, f: Homomorphism, g: Homomorphism) -> Homomorphism:
        """The map ``<f, g>`` into the product."""
        if f.source != g.source:
            raise HomError("pairing needs a common domain")
        nb = self.right.target.size
        return Homomorphism(f.source, self.algebra,
                            [f(x) * nb + g(x) for x in range(f.source.size)], check=False)

    def index(self, a: int, b: int) -> int:
        return a * self.right.target.size + b


def product(A: FiniteAlgebra, B: FiniteAlgebra) -> Product:
    """Componentwise product; the pair ``(i, j)`` has index ``i*|B| + j``."""
    _check_same_kind(A, B)
    na, nb = A.size, B.size
    names = tuple(_pair_name(A, B, i, j) for i in range(na) for j in range(nb))
    tables = {}
    for op in A.signature.operations:
        ta, tb = A.tables[op], B.tables[op]
        tables[op] = tuple(tuple(ta[i][k] * nb + tb[j][l] for k in range(na) for l in range(nb))
                           for i in range(na) for j in range(nb))
    consts = {c: A.constants[c] * nb + B.constants[c] for c in A.signature.constants}
    P = FiniteAlgebra(A.kind, names, tables, consts, name=f"{A.name}x{B.name}")
    pa = Homomorphism(P, A, [i for i in range(na) for _ in range(nb)], check=False)
    pb = Homomorphism(P, B, [j for _ in range(na) for j in range(nb)], check=False)
    return Product(P, pa, pb)


def diagonal(A: FiniteAlgebra, prod: Optional[Product] = None) -> Homomorphism:
    prod = prod or product(A, A)
    return Homomorphism(A, prod.algebra, [prod.index(a, a) for a in range(A.size)], check=False)


# ---------------------------------------------------------------- subalgebras

def is_closed(A: FiniteAlgebra, subset: Iterable[int]) -> bool:
    s = set(subset)
    if any(A.constants[c] not in s for c in A.signature.constants):
        return False
    for op in A.signature.operations:
        t = A.tables[op]
        if any(t[x][y] not in s for x in s for y in s):
            return False
    return True


def subalgebra(A: FiniteAlgebra, subset: Iterable[int], names: Optional[Sequence[str]] = None,
               name: str = "") -> Tuple[FiniteAlgebra, Homomorphism]:
    """Restrict ``A`` to a closed subset; returns the algebra and its inclusion."""
    members = sorted(set(subset))
    if not is_closed(A, members):
        raise InputError("subset is not closed under the operations")
    pos = {x: i for i, x in enumerate(members)}
    tables = {op: tuple(tuple(pos[A.tables[op][x][y]] for y in members) for x in members)
              for op in A.signature.operations}
    consts = {c: pos[A.constants[c]] for c in A.signature.constants}
    labels = tuple(names) if names is not None else tuple(A.elements[x] for x in members)
    S = FiniteAlgebra(A.kind, labels, tables, consts, name=name or f"sub({A.name})")
    return S, Homomorphism(S, A, members, check=False)


@dataclass
class Closure:
    """Result of closing a generating set.

    ``trace`` maps each element to how it was first obtained:
    ``("const", name)``, ``("gen",)`` or ``(op, left, right)``.  When
    ``bound`` is set, elements longer than the bound were discarded, so the
    set is only a lower approximation of the true closure.
    """

    elements: frozenset
    order: Tuple
    trace: Dict
    bound: Optional[int] = None
    complete: bool = True

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def derivation(self, x) -> List[Tuple]:
        """Trace steps needed to obtain ``x``, leaves first."""
        out, seen = [], set()

        def visit(y):
            if y in seen:
                return
            seen.add(y)
            step = self.trace[y]
            if len(step) == 3:
                visit(step[1])
                visit(step[2])
            out.append((y, step))

        visit(x)
        return out


def generated_subalgebra(A: Algebra, generators: Iterable, length_bound: Optional[int] = None,
                         stop_at=None) -> Closure:
    """Least subset containing ``generators`` and the constants, closed under the operations.

    Every new element is combined (on both sides) with everything found so
    far, so each pair is considered exactly once.  ``stop_at`` ends the search
    as soon as that element appears.
    """
    if isinstance(A, FiniteAlgebra):
        ops = [(op, (lambda t: (lambda x, y: t[x][y]))(A.tables[op])) for op in A.signature.operations]
        consts = [(c, A.constants[c]) for c in A.signature.constants]
        fits = None
    else:
        if length_bound is None:
            raise InputError("closure in an infinite monoid needs a length bound")
        ops = [("mul", A.multiply)]
        consts = [("unit", A.unit)]
        bound, length = length_bound, A.length
        fits = lambda x: length(x) <= bound

    trace: Dict = {}
    order: List = []

    def add(x, how) -> bool:
        if x in trace or (fits is not None and not fits(x)):
            return False
        trace[x] = how
        order.append(x)
        return x == stop_at

    hit = False
    for c, v in consts:
        hit = add(v, ("const", c)) or hit
    for g in generators:
        hit = add(g, ("gen",)) or hit
    i = 0
    while not hit and i < len(order):
        x = order[i]
        for j in range(i + 1):
            y = order[j]
            for op, fn in ops:
                if add(fn(x, y), (op, x, y)) or add(fn(y, x), (op, y, x)):
                    hit = True
                    break
            if hit:
                break
        i += 1
    complete = not hit
    return Closure(frozenset(order), tuple(order), trace,
                   bound=None if fits is None else length_bound, complete=complete)


# ---------------------------------------------------------------- cospans

class Cospan(NamedTuple):
    left: Homomorphism
    right: Homomorphism


@dataclass
class JointEpiResult:
    holds: bool
    closure: Closure
    witness: Optional[frozenset] = None
    bound: Optional[int] = None

    def __bool__(self):
        return self.holds


def jointly_strongly_epimorphic(cospan: Cospan, bound: Optional[int] = None) -> JointEpiResult:
    """Whether the two legs' images generate the common codomain.

    In a variety both legs factor through the subalgebra their images
    generate, so the pair is jointly strongly epimorphic exactly when that
    subalgebra is everything.  On failure the witness is that subalgebra.
    """
    r, s = cospan
    if r.target is not s.target and r.target != s.target:
        raise HomError("cospan legs need a common codomain")
    A = r.target
    gens = []
    for leg in (r, s):
        if leg.is_finite:
            gens.extend(leg(x) for x in range(leg.source.size))
        else:
            if bound is None:
                raise InputError("a lazy leg needs a length bound")
            gens.extend(leg(w) for w in leg.source.enumerate(bound))
    if isinstance(A, FiniteAlgebra):
        cl = generated_subalgebra(A, sorted(set(gens)))
        holds = len(cl) == A.size
        return JointEpiResult(holds, cl, None if holds else cl.elements)
    if bound is None:
        raise InputError("a lazy codomain needs a length bound")
    cl = generated_subalgebra(A, gens, bound)
    holds = all(w in cl for w in A.enumerate(bound))
    return JointEpiResult(holds, cl, None if holds else cl.elements, bound=bound)


# ---------------------------------------------------------------- pullbacks

class Pullback(NamedTuple):
    algebra: FiniteAlgebra
    left: Homomorphism
    right: Homomorphism
    pairs: Tuple[Tuple[int, int], ...]

    def pair(self, u: Homomorphism, v: Homomorphism) -> Homomorphism:
        """The induced map ``<u, v>`` into the pullback."""
        pos = {p: i for i, p in enumerate(self.pairs)}
        out = []
        for x in range(u.source.size):
            key = (u(x), v(x))
            if key not in pos:
                raise HomError("the maps do not form a cone over the cospan")
            out.append(pos[key])
        return Homomorphism(u.source, self.algebra, out, check=False)


def pullback(f: Homomorphism, g: Homomorphism) -> Pullback:
    """``{(a, c) : f(a) = g(c)}`` as a subalgebra of ``A x C``, pairs in lex order."""
    A, C = f.source, g.source
    if f.target != g.target:
        raise HomError("pullback needs a common codomain")
    _check_same_kind(A, C)
    pairs = tuple((a, c) for a in range(A.size) for c in range(C.size) if f(a) == g(c))
    pos = {p: i for i, p in enumerate(pairs)}
    tables = {}
    for op in A.signature.operations:
        ta, tc = A.tables[op], C.tables[op]
        tables[op] = tuple(tuple(pos[(ta[a][a2], tc[c][c2])] for a2, c2 in pairs) for a, c in pairs)
    consts = {k: pos[(A.constants[k], C.constants[k])] for k in A.signature.constants}
    names = tuple(_pair_name(A, C, a, c) for a, c in pairs)
    P = FiniteAlgebra(A.kind, names, tables, consts, name=f"{A.name}x_{f.target.name}{C.name}")
    return Pullback(P,
                    Homomorphism(P, A, [a for a, _ in pairs], check=False),
                    Homomorphism(P, C, [c for _, c in pairs], check=False),
                    pairs)


# ---------------------------------------------------------------- relations

class ReflexiveRelation:
    """A subalgebra of ``Y x Y`` containing the diagonal."""

    __slots__ = ("base", "pairs")

    def __init__(self, base: FiniteAlgebra, pairs: Iterable[Tuple[int, int]], check: bool = True):
        self.base = base
        self.pairs = frozenset(pairs)
        if check:
            n = base.size
            if any((x, x) not in self.pairs for x in range(n)):
                raise InputError("relation is not reflexive")
            if not relation_is_subalgebra(self):
                raise InputError("relation is not a subalgebra of the square")

    @property
    def matrix(self) -> np.ndarray:
        n = self.base.size
        m = np.zeros((n, n), dtype=bool)
        for a, b in self.pairs:
            m[a, b] = True
        return m

    def __contains__(self, pair):
        return pair in self.pairs

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        return (isinstance(other, ReflexiveRelation) and self.base == other.base
                and self.pairs == other.pairs)

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        el = self.base.elements
        body = ", ".join(f"({el[a]},{el[b]})" for a, b in sorted(self.pairs))
        return f"ReflexiveRelation({{{body}}})"


def relation_is_subalgebra(R: ReflexiveRelation) -> bool:
    Y = R.base
    if any((Y.constants[c], Y.constants[c]) not in R.pairs for c in Y.signature.constants):
        return False
    for op in Y.signature.operations:
        t = Y.tables[op]
        for a, b in R.pairs:
            for c, d in R.pairs:
                if (t[a][c], t[b][d]) not in R.pairs:
                    return False
    return True


def kernel_pair(f: Homomorphism) -> ReflexiveRelation:
    n = f.source.size
    return ReflexiveRelation(f.source, [(a, b) for a in range(n) for b in range(n) if f(a) == f(b)],
                             check=False)


MAX_RELATION_BASE = 5


def reflexive_relations(Y: FiniteAlgebra, max_count: Optional[int] = None) -> List[ReflexiveRelation]:
    """Every subalgebra of ``Y x Y`` containing the diagonal.

    Each one is reached from the closure of the diagonal by repeatedly adding
    a single pair and closing.  Output is ordered by size, then by the sorted
    pair list.
    """
    n = Y.size
    if n > MAX_RELATION_BASE:
        raise InputError(f"relation enumeration is limited to |Y| <= {MAX_RELATION_BASE}")
    sq = product(Y, Y)
    P = sq.algebra
    to_pair = [(i // n, i % n) for i in range(P.size)]
    diag = [i * n + i for i in range(n)]
    start = frozenset(generated_subalgebra(P, diag).elements)
    seen = {start}
    frontier = [start]
    memo: Dict[frozenset, frozenset] = {}
    while frontier:
        nxt = []
        for R in frontier:
            for p in range(P.size):
                if p in R:
                    continue
                key = R | {p}
                closed = memo.get(key)
                if closed is None:
                    closed = frozenset(generated_subalgebra(P, sorted(key)).elements)
                    memo[key] = closed
                if closed not in seen:
                    seen.add(closed)
                    nxt.append(closed)
        frontier = nxt
        if max_count is not None and len(seen) >= max_count:
            break
    rels = sorted(seen, key=lambda s: (len(s), sorted(s)))
    if max_count is not None:
        rels = rels[:max_count]
    return [ReflexiveRelation(Y, [to_pair[i] for i in s], check=False) for s in rels]


def _check_base(R: ReflexiveRelation, S: ReflexiveRelation) -> None:
    if R.base != S.base:
        raise InputError("relations live on different algebras")


def relation_compose(R: ReflexiveRelation, S: ReflexiveRelation) -> frozenset:
    """``RS``: first ``S``, then ``R``.

    ``(a, c)`` is in ``RS`` iff some ``b`` has ``(a, b)`` in ``S`` and
    ``(b, c)`` in ``R``.  The result is returned as a pair set because it
    need not be a subalgebra in general.
    """
    _check_base(R, S)
    m = (S.matrix.astype(np.int64) @ R.matrix.astype(np.int64)) > 0
    return frozenset(zip(*map(lambda a: a.tolist(), np.nonzero(m))))


def is_transitive(R: ReflexiveRelation) -> bool:
    return relation_compose(R, R) <= R.pairs


def is_symmetric(R: ReflexiveRelation) -> bool:
    return all((b, a) in R.pairs for a, b in R.pairs)


def relations_commute(R: ReflexiveRelation, S: ReflexiveRelation) -> bool:
    return relation_compose(R, S) == relation_compose(S, R)


# ---------------------------------------------------------------- free products

class Coproduct(NamedTuple):
    monoid: FreeProduct
    injections: Tuple[Homomorphism, ...]
    words: Tuple


def coproduct_monoid(components: Sequence, length_bound: int) -> Coproduct:
    """Free product of monoids with its injections and its words up to ``length_bound``.

    ``NATURALS`` may appear as a component; its injection is not returned
    (it has no finite source) and is ``None`` in the tuple.
    """
    for c in components:
        if c is not NATURALS and (not isinstance(c, FiniteAlgebra)
                                  or c.kind not in ("monoid", "commutative-monoid")):
            raise InputError("coproducts are built from monoids only")
    M = FreeProduct(components)
    injections = []
    for tag, c in enumerate(components):
        if c is NATURALS:
            injections.append(None)
        else:
            injections.append(Homomorphism(c, M, [M.letter(tag, i) for i in range(c.size)]))
    return Coproduct(M, tuple(injections), tuple(M.enumerate(length_bound)))
