"""Homomorphisms: validation, backtracking enumeration, kernels and images."""
from __future__ import annotations

from itertools import product
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .algebra import FiniteAlgebra, InputError, same_theory
from .words import LazyMonoid

Algebra = Union[FiniteAlgebra, LazyMonoid]


class HomError(InputError):
    pass


class Violation(NamedTuple):
    """Where a map fails to preserve structure.

    ``args`` is ``(constant_name,)`` for a constant, otherwise the failing
    pair of source indices.
    """
    operation: str
    args: tuple


def _kind(alg: Algebra) -> str:
    return alg.kind


def _target_op(B: Algebra, op: str):
    if isinstance(B, FiniteAlgebra):
        table = B.tables[op]
        return lambda x, y: table[x][y]
    if op != "mul":
        raise HomError(f"lazy target has no operation {op!r}")
    return B.multiply


def _target_const(B: Algebra, c: str):
    if isinstance(B, FiniteAlgebra):
        return B.constants[c]
    return B.unit


def _pointed(B: Algebra):
    if isinstance(B, FiniteAlgebra):
        return B.zero
    return B.unit


def is_homomorphism(mapping: Sequence, A: FiniteAlgebra, B: Algebra) -> Tuple[bool, Optional[Violation]]:
    """Check that ``mapping`` (indexed by elements of ``A``) preserves structure.

    Constants are checked first, then pairs in lexicographic order with the
    operations in signature order inside each pair.
    """
    if len(mapping) != A.size:
        raise HomError(f"mapping has {len(mapping)} entries, source has {A.size}")
    if not same_theory(A.kind, _kind(B)):
        raise HomError(f"cannot map {A.kind} to {_kind(B)}")
    if isinstance(B, FiniteAlgebra):
        for v in mapping:
            if not (isinstance(v, int) and 0 <= v < B.size):
                raise HomError(f"mapping entry {v!r} is not an element of the target")
    for c in A.signature.constants:
        if mapping[A.constants[c]] != _target_const(B, c):
            return False, Violation(c, (c,))
    ops = [(op, A.tables[op], _target_op(B, op)) for op in A.signature.operations]
    n = A.size
    for x in range(n):
        fx = mapping[x]
        for y in range(n):
            fy = mapping[y]
            for op, table, bop in ops:
                if mapping[table[x][y]] != bop(fx, fy):
                    return False, Violation(op, (x, y))
    return True, None


class Homomorphism:
    """A structure-preserving map.

    For a finite source the map is the tuple ``mapping``; a lazy source
    carries a function instead.  Construction validates finite sources.
    """

    __slots__ = ("source", "target", "mapping", "_func", "name")

    def __init__(self, source: Algebra, target: Algebra, mapping=None, func: Optional[Callable] = None,
                 check: bool = True, name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        if isinstance(source, FiniteAlgebra):
            if mapping is None:
                if func is None:
                    raise HomError("need a mapping or a function")
                mapping = [func(i) for i in range(source.size)]
            self.mapping = tuple(mapping)
            self._func = None
            if check:
                ok, bad = is_homomorphism(self.mapping, source, target)
                if not ok:
                    raise HomError(f"not a homomorphism: fails {bad.operation} at {bad.args}")
        else:
            if func is None:
                raise HomError("a lazy source needs a function")
            self.mapping = None
            self._func = func

    def __call__(self, x):
        if self.mapping is not None:
            return self.mapping[x]
        return self._func(x)

    @property
    def is_finite(self) -> bool:
        return self.mapping is not None

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        if self.mapping is None or other.mapping is None:
            return self is other
        return (self.mapping == other.mapping and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(self.mapping) if self.mapping is not None else id(self)

    def __repr__(self):
        if self.mapping is not None and isinstance(self.target, FiniteAlgebra):
            arrows = ", ".join(f"{self.source.elements[i]}->{self.target.elements[j]}"
                               for i, j in enumerate(self.mapping))
            return f"Homomorphism({arrows})"
        return f"<Homomorphism {getattr(self.source, 'name', '')} -> {getattr(self.target, 'name', '')}>"

    def then(self, g: "Homomorphism") -> "Homomorphism":
        """``g`` after ``self``."""
        return compose(g, self)


def identity(A: FiniteAlgebra) -> Homomorphism:
    return Homomorphism(A, A, range(A.size), check=False)


def zero_map(A: FiniteAlgebra, B: Algebra) -> Homomorphism:
    """The map sending everything to the pointed constant of ``B``."""
    z = _pointed(B)
    return Homomorphism(A, B, [z] * A.size)


def compose(g: Homomorphism, f: Homomorphism, check: bool = False) -> Homomorphism:
    """``g o f``."""
    if f.is_finite:
        return Homomorphism(f.source, g.target, [g(f(i)) for i in range(f.source.size)], check=check)
    return Homomorphism(f.source, g.target, func=lambda x: g(f(x)))


def enumerate_homs(A: FiniteAlgebra, B: FiniteAlgebra,
                   candidates: Optional[Sequence[Sequence[int]]] = None) -> List[Homomorphism]:
    """All homomorphisms ``A -> B`` in lexicographic order of their mappings.

    Images are assigned in index order.  Whenever two assigned elements have
    an assigned product the constraint is checked; an unassigned product is
    forced to its only possible image and propagated.  ``candidates[i]``
    optionally restricts the image of element ``i``.
    """
    if not isinstance(B, FiniteAlgebra):
        raise HomError("homomorphisms into lazy monoids are not enumerated")
    if not same_theory(A.kind, B.kind):
        raise HomError(f"cannot map {A.kind} to {B.kind}")
    n = A.size
    allowed = [set(range(B.size)) for _ in range(n)]
    if candidates is not None:
        if len(candidates) != n:
            raise HomError("candidates must list every source element")
        allowed = [set(c) for c in candidates]
    ops = [(A.tables[op], B.tables[op]) for op in A.signature.operations]

    def assign(m, i, v, assigned_order):
        # returns False on conflict; mutates m and appends to assigned_order
        stack = [(i, v)]
        while stack:
            i, v = stack.pop()
            cur = m[i]
            if cur is not None:
                if cur != v:
                    return False
                continue
            if v not in allowed[i]:
                return False
            m[i] = v
            assigned_order.append(i)
            for j in list(assigned_order):
                mj = m[j]
                for ta, tb in ops:
                    for x, y, fx, fy in ((i, j, v, mj), (j, i, mj, v)):
                        z = ta[x][y]
                        w = tb[fx][fy]
                        if m[z] is None:
                            stack.append((z, w))
                        elif m[z] != w:
                            return False
        return True

    results = []
    start: List[Optional[int]] = [None] * n
    order: List[int] = []
    for c in A.signature.constants:
        if not assign(start, A.constants[c], B.constants[c], order):
            return []

    def search(m, order):
        try:
            i = m.index(None)
        except ValueError:
            results.append(tuple(m))
            return
        for v in sorted(allowed[i]):
            m2 = list(m)
            o2 = list(order)
            if assign(m2, i, v, o2):
                search(m2, o2)

    search(start, order)
    results.sort()
    return [Homomorphism(A, B, r, check=False) for r in results]


def brute_force_homs(A: FiniteAlgebra, B: FiniteAlgebra) -> List[Tuple[int, ...]]:
    """Every mapping in ``B^A`` that passes ``is_homomorphism`` (for testing)."""
    return [m for m in product(range(B.size), repeat=A.size) if is_homomorphism(m, A, B)[0]]


def kernel(f: Homomorphism, bound: Optional[int] = None) -> list:
    """Source elements sent to the pointed constant of the target.

    A lazy source is scanned over its words of length at most ``bound``.
    """
    z = _pointed(f.target)
    if f.is_finite:
        return [a for a in range(f.source.size) if f(a) == z]
    if bound is None:
        raise HomError("kernel of a map out of a lazy monoid needs a length bound")
    return [w for w in f.source.enumerate(bound) if f(w) == z]


def image(f: Homomorphism) -> list:
    if not f.is_finite:
        raise HomError("image needs a finite source")
    return sorted(set(f.mapping), key=_sort_key)


def _sort_key(x):
    return (0, x) if isinstance(x, int) else (1, repr(x))


def is_surjective(f: Homomorphism) -> bool:
    if not isinstance(f.target, FiniteAlgebra):
        return False
    return len(set(f.mapping)) == f.target.size


def is_injective(f: Homomorphism) -> bool:
    if not f.is_finite:
        raise HomError("injectivity needs a finite source")
    return len(set(f.mapping)) == len(f.mapping)


def is_isomorphism(f: Homomorphism) -> bool:
    return is_injective(f) and is_surjective(f)


def sections(f: Homomorphism) -> List[Homomorphism]:
    """Every homomorphism ``s`` with ``f o s = id``, in enumeration order."""
    A, B = f.source, f.target
    fibres = [[a for a in range(A.size) if f(a) == b] for b in range(B.size)]
    return enumerate_homs(B, A, candidates=fibres)

