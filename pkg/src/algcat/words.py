"""Infinite monoids held in normal form: the bicyclic monoid and free products.

Elements are hashable normal forms, so equality of elements is equality of
representations.  Every enumeration takes an explicit length bound.
"""
from __future__ import annotations

from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .algebra import FiniteAlgebra, InputError


class LazyMonoid:
    """Interface shared by the normal-form monoids.

    Subclasses provide ``unit``, ``multiply``, ``length`` and
    ``enumerate``.  The ``left_invertible``/``right_invertible`` hooks return
    ``None`` when the answer is not known in closed form.
    """

    kind = "monoid"
    name = ""

    @property
    def unit(self):
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def length(self, x) -> int:
        raise NotImplementedError

    def enumerate(self, max_length: int) -> list:
        raise NotImplementedError

    def validate(self, x) -> None:
        """Raise InputError if ``x`` is not a normal form of this monoid."""

    def format(self, x) -> str:
        return str(x)

    def left_invertible(self, x) -> Optional[bool]:
        return None

    def right_invertible(self, x) -> Optional[bool]:
        return None

    def gregarious_witness(self, x):
        return None


class BicyclicElement(NamedTuple):
    """``y^n x^m``."""
    n: int
    m: int


class Bicyclic(LazyMonoid):
    """The monoid on ``x, y`` with ``xy = 1``; normal forms ``y^n x^m``."""

    name = "bicyclic"
    x = BicyclicElement(0, 1)
    y = BicyclicElement(1, 0)

    @property
    def unit(self):
        return BicyclicElement(0, 0)

    def multiply(self, a, b):
        k = min(a.m, b.n)
        return BicyclicElement(a.n + b.n - k, b.m + a.m - k)

    def power(self, base, e: int):
        out = self.unit
        for _ in range(e):
            out = self.multiply(out, base)
        return out

    def length(self, a) -> int:
        return a.n + a.m

    def enumerate(self, max_length: int) -> list:
        return [BicyclicElement(n, total - n)
                for total in range(max_length + 1) for n in range(total + 1)]

    def grid(self, bound: int) -> list:
        """All ``y^n x^m`` with ``n, m <= bound``."""
        return [BicyclicElement(n, m) for n in range(bound + 1) for m in range(bound + 1)]

    def validate(self, a) -> None:
        if not (isinstance(a, tuple) and len(a) == 2 and all(isinstance(v, int) and v >= 0 for v in a)):
            raise InputError(f"{a!r} is not a bicyclic normal form")

    def format(self, a) -> str:
        parts = []
        if a.n:
            parts.append("y" if a.n == 1 else f"y^{a.n}")
        if a.m:
            parts.append("x" if a.m == 1 else f"x^{a.m}")
        return "".join(parts) or "1"

    # the x-exponent of v*w is at least that of w, so w = y^n x^m with m > 0
    # never has a left inverse; dually n > 0 forbids a right inverse
    def left_invertible(self, a) -> bool:
        return a.m == 0

    def right_invertible(self, a) -> bool:
        return a.n == 0

    def gregarious_witness(self, a):
        return self.power(self.x, a.n), self.power(self.y, a.m)

    def __repr__(self):
        return "<Bicyclic>"


class _Naturals:
    """The additive monoid of natural numbers, usable as a free-product factor.

    A letter ``n`` weighs ``n`` in word length, since it is the ``n``-th power
    of the generator.
    """

    name = "N"
    identity = 0

    def mul(self, a: int, b: int) -> int:
        return a + b

    def weight(self, a: int) -> int:
        return a

    def letters(self, max_weight: int) -> range:
        return range(1, max_weight + 1)

    def has(self, a) -> bool:
        return isinstance(a, int) and a >= 0

    def label(self, a: int) -> str:
        return str(a)

    def __repr__(self):
        return "N"


NATURALS = _Naturals()


class _FiniteFactor:
    def __init__(self, alg: FiniteAlgebra):
        if alg.kind not in ("monoid", "commutative-monoid"):
            raise InputError(f"free products need monoids, got {alg.kind}")
        self.algebra = alg
        self.name = alg.name
        self.identity = alg.constants["unit"]
        self._table = alg.tables["mul"]

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def weight(self, a: int) -> int:
        return 1

    def letters(self, max_weight: int) -> list:
        if max_weight < 1:
            return []
        return [i for i in range(self.algebra.size) if i != self.identity]

    def has(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.algebra.size

    def label(self, a: int) -> str:
        return self.algebra.elements[a]


Factor = Union[FiniteAlgebra, _Naturals]


class ReducedWord(tuple):
    """A tuple of ``(tag, element)`` letters with alternating tags."""

    __slots__ = ()

    def __new__(cls, letters=()):
        return super().__new__(cls, (tuple(l) for l in letters))

    def __repr__(self):
        return f"ReducedWord({list(self)!r})"


EMPTY = ReducedWord()


class FreeProduct(LazyMonoid):
    """Free product of monoids with reduced-word normal forms.

    Factor ``i`` is addressed by tag ``i``; its letters are its non-identity
    elements (indices for finite factors, positive integers for ``NATURALS``).
    """

    def __init__(self, factors: Sequence[Factor], name: str = ""):
        self.factors = tuple(factors)
        self._impl = [f if isinstance(f, _Naturals) else _FiniteFactor(f) for f in factors]
        self.name = name or " + ".join(getattr(f, "name", "") or "M" for f in self._impl)

    @property
    def unit(self):
        return EMPTY

    def letter(self, tag: int, element) -> ReducedWord:
        """The one-letter word for ``element`` in factor ``tag`` (empty if identity)."""
        impl = self._impl[tag]
        if element == impl.identity:
            return EMPTY
        return ReducedWord([(tag, element)])

    def validate(self, w) -> None:
        prev = None
        for letter in w:
            if len(letter) != 2:
                raise InputError(f"bad letter {letter!r}")
            tag, el = letter
            if not (isinstance(tag, int) and 0 <= tag < len(self._impl)):
                raise InputError(f"letter {letter!r} names an unknown component")
            impl = self._impl[tag]
            if not impl.has(el):
                raise InputError(f"{el!r} is not an element of component {tag}")
            if el == impl.identity:
                raise InputError(f"identity letter {letter!r} in a reduced word")
            if tag == prev:
                raise InputError(f"adjacent letters from component {tag}")
            prev = tag

    def multiply(self, w1, w2) -> ReducedWord:
        out: List[Tuple[int, object]] = list(w1)
        impls = self._impl
        for tag, el in w2:
            if out and out[-1][0] == tag:
                impl = impls[tag]
                merged = impl.mul(out.pop()[1], el)
                if merged != impl.identity:
                    out.append((tag, merged))
            else:
                out.append((tag, el))
        return tuple.__new__(ReducedWord, out)

    def length(self, w) -> int:
        impls = self._impl
        return sum(impls[tag].weight(el) for tag, el in w)

    def enumerate(self, max_length: int) -> List[ReducedWord]:
        """Reduced words of length at most ``max_length``.

        Ordered by length, then lexicographically by ``(tag, element)``.
        """
        if max_length < 0:
            return []
        out = []
        k = len(self._impl)

        def extend(prefix, last_tag, budget):
            out.append(ReducedWord(prefix))
            for tag in range(k):
                if tag == last_tag:
                    continue
                impl = self._impl[tag]
                for el in impl.letters(budget):
                    w = impl.weight(el)
                    if w <= budget:
                        extend(prefix + [(tag, el)], tag, budget - w)

        extend([], None, max_length)
        out.sort(key=lambda w: (self.length(w), tuple(w)))
        return out

    def format(self, w) -> str:
        if not w:
            return "1"
        marks = "_^" if len(self._impl) == 2 else None
        parts = []
        for tag, el in w:
            label = self._impl[tag].label(el)
            if marks:
                parts.append(f"{marks[tag]}{label}")
            else:
                parts.append(f"{label}@{tag}")
        return ".".join(parts)

    def __repr__(self):
        return f"<FreeProduct {self.name}>"


class PairMonoid(LazyMonoid):
    """Direct product of two lazy monoids; length is the larger component length."""

    def __init__(self, left: LazyMonoid, right: LazyMonoid, name: str = ""):
        self.left = left
        self.right = right
        self.name = name or f"({left.name}) x ({right.name})"

    @property
    def unit(self):
        return (self.left.unit, self.right.unit)

    def multiply(self, a, b):
        return (self.left.multiply(a[0], b[0]), self.right.multiply(a[1], b[1]))

    def length(self, a) -> int:
        return max(self.left.length(a[0]), self.right.length(a[1]))

    def enumerate(self, max_length: int) -> list:
        return [(a, b) for a in self.left.enumerate(max_length)
                for b in self.right.enumerate(max_length)]

    def validate(self, a) -> None:
        self.left.validate(a[0])
        self.right.validate(a[1])

    def format(self, a) -> str:
        return f"({self.left.format(a[0])}, {self.right.format(a[1])})"


def multiply_words(m: LazyMonoid, w1, w2):
    """Product of two normal forms in ``m``; letters are validated first."""
    m.validate(w1)
    m.validate(w2)
    return m.multiply(w1, w2)


def enumerate_words(m: LazyMonoid, max_length: int) -> list:
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    return m.enumerate(max_length)
