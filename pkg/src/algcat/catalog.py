"""Builtin example algebras."""
from __future__ import annotations

from typing import Callable, Dict, List, Optional, Union

from .algebra import SIGNATURES, FiniteAlgebra, InputError, from_function, from_tables, signature
from .words import NATURALS, Bicyclic, FreeProduct, LazyMonoid


def cyclic_group(n: int) -> FiniteAlgebra:
    _check_n(n)
    names = ["e"] + [("g" if k == 1 else f"g{k}") for k in range(1, n)]
    return from_function("monoid", range(n), {"mul": lambda a, b: (a + b) % n},
                         {"unit": 0}, names=names, name=f"C{n}")


def idempotent_monoid_2() -> FiniteAlgebra:
    return from_tables("monoid", ["1", "a"], {"mul": [["1", "a"], ["a", "a"]]},
                       {"unit": "1"}, name="M2")


def trivial_monoid() -> FiniteAlgebra:
    return from_tables("monoid", ["e"], {"mul": [["e"]]}, {"unit": "e"}, name="trivial")


def boolean_semiring() -> FiniteAlgebra:
    return from_function("semiring", range(2),
                         {"add": lambda a, b: a | b, "mul": lambda a, b: a & b},
                         {"zero": 0, "one": 1}, name="B")


def zmod_ring(n: int) -> FiniteAlgebra:
    _check_n(n)
    return from_function("semiring", range(n),
                         {"add": lambda a, b: (a + b) % n, "mul": lambda a, b: (a * b) % n},
                         {"zero": 0, "one": 1 % n}, name=f"Z{n}")


def natural_semiring_truncated(n: int) -> FiniteAlgebra:
    """``{0..n}`` with addition and multiplication saturating at ``n``.

    A quotient of the naturals, handy for spot checks only.
    """
    _check_n(n)
    return from_function("semiring", range(n + 1),
                         {"add": lambda a, b: min(a + b, n), "mul": lambda a, b: min(a * b, n)},
                         {"zero": 0, "one": 1}, name=f"N<={n}")


def subtraction_T() -> FiniteAlgebra:
    return from_tables("subtraction-algebra", ["0", "a"],
                       {"sub": [["0", "0"],
                                ["a", "0"]]},
                       {"zero": "0"}, name="T")


def subtraction_X() -> FiniteAlgebra:
    return from_tables("subtraction-algebra", ["0", "u", "v"],
                       {"sub": [["0", "0", "0"],
                                ["u", "0", "0"],
                                ["v", "0", "0"]]},
                       {"zero": "0"}, name="X")


def subtraction_3() -> FiniteAlgebra:
    return from_tables("subtraction-algebra", ["0", "1", "2"],
                       {"sub": [["0", "1", "2"],
                                ["1", "0", "0"],
                                ["2", "0", "0"]]},
                       {"zero": "0"}, name="S3")


def trivial_algebra(kind: str) -> FiniteAlgebra:
    sig = signature(kind)
    return FiniteAlgebra(kind, ("0",), {op: ((0,),) for op in sig.operations},
                         {c: 0 for c in sig.constants}, name=f"trivial-{kind}")


def bicyclic() -> Bicyclic:
    return Bicyclic()


def free_product(*components: FiniteAlgebra) -> FreeProduct:
    return FreeProduct(components)


def free_product_with_naturals(component: FiniteAlgebra) -> FreeProduct:
    return FreeProduct([component, NATURALS], name=f"{component.name} + N")


_FIXED: Dict[str, Callable[[], Union[FiniteAlgebra, LazyMonoid]]] = {
    "idempotent_monoid_2": idempotent_monoid_2,
    "trivial_monoid": trivial_monoid,
    "boolean_semiring": boolean_semiring,
    "subtraction_T": subtraction_T,
    "subtraction_X": subtraction_X,
    "subtraction_3": subtraction_3,
    "bicyclic": bicyclic,
}
_PARAMETRIC: Dict[str, Callable[[int], FiniteAlgebra]] = {
    "cyclic_group": cyclic_group,
    "zmod_ring": zmod_ring,
    "natural_semiring_truncated": natural_semiring_truncated,
}

NAMES = tuple(sorted(list(_FIXED) + list(_PARAMETRIC)))


def builtin(name: str, *params: int) -> Union[FiniteAlgebra, LazyMonoid]:
    """Look up a catalog algebra, e.g. ``builtin("cyclic_group", 3)``."""
    if name in _FIXED:
        if params:
            raise InputError(f"{name} takes no parameter")
        return _FIXED[name]()
    if name in _PARAMETRIC:
        if len(params) != 1:
            raise InputError(f"{name} needs exactly one integer parameter")
        return _PARAMETRIC[name](int(params[0]))
    raise InputError(f"unknown builtin algebra {name!r}")


def _check_n(n: int) -> None:
    if n < 1:
        raise InputError(f"parameter must be >= 1, got {n}")


def finite_catalog(max_size: Optional[int] = None) -> List[FiniteAlgebra]:
    """Every finite catalog algebra, parametric families sampled at small n."""
    algs: List[FiniteAlgebra] = [
        trivial_monoid(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
        idempotent_monoid_2(),
        zmod_ring(1), boolean_semiring(), zmod_ring(2), zmod_ring(3), zmod_ring(4),
        natural_semiring_truncated(1), natural_semiring_truncated(2), natural_semiring_truncated(3),
        trivial_algebra("subtraction-algebra"), subtraction_T(), subtraction_X(), subtraction_3(),
    ]
    if max_size is not None:
        algs = [a for a in algs if a.size <= max_size]
    return algs


def default_pool(kind: str, max_size: int = 4) -> List[FiniteAlgebra]:
    """Catalog algebras usable as test domains for objects of ``kind``."""
    ops = SIGNATURES[kind].operations
    pool = []
    for alg in finite_catalog(max_size):
        if SIGNATURES[alg.kind].operations != ops:
            continue
        if kind == "commutative-monoid":
            t = alg.tables["mul"]
            if any(t[i][j] != t[j][i] for i in range(alg.size) for j in range(alg.size)):
                continue
        pool.append(alg if alg.kind == kind else alg.with_kind(kind))
    return pool
