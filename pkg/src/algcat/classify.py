"""Object-level property checks: unital, subtractive, strongly unital, Mal'tsev, protomodular.

Each check returns a :class:`PropertyRecord` whose status is one of
``holds``, ``fails`` or ``unknown-at-bound``.  Exact verdicts rest on a known
characterisation (recorded in ``theorem``); bounded verdicts come from
searching pullbacks, points and spans over a finite pool of test algebras.
A bounded ``fails`` is a genuine counterexample; a bounded search that finds
nothing only says ``unknown-at-bound``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import FiniteAlgebra, InputError, same_theory
from .catalog import default_pool
from .constructions import (Closure, Cospan, generated_subalgebra, jointly_strongly_epimorphic,
                            product, pullback)
from .homs import (HomError, Homomorphism, compose, enumerate_homs, identity, is_surjective, kernel,
                   sections, zero_map)
from .points import (FALSIFIED, Point, double_split_epi_from_points, enumerate_points,
                     is_regular_pushout, is_stably_strong, is_strong_point)
from .words import NATURALS, FreeProduct, LazyMonoid, PairMonoid

Object = Union[FiniteAlgebra, LazyMonoid]

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown-at-bound"
EXACT = "exact-theorem"
BOUNDED = "bounded-search"

PROPERTIES = ("unital", "subtractive", "strongly-unital", "maltsev", "protomodular")
MODES = ("exact", "bounded", "both")
MAX_POINT_DOMAIN = 16


@dataclass
class PropertyRecord:
    property: str
    status: str
    method: str
    witness: Optional[str] = None
    bound: Optional[str] = None
    theorem: str = ""
    cross_check: Optional["PropertyRecord"] = None


@dataclass
class ClassificationReport:
    object: str
    kind: str
    records: Dict[str, PropertyRecord] = field(default_factory=dict)

    def status(self, prop: str) -> str:
        return self.records[prop].status


def _name(Y: Object) -> str:
    return getattr(Y, "name", "") or repr(Y)


def _pool_label(pool: Sequence[FiniteAlgebra]) -> str:
    return "pool{" + ",".join(a.name or "?" for a in pool) + "}"


# ---------------------------------------------------------------- element-level tests

@dataclass
class ElementTest:
    """Outcome of an element-wise characterisation.

    ``holds`` is ``None`` when a lazy search was inconclusive.
    """
    holds: Optional[bool]
    witness: object = None
    reason: str = ""
    exact: bool = True
    witnesses: Dict = field(default_factory=dict)


def _lazy_elements(M: LazyMonoid, bound: Optional[int], elements) -> list:
    if elements is not None:
        return list(elements)
    if bound is None:
        raise InputError(f"{_name(M)} is infinite: pass a length bound")
    return M.enumerate(bound)


def is_group_monoid(M: Object, bound: Optional[int] = None, elements=None) -> ElementTest:
    """Every element has a two-sided inverse.

    For a lazy monoid inverses are searched among the words within
    ``bound``; a missing inverse is reported as exact only when the monoid's
    normal form rules it out at every length.
    """
    if isinstance(M, FiniteAlgebra):
        t, u, n = M.tables["mul"], M.constants["unit"], M.size
        for x in range(n):
            if not any(t[x][y] == u and t[y][x] == u for y in range(n)):
                return ElementTest(False, x, "no inverse")
        return ElementTest(True)
    words = _lazy_elements(M, bound, elements)
    unit = M.unit
    for w in words:
        if any(M.multiply(w, v) == unit and M.multiply(v, w) == unit for v in words):
            continue
        has_left = any(M.multiply(v, w) == unit for v in words)
        if not has_left and M.left_invertible(w) is False:
            return ElementTest(False, w, "no left inverse")
        if M.right_invertible(w) is False:
            return ElementTest(False, w, "no right inverse")
        return ElementTest(False, w, "no inverse within bound", exact=False)
    return ElementTest(None, reason="every word within the bound is invertible", exact=False)


def is_gregarious_monoid(M: Object, bound: Optional[int] = None, elements=None) -> ElementTest:
    """For each ``y`` find ``u, v`` with ``u y v = 1`` (first pair in element order)."""
    if isinstance(M, FiniteAlgebra):
        t, one, n = M.tables["mul"], M.constants["unit"], M.size
        found = {}
        for y in range(n):
            hit = next(((u, v) for u in range(n) for v in range(n) if t[t[u][y]][v] == one), None)
            if hit is None:
                return ElementTest(False, y, "no u, v with u y v = 1", witnesses=found)
            found[y] = hit
        return ElementTest(True, witnesses=found)
    words = _lazy_elements(M, bound, elements)
    unit = M.unit
    right_inv: Dict = {}

    def right_inverse(w):
        if w not in right_inv:
            if M.right_invertible(w) is False:
                right_inv[w] = None
            else:
                right_inv[w] = next((v for v in words if M.multiply(w, v) == unit), None)
        return right_inv[w]

    found = {}
    for y in words:
        hit = None
        for u in words:
            v = right_inverse(M.multiply(u, y))
            if v is not None:
                hit = (u, v)
                break
        if hit is None:
            return ElementTest(None, y, "no witness within bound", exact=False, witnesses=found)
        found[y] = hit
    closed_form = all(M.gregarious_witness(y) is not None
                      and M.multiply(M.multiply(M.gregarious_witness(y)[0], y),
                                     M.gregarious_witness(y)[1]) == unit
                      for y in words)
    if closed_form:
        return ElementTest(True, reason="closed-form witnesses verified", witnesses=found)
    return ElementTest(None, reason="witnesses found within bound", exact=False, witnesses=found)


def is_ring_semiring(S: FiniteAlgebra) -> ElementTest:
    """Every element has an additive inverse."""
    if S.kind != "semiring":
        raise InputError("is_ring_semiring needs a semiring")
    a, z, n = S.tables["add"], S.constants["zero"], S.size
    for x in range(n):
        if not any(a[x][y] == z for y in range(n)):
            return ElementTest(False, x, "no additive inverse")
    return ElementTest(True)


def has_subtraction_duals(Y: FiniteAlgebra) -> ElementTest:
    """Every ``y`` is ``s(0, y*)`` for some ``y*``: sufficient for unitality."""
    s, z, n = Y.tables["sub"], Y.constants["zero"], Y.size
    for y in range(n):
        if not any(s[z][w] == y for w in range(n)):
            return ElementTest(False, y, "no y* with s(0, y*) = y")
    return ElementTest(True)


# ---------------------------------------------------------------- formatting helpers

def _fmt(Y: Object, x) -> str:
    if isinstance(Y, FiniteAlgebra):
        return Y.elements[x]
    return Y.format(x)


def _fmt_set(A: FiniteAlgebra, xs) -> str:
    return "{" + ",".join(A.elements[x] for x in sorted(xs)) + "}"


def _from_test(prop: str, Y: Object, test: ElementTest, theorem: str,
               bound: Optional[int] = None) -> PropertyRecord:
    if test.holds is True:
        status = HOLDS
    elif test.holds is False and test.exact:
        status = FAILS
    else:
        status = UNKNOWN
    witness = None
    if test.witness is not None:
        witness = f"{_fmt(Y, test.witness)}: {test.reason}"
    return PropertyRecord(prop, status, EXACT, witness,
                          None if isinstance(Y, FiniteAlgebra) else f"length<={bound}", theorem)


# ---------------------------------------------------------------- exact rules

def _exact_group(prop, Y, bound, theorem):
    return _from_test(prop, Y, is_group_monoid(Y, bound), theorem, bound)


def _exact(prop: str, Y: Object, bound: Optional[int]) -> Optional[PropertyRecord]:
    kind = Y.kind
    if prop == "unital":
        if kind in ("monoid", "commutative-monoid", "semiring"):
            return PropertyRecord(prop, HOLDS, EXACT, theorem="Jonsson-Tarski: U(Mon)=Mon, U(SRng)=SRng")
        test = has_subtraction_duals(Y)
        if test.holds:
            return PropertyRecord(prop, HOLDS, EXACT, theorem="subtraction y*: s(0,y*)=y for all y")
        return None
    if prop == "subtractive":
        if kind == "monoid":
            return _from_test(prop, Y, is_gregarious_monoid(Y, bound), "S(Mon)=GMon", bound)
        if kind == "commutative-monoid":
            return _exact_group(prop, Y, bound, "S(CMon)=Ab")
        if kind == "semiring":
            return _from_test(prop, Y, is_ring_semiring(Y), "S(SRng)=Rng")
        return PropertyRecord(prop, HOLDS, EXACT, theorem="Sub is a subtractive variety: S(Sub)=Sub")
    if prop == "strongly-unital":
        if kind == "monoid":
            return _from_test(prop, Y, is_gregarious_monoid(Y, bound), "SU(Mon)=GMon", bound)
        if kind == "commutative-monoid":
            return _exact_group(prop, Y, bound, "SU(CMon)=Ab")
        if kind == "semiring":
            return _from_test(prop, Y, is_ring_semiring(Y), "SU(SRng)=Rng")
        if has_subtraction_duals(Y).holds:
            return PropertyRecord(prop, HOLDS, EXACT,
                                  theorem="SU=U+S with S(Sub)=Sub and the y* criterion")
        return None
    if prop in ("maltsev", "protomodular"):
        tag = "M" if prop == "maltsev" else "P"
        if kind in ("monoid", "commutative-monoid"):
            return _exact_group(prop, Y, bound, f"{tag}(Mon)=Gp")
        if kind == "semiring":
            return _from_test(prop, Y, is_ring_semiring(Y), f"{tag}(SRng)=Rng")
        return None
    raise InputError(f"unknown property {prop!r}")


# ---------------------------------------------------------------- bounded searches

def point_domains(Y: FiniteAlgebra, pool: Sequence[FiniteAlgebra]) -> List[FiniteAlgebra]:
    """Pool algebras plus the products ``Y x X`` small enough to search."""
    out = list(pool)
    for X in pool:
        if Y.size * X.size <= MAX_POINT_DOMAIN:
            out.append(product(Y, X).algebra)
    return out


def _unknown(prop: str, pool) -> PropertyRecord:
    return PropertyRecord(prop, UNKNOWN, BOUNDED, bound=_pool_label(pool))


def _bounded_unital(Y: FiniteAlgebra, pool) -> PropertyRecord:
    for X in pool:
        try:
            zero = zero_map(X, Y)
        except HomError:
            # semirings are not pointed: the constant map exists only into a trivial Y
            continue
        pr = product(X, Y)
        p = Point(pr.left, pr.pair(identity(X), zero))
        v = is_strong_point(p)
        if not v:
            return PropertyRecord("unital", FAILS, BOUNDED,
                                  f"(pi,<1,0>) on {pr.algebra.name} not strong; proper subalgebra "
                                  f"{_fmt_set(pr.algebra, v.witness)}", _pool_label(pool))
    return _unknown("unital", pool)


def _bounded_strongly_unital(Y: FiniteAlgebra, pool) -> PropertyRecord:
    for X in pool:
        pr = product(X, Y)
        for f in enumerate_homs(X, Y):
            p = Point(pr.left, pr.pair(identity(X), f))
            v = is_strong_point(p)
            if not v:
                return PropertyRecord("strongly-unital", FAILS, BOUNDED,
                                      f"(pi,<1,f>) on {pr.algebra.name} with f={f!r} not strong; "
                                      f"proper subalgebra {_fmt_set(pr.algebra, v.witness)}",
                                      _pool_label(pool))
    return _unknown("strongly-unital", pool)


def split_right_punctual_spans(Y: FiniteAlgebra, pool: Sequence[FiniteAlgebra]):
    """Yield ``(f, s, g, t)`` with ``f s = 1_X``, ``g t = 1_Y`` and ``f t = 0``.

    ``Z`` and ``X`` range over ``pool``; order is ``Z``, then ``(g, t)``,
    then ``X``, then ``(f, s)``.
    """
    for Z in pool:
        if not same_theory(Z.kind, Y.kind):
            continue
        for g in enumerate_homs(Z, Y):
            if not is_surjective(g):
                continue
            for t in sections(g):
                for X in pool:
                    if not same_theory(X.kind, Y.kind):
                        continue
                    zero = X.zero
                    for f in enumerate_homs(Z, X):
                        if not is_surjective(f) or any(f(t(y)) != zero for y in range(Y.size)):
                            continue
                        for s in sections(f):
                            yield f, s, g, t


def _bounded_subtractive(Y: FiniteAlgebra, pool) -> PropertyRecord:
    for f, s, g, t in split_right_punctual_spans(Y, pool):
        covered = {f(k) for k in kernel(g)}
        if len(covered) != f.target.size:
            return PropertyRecord("subtractive", FAILS, BOUNDED,
                                  f"span through {f.source.name}: f(ker g) misses "
                                  f"{_fmt_set(f.target, set(range(f.target.size)) - covered)}",
                                  _pool_label(pool))
    return _unknown("subtractive", pool)


def _maltsev_pair(p: Point, q: Point):
    """Joint generation of ``<1_A, t f>`` and ``<s g, 1_C>`` in ``A x_Y C``.

    The double split epimorphism whose domain is the generated subalgebra is
    checked for being a regular pushout; the two answers must agree.
    """
    pb = pullback(p.f, q.f)
    A, C = p.domain, q.domain
    to_a = pb.pair(identity(A), compose(q.s, p.f))
    to_c = pb.pair(compose(p.s, q.f), identity(C))
    res = jointly_strongly_epimorphic(Cospan(to_a, to_c))
    d = double_split_epi_from_points(p, q, domain=res.closure.elements, pb=pb)
    if is_regular_pushout(d.square()) != res.holds:
        raise AssertionError("joint generation and regular-pushout forms disagree")
    return res, pb


def _bounded_maltsev(Y: FiniteAlgebra, pool) -> PropertyRecord:
    pts = enumerate_points(Y, point_domains(Y, pool))
    for i, p in enumerate(pts):
        for q in pts[i:]:
            res, pb = _maltsev_pair(p, q)
            if not res:
                return PropertyRecord("maltsev", FAILS, BOUNDED,
                                      f"pullback {pb.algebra.name}: sections generate only "
                                      f"{_fmt_set(pb.algebra, res.witness)}", _pool_label(pool))
    return _unknown("maltsev", pool)


def _bounded_protomodular(Y: FiniteAlgebra, pool) -> PropertyRecord:
    for p in enumerate_points(Y, point_domains(Y, pool)):
        v = is_stably_strong(p, pool)
        if v.status == FALSIFIED:
            P = v.pulled_back.point.domain
            return PropertyRecord("protomodular", FAILS, BOUNDED,
                                  f"point on {p.domain.name} not stably strong: pullback along "
                                  f"{v.g!r} generates only {_fmt_set(P, v.witness)}",
                                  _pool_label(pool))
    return _unknown("protomodular", pool)


_BOUNDED = {
    "unital": _bounded_unital,
    "subtractive": _bounded_subtractive,
    "strongly-unital": _bounded_strongly_unital,
    "maltsev": _bounded_maltsev,
    "protomodular": _bounded_protomodular,
}


def _bounded(prop: str, Y: Object, pool) -> PropertyRecord:
    if not isinstance(Y, FiniteAlgebra):
        return PropertyRecord(prop, UNKNOWN, BOUNDED, "no bounded search over an infinite object",
                              "n/a")
    return _BOUNDED[prop](Y, pool)


# ---------------------------------------------------------------- public checks

_IMPLIED_FAILURE = {
    # property -> property whose failure forces this one to fail
    "maltsev": ("strongly-unital", "Mal'tsev objects are strongly unital"),
    "protomodular": ("maltsev", "protomodular objects are Mal'tsev"),
}


def check_property(prop: str, Y: Object, mode: str = "exact",
                   pool: Optional[Sequence[FiniteAlgebra]] = None,
                   bound: Optional[int] = None) -> PropertyRecord:
    """Run one property check.

    ``exact`` uses a characterisation when one exists and falls back to the
    bounded search otherwise; ``bounded`` always searches; ``both`` reports the
    exact verdict with the bounded one attached as ``cross_check``.
    """
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}")
    if prop not in PROPERTIES:
        raise InputError(f"unknown property {prop!r}")
    if not isinstance(Y, FiniteAlgebra) and bound is None:
        raise InputError(f"{_name(Y)} is infinite: pass a length bound")
    if pool is None:
        pool = default_pool(Y.kind) if isinstance(Y, FiniteAlgebra) else []
    pool = [X for X in pool if same_theory(X.kind, Y.kind)]
    if mode == "bounded":
        return _bounded(prop, Y, pool)
    rec = _exact(prop, Y, bound)
    if rec is None and prop in _IMPLIED_FAILURE:
        weaker, why = _IMPLIED_FAILURE[prop]
        below = check_property(weaker, Y, "exact", pool, bound)
        if below.status == FAILS:
            rec = PropertyRecord(prop, FAILS, EXACT, f"{weaker} fails ({below.witness})",
                                 below.bound, why)
    if rec is None:
        rec = _bounded(prop, Y, pool)
    if mode == "both":
        rec.cross_check = _bounded(prop, Y, pool)
    return rec


def check_unital_object(Y, mode="exact", pool=None, bound=None) -> PropertyRecord:
    return check_property("unital", Y, mode, pool, bound)


def check_subtractive_object(Y, mode="exact", pool=None, bound=None) -> PropertyRecord:
    return check_property("subtractive", Y, mode, pool, bound)


def check_strongly_unital_object(Y, mode="exact", pool=None, bound=None) -> PropertyRecord:
    return check_property("strongly-unital", Y, mode, pool, bound)


def check_maltsev_object(Y, mode="exact", pool=None, bound=None) -> PropertyRecord:
    return check_property("maltsev", Y, mode, pool, bound)


def check_protomodular_object(Y, mode="exact", pool=None, bound=None) -> PropertyRecord:
    return check_property("protomodular", Y, mode, pool, bound)


def classify(Y: Object, mode: str = "exact", pool=None, bound: Optional[int] = None) -> ClassificationReport:
    report = ClassificationReport(_name(Y), Y.kind)
    for prop in PROPERTIES:
        report.records[prop] = check_property(prop, Y, mode, pool, bound)
    return report


def classify_table(algebras: Sequence[Object], mode: str = "exact", pool=None,
                   bound: Optional[int] = None) -> List[ClassificationReport]:
    """Classify each object; reports come back in input order."""
    return [classify(Y, mode, pool, bound) for Y in algebras]


def chain_violations(report: ClassificationReport) -> List[str]:
    """Breaks of protomodular => Mal'tsev => strongly unital <=> unital and subtractive.

    ``unknown-at-bound`` never counts as a break.
    """
    s = {p: r.status for p, r in report.records.items()}
    out = []
    if s["protomodular"] == HOLDS and s["maltsev"] == FAILS:
        out.append("protomodular but not Mal'tsev")
    if s["maltsev"] == HOLDS and s["strongly-unital"] == FAILS:
        out.append("Mal'tsev but not strongly unital")
    if s["strongly-unital"] == HOLDS and FAILS in (s["unital"], s["subtractive"]):
        out.append("strongly unital but not unital and subtractive")
    if s["unital"] == HOLDS and s["subtractive"] == HOLDS and s["strongly-unital"] == FAILS:
        out.append("unital and subtractive but not strongly unital")
    for p, r in report.records.items():
        cc = r.cross_check
        if cc is not None and cc.status == FAILS and r.status == HOLDS:
            out.append(f"{p}: bounded search fails but exact rule holds")
    return out


# ---------------------------------------------------------------- free-product constructions

GENERATED = "generated"
ABSENT = "absent-at-bound"


@dataclass
class ProbeResult:
    status: str
    target: Tuple
    closure: Closure
    monoid: PairMonoid
    bound: int

    def derivation(self) -> List[Tuple]:
        if self.status != GENERATED:
            return []
        return self.closure.derivation(self.target)


def _power(M: FiniteAlgebra, x: int, e: int) -> int:
    t, out = M.tables["mul"], M.constants["unit"]
    for _ in range(e):
        out = t[out][x]
    return out


def _evaluator(M: FiniteAlgebra, naturals_to: Optional[int] = None):
    """Fold a word of ``M + M`` (or ``M + N`` with ``1 -> naturals_to``) into ``M``."""
    t, unit = M.tables["mul"], M.constants["unit"]

    def fold(w):
        out = unit
        for tag, el in w:
            if tag == 1 and naturals_to is not None:
                el = _power(M, naturals_to, el)
            out = t[out][el]
        return out

    return fold


def maltsev_freeproduct_probe(M: FiniteAlgebra, m: int, length_bound: int) -> ProbeResult:
    """Look for ``(1, m)`` in the subalgebra generated by the two sections.

    ``P`` is the pullback of ``<1_M, m>: M + N -> M`` and ``<1_M, 1_M>:
    M + M -> M``.  Its sections are ``i1(w) = (w, [fold w])`` and
    ``i2(v) = ([fold v], v)``.  Their images on words within the bound are
    closed under multiplication, discarding pairs longer than the bound.
    Absence is bound-relative: it is never promoted to a proof.
    """
    if M.kind not in ("monoid", "commutative-monoid"):
        raise InputError("the free-product probe needs a monoid")
    if m == M.constants["unit"]:
        raise InputError("the probe needs a non-unit element")
    MN = FreeProduct([M, NATURALS], name=f"{M.name}+N")
    MM = FreeProduct([M, M], name=f"{M.name}+{M.name}")
    P = PairMonoid(MN, MM)
    fold_mn = _evaluator(M, naturals_to=m)
    fold_mm = _evaluator(M)
    gens = [(w, MM.letter(0, fold_mn(w))) for w in MN.enumerate(length_bound)]
    gens += [(MN.letter(0, fold_mm(v)), v) for v in MM.enumerate(length_bound)]
    target = (MN.letter(1, 1), MM.letter(1, m))
    cl = generated_subalgebra(P, gens, length_bound, stop_at=target)
    status = GENERATED if target in cl else ABSENT
    return ProbeResult(status, target, cl, P, length_bound)


def in_probe_pullback(M: FiniteAlgebra, m: int, pair) -> bool:
    """Whether a pair of words lies in ``P`` (equal folds into ``M``)."""
    return _evaluator(M, naturals_to=m)(pair[0]) == _evaluator(M)(pair[1])


@dataclass
class SumPointResult:
    status: str
    missing: List
    closure: Closure
    monoid: FreeProduct
    kernel: List


def check_pm_via_sum(Y: FiniteAlgebra, f: Homomorphism, length_bound: int,
                     check_length: Optional[int] = None) -> SumPointResult:
    """Strength of ``(<f, 1_Y>: X + Y -> Y, iota_Y)`` within a length bound.

    The kernel words and the image of ``iota_Y`` (both within
    ``length_bound``) are closed under multiplication; the point counts as
    generated when every word of length ``<= check_length`` (default half the
    bound) is reached.
    """
    if Y.kind not in ("monoid", "commutative-monoid"):
        raise InputError("check_pm_via_sum needs monoids")
    if f.target != Y:
        raise InputError("f must land in Y")
    X = f.source
    S = FreeProduct([X, Y], name=f"{X.name}+{Y.name}")
    t, unit = Y.tables["mul"], Y.constants["unit"]

    def fold(w):
        out = unit
        for tag, el in w:
            out = t[out][f(el) if tag == 0 else el]
        return out

    words = S.enumerate(length_bound)
    ker = [w for w in words if fold(w) == unit]
    gens = ker + [S.letter(1, y) for y in range(Y.size)]
    cl = generated_subalgebra(S, gens, length_bound)
    if check_length is None:
        check_length = length_bound // 2
    missing = [w for w in words if S.length(w) <= check_length and w not in cl]
    return SumPointResult(GENERATED if not missing else ABSENT, missing, cl, S, ker)
