"""Points (split epimorphisms with a chosen section) and their strength."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import FiniteAlgebra, InputError, same_theory
from .constructions import (Closure, Cospan, Pullback, generated_subalgebra,
                            jointly_strongly_epimorphic, pullback, subalgebra)
from .homs import (HomError, Homomorphism, compose, enumerate_homs, identity, is_isomorphism,
                   is_surjective, kernel, sections)

STRONG = "strong"
NOT_STRONG = "not-strong"
CERTIFIED = "certified"
FALSIFIED = "falsified"
UNKNOWN_AT_POOL = "unknown-at-pool"


class SectionError(HomError):
    def __init__(self, element: int, message: str):
        super().__init__(message)
        self.element = element


@dataclass(frozen=True, eq=False)
class Point:
    """A split epimorphism ``f: A -> B`` with section ``s: B -> A``."""

    f: Homomorphism
    s: Homomorphism

    @property
    def domain(self) -> FiniteAlgebra:
        return self.f.source

    @property
    def base(self) -> FiniteAlgebra:
        return self.f.target


def make_point(f: Homomorphism, s: Homomorphism) -> Point:
    if s.target != f.source or s.source != f.target:
        raise HomError("f: A -> B and s: B -> A are not composable")
    if not same_theory(f.source.kind, f.target.kind):
        raise HomError("f and s must be maps of one kind")
    for b in range(f.target.size):
        if f(s(b)) != b:
            raise SectionError(b, f"f(s({f.target.elements[b]})) != {f.target.elements[b]}")
    return Point(f, s)


@dataclass
class PulledBackPoint:
    point: Point
    pullback: Pullback


def pullback_point(p: Point, g: Homomorphism) -> PulledBackPoint:
    """Pull ``p`` back along ``g: C -> B``.

    The domain is ``C x_B A`` with pairs ``(c, a)``; the new point is
    ``(pi_C, <1_C, s g>)``.
    """
    if g.target != p.base:
        raise HomError("g must land in the base of the point")
    pb = pullback(g, p.f)
    C = g.source
    section = pb.pair(identity(C), compose(p.s, g))
    return PulledBackPoint(make_point(pb.left, section), pb)


@dataclass
class StrengthVerdict:
    status: str
    closure: Closure
    witness: Optional[frozenset] = None

    @property
    def strong(self) -> bool:
        return self.status == STRONG

    def __bool__(self):
        return self.strong

    def trace_lines(self, alg: FiniteAlgebra) -> List[str]:
        el = alg.elements
        return [f"{el[x]} = {step[0]}({el[step[1]]}, {el[step[2]]})"
                for x, step in self.closure.trace.items() if len(step) == 3]


def constant_fibre(f: Homomorphism) -> List[int]:
    """Elements of the source sent into the subalgebra generated by the target's constants.

    For monoids and subtraction algebras that subalgebra is ``{0}`` and this
    is the kernel.  Semirings with a one have no zero object; their smallest
    subalgebra is the image of the naturals, and pulling back along that map
    is the case of the definition that implies all others.
    """
    B = f.target
    prime = generated_subalgebra(B, []).elements
    return [a for a in range(f.source.size) if f(a) in prime]


def is_strong_point(p: Point) -> StrengthVerdict:
    """Strong iff the kernel of ``f`` together with the image of ``s`` generates ``A``.

    For semirings the kernel is replaced by :func:`constant_fibre`.
    """
    A = p.domain
    gens = sorted(set(constant_fibre(p.f)) | set(p.s.mapping))
    cl = generated_subalgebra(A, gens)
    if len(cl) == A.size:
        return StrengthVerdict(STRONG, cl)
    return StrengthVerdict(NOT_STRONG, cl, cl.elements)


def is_strong_point_direct(p: Point, pool: Sequence[FiniteAlgebra]) -> Tuple[bool, Optional[Homomorphism]]:
    """The definition itself, restricted to maps out of ``pool``.

    For every ``g: C -> B`` the pair ``(pi_A, s)`` out of ``C x_B A`` must be
    jointly strongly epimorphic.  Returns the first failing ``g``.
    """
    for C in pool:
        if not same_theory(C.kind, p.base.kind):
            continue
        for g in enumerate_homs(C, p.base):
            pb = pullback(g, p.f)
            if not jointly_strongly_epimorphic(Cospan(pb.right, p.s)):
                return False, g
    return True, None


@dataclass
class SchreierResult:
    holds: bool
    table: Optional[Dict[int, int]] = None
    failing: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.holds


SCHREIER_KINDS = ("monoid", "commutative-monoid", "semiring")


def is_schreier_point(p: Point) -> SchreierResult:
    """Every ``a`` must be ``k * s(f(a))`` for exactly one ``k`` in the kernel.

    ``*`` is multiplication for monoids and addition for semirings.
    """
    A = p.domain
    if A.kind not in SCHREIER_KINDS:
        raise InputError(f"no Schreier condition for {A.kind}")
    op = A.tables["add" if A.kind == "semiring" else "mul"]
    ker = kernel(p.f)
    table = {}
    for a in range(A.size):
        sfa = p.s(p.f(a))
        ks = [k for k in ker if op[k][sfa] == a]
        if len(ks) != 1:
            reason = "no decomposition" if not ks else "decomposition not unique"
            return SchreierResult(False, failing=a, reason=reason)
        table[a] = ks[0]
    return SchreierResult(True, table=table)


@dataclass
class StableVerdict:
    status: str
    method: str = ""
    g: Optional[Homomorphism] = None
    witness: Optional[frozenset] = None
    pulled_back: Optional[PulledBackPoint] = None
    schreier: Optional[SchreierResult] = None

    def __bool__(self):
        return self.status == CERTIFIED


def is_stably_strong(p: Point, pool: Sequence[FiniteAlgebra] = ()) -> StableVerdict:
    """Three-valued stable strength.

    Certified when ``f`` is an isomorphism or the point is Schreier (Schreier
    points of monoids and semirings are stably strong); falsified by the
    first non-strong pullback along a map out of the pool, scanning pool
    order then hom order; otherwise unknown at this pool.
    """
    if is_isomorphism(p.f):
        return StableVerdict(CERTIFIED, "isomorphism")
    sch = None
    if p.domain.kind in SCHREIER_KINDS:
        sch = is_schreier_point(p)
        if sch:
            return StableVerdict(CERTIFIED, "schreier", schreier=sch)
    for C in pool:
        if not same_theory(C.kind, p.base.kind):
            continue
        for g in enumerate_homs(C, p.base):
            pb = pullback_point(p, g)
            v = is_strong_point(pb.point)
            if not v:
                return StableVerdict(FALSIFIED, "pool-search", g=g, witness=v.witness,
                                     pulled_back=pb, schreier=sch)
    return StableVerdict(UNKNOWN_AT_POOL, "pool-search", schreier=sch)


# ---------------------------------------------------------------- squares

@dataclass(frozen=True, eq=False)
class Square:
    """A commuting square ``bottom o left = right o top``.

    ``top: A' -> A``, ``left: A' -> B'``, ``right: A -> B``, ``bottom: B' -> B``.
    """

    top: Homomorphism
    left: Homomorphism
    right: Homomorphism
    bottom: Homomorphism


def _commutes(u: Homomorphism, v: Homomorphism) -> bool:
    return all(u(x) == v(x) for x in range(u.source.size))


def is_regular_pushout(sq: Square) -> bool:
    """Whether the comparison ``<left, top>: A' -> B' x_B A`` is surjective.

    Regular epimorphisms of varieties are the surjections.
    """
    if not _commutes(compose(sq.bottom, sq.left), compose(sq.right, sq.top)):
        raise HomError("square does not commute")
    for h in (sq.top, sq.left, sq.right, sq.bottom):
        if not is_surjective(h):
            raise HomError("regular pushouts are squares of surjections")
    pb = pullback(sq.bottom, sq.right)
    comparison = pb.pair(sq.left, sq.top)
    return is_surjective(comparison)


@dataclass(frozen=True, eq=False)
class DoubleSplitEpi:
    """A point in the category of points.

    ``D --f'--> C`` with section ``s'``, ``D --g'--> A`` with ``t'``,
    ``A --f--> B`` with ``s``, ``C --g--> B`` with ``t``.
    """

    fp: Homomorphism
    sp: Homomorphism
    gp: Homomorphism
    tp: Homomorphism
    f: Homomorphism
    s: Homomorphism
    g: Homomorphism
    t: Homomorphism

    def squares_commute(self) -> bool:
        return (_commutes(compose(self.g, self.fp), compose(self.f, self.gp))
                and _commutes(compose(self.fp, self.tp), compose(self.t, self.f))
                and _commutes(compose(self.gp, self.sp), compose(self.s, self.g))
                and _commutes(compose(self.sp, self.t), compose(self.tp, self.s)))

    def square(self) -> Square:
        return Square(top=self.fp, left=self.gp, right=self.g, bottom=self.f)


def make_double_split_epi(fp, sp, gp, tp, f, s, g, t) -> DoubleSplitEpi:
    for a, b in ((fp, sp), (gp, tp), (f, s), (g, t)):
        make_point(a, b)
    d = DoubleSplitEpi(fp, sp, gp, tp, f, s, g, t)
    if not d.squares_commute():
        raise HomError("the four squares of a double split epimorphism must commute")
    return d


def double_split_epi_from_points(p: Point, q: Point, domain=None,
                                 pb: Optional[Pullback] = None) -> DoubleSplitEpi:
    """The double split epimorphism over a common base built from two points.

    ``domain`` is a subalgebra of ``A x_B C`` given as an index set (default:
    the whole pullback) that must contain both ``<1_A, t f>`` and
    ``<s g, 1_C>``.  ``pb`` may pass in an already computed ``pullback(p.f, q.f)``.
    """
    if p.base != q.base:
        raise HomError("points must share their base")
    if pb is None:
        pb = pullback(p.f, q.f)
    A, C = p.domain, q.domain
    to_a = pb.pair(identity(A), compose(q.s, p.f))
    to_c = pb.pair(compose(p.s, q.f), identity(C))
    if domain is None:
        D, incl = pb.algebra, identity(pb.algebra)
    else:
        D, incl = subalgebra(pb.algebra, domain)
    pos = {x: i for i, x in enumerate(incl.mapping)}
    try:
        tp = Homomorphism(A, D, [pos[to_a(a)] for a in range(A.size)], check=False)
        sp = Homomorphism(C, D, [pos[to_c(c)] for c in range(C.size)], check=False)
    except KeyError:
        raise HomError("the chosen domain does not contain both sections") from None
    gp = compose(pb.left, incl)
    fp = compose(pb.right, incl)
    return make_double_split_epi(fp, sp, gp, tp, p.f, p.s, q.f, q.s)


@dataclass
class LemmaReport:
    hypothesis: StableVerdict
    conclusion: bool
    status: str

    @property
    def violated(self) -> bool:
        return self.status == "violated"


def check_double_split_epi_lemma(d: DoubleSplitEpi, pool: Sequence[FiniteAlgebra] = ()) -> LemmaReport:
    """If ``(g, t)`` is stably strong the square must be a regular pushout.

    A violation would indicate a bug in this library.
    """
    hyp = is_stably_strong(Point(d.g, d.t), pool)
    concl = is_regular_pushout(d.square())
    if hyp.status == CERTIFIED:
        status = "confirmed" if concl else "violated"
    elif hyp.status == FALSIFIED:
        status = "vacuous"
    else:
        status = "untested"
    return LemmaReport(hyp, concl, status)


@dataclass
class QuotientReport:
    source_strong: bool
    target_strong: bool
    status: str

    @property
    def violated(self) -> bool:
        return self.status == "violated"


def point_quotient_check(p: Point, alpha: Homomorphism, beta: Homomorphism, q: Point) -> QuotientReport:
    """Strength must pass from ``p`` to its quotient ``q`` along ``(alpha, beta)``."""
    if not (_commutes(compose(alpha, p.s), compose(q.s, beta))
            and _commutes(compose(beta, p.f), compose(q.f, alpha))):
        raise HomError("alpha, beta do not form a morphism of points")
    if not (is_surjective(alpha) and is_surjective(beta)):
        raise HomError("quotients need surjective alpha and beta")
    src = is_strong_point(p).strong
    tgt = is_strong_point(q).strong
    if not src:
        status = "vacuous"
    else:
        status = "confirmed" if tgt else "violated"
    return QuotientReport(src, tgt, status)


def enumerate_points(base: FiniteAlgebra, domains: Sequence[FiniteAlgebra]) -> List[Point]:
    """Every point over ``base`` with domain in ``domains``.

    Order: domain order, then split epimorphism in hom order, then section.
    """
    out = []
    for A in domains:
        if not same_theory(A.kind, base.kind):
            continue
        for f in enumerate_homs(A, base):
            if not is_surjective(f):
                continue
            for s in sections(f):
                out.append(Point(f, s))
    return out
