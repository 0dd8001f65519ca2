import pytest

from algcat.catalog import (cyclic_group, finite_catalog, idempotent_monoid_2, subtraction_T,
                            subtraction_X, trivial_monoid)
from algcat.constructions import diagonal, product
from algcat.homs import HomError, Homomorphism, compose, enumerate_homs, identity, zero_map
from algcat.points import (CERTIFIED, FALSIFIED, UNKNOWN_AT_POOL, SectionError, Square,
                           check_double_split_epi_lemma, double_split_epi_from_points,
                           enumerate_points, is_regular_pushout, is_schreier_point,
                           is_stably_strong, is_strong_point, is_strong_point_direct, make_point,
                           point_quotient_check, pullback_point)

C2, C3, M2 = cyclic_group(2), cyclic_group(3), idempotent_monoid_2()
T, X = subtraction_T(), subtraction_X()


def diag_point(A):
    pr = product(A, A)
    return make_point(pr.left, diagonal(A, pr))


def id_point(A):
    return make_point(identity(A), identity(A))


def el(A, xs):
    return {A.elements[x] for x in xs}


def test_make_point_examples():
    diag_point(T)
    id_point(C3)
    pr = product(C2, C2)
    make_point(pr.left, pr.pair(identity(C2), zero_map(C2, C2)))


def test_make_point_rejects_non_section():
    pr = product(C2, C2)
    with pytest.raises(SectionError) as exc:
        make_point(pr.left, pr.pair(zero_map(C2, C2), identity(C2)))
    assert exc.value.element == 1


def test_T_diagonal_strong_with_trace():
    v = is_strong_point(diag_point(T))
    assert v.strong
    assert "(a,0) = sub((a,a), (0,a))" in v.trace_lines(product(T, T).algebra)


def test_pullback_along_constant_map_not_strong():
    p = diag_point(T)
    pb = pullback_point(p, zero_map(X, T))
    v = is_strong_point(pb.point)
    assert not v
    assert len(v.witness) == 4
    dom = pb.point.domain
    assert el(dom, v.witness) == {"(0,(0,0))", "(0,(0,a))", "(u,(0,0))", "(v,(0,0))"}


def test_pullback_along_identity_is_isomorphic():
    p = diag_point(C3)
    q = pullback_point(p, identity(C3)).point
    assert q.domain.size == p.domain.size


def test_pullback_along_unit_map_fibre():
    p = diag_point(C2)
    q = pullback_point(p, Homomorphism(trivial_monoid(), C2, (0,))).point
    assert q.domain.size == 2


def test_identity_point_strong_and_certified():
    for A in (C2, T, M2):
        assert is_strong_point(id_point(A))
        assert is_stably_strong(id_point(A)).status == CERTIFIED


def test_schreier_examples():
    res = is_schreier_point(diag_point(C2))
    assert res.holds and len(res.table) == 4
    bad = is_schreier_point(diag_point(M2))
    assert not bad.holds
    assert product(M2, M2).algebra.elements[bad.failing] == "(a,1)"
    assert is_schreier_point(id_point(C3)).table == {0: 0, 1: 0, 2: 0}
    with pytest.raises(Exception):
        is_schreier_point(diag_point(T))


def test_stably_strong_verdicts():
    assert is_stably_strong(diag_point(C2)).method == "schreier"
    v = is_stably_strong(diag_point(T), [X])
    assert v.status == FALSIFIED
    assert v.g.mapping == (0, 0, 0)
    assert len(v.witness) == 4
    assert is_stably_strong(diag_point(T), []).status == UNKNOWN_AT_POOL


def _points_over(base, domains):
    return enumerate_points(base, domains)


def test_points_over_groups_are_schreier_and_strong():
    for B in (C2, C3):
        domains = [a for a in finite_catalog(6) if a.kind == "monoid"]
        domains += [product(B, D).algebra for D in (C2, C3)]
        domains = [d for d in domains if d.size <= 6]
        pts = _points_over(B, domains)
        assert pts
        for p in pts:
            assert is_schreier_point(p).holds
            assert is_strong_point(p).strong


def test_schreier_implies_strong_everywhere():
    for B in finite_catalog(3):
        if B.kind == "subtraction-algebra":
            continue
        doms = [a for a in finite_catalog(4) if a.signature.operations == B.signature.operations]
        doms += [product(B, a).algebra for a in doms if a.size * B.size <= 9]
        for p in _points_over(B, doms):
            if is_schreier_point(p):
                assert is_strong_point(p)


def test_pullbacks_of_schreier_points_are_schreier():
    pool = [a for a in finite_catalog(4) if a.kind == "monoid"]
    for B in (C2, C3, M2):
        doms = [product(B, a).algebra for a in pool if a.size * B.size <= 12]
        for p in _points_over(B, doms):
            if not is_schreier_point(p):
                continue
            for C in pool:
                for g in enumerate_homs(C, B):
                    assert is_schreier_point(pullback_point(p, g).point)


def test_kernel_criterion_matches_definition():
    for B in finite_catalog(3):
        pool = [a for a in finite_catalog(4) if a.signature.operations == B.signature.operations]
        doms = pool + [product(B, a).algebra for a in pool if a.size * B.size <= 9]
        for p in _points_over(B, doms):
            direct, _ = is_strong_point_direct(p, pool)
            assert direct == is_strong_point(p).strong


def test_regular_pushout_identity_square():
    i = identity(C2)
    assert is_regular_pushout(Square(i, i, i, i))


def test_regular_pushout_product_built():
    p, q = diag_point(C2), diag_point(C2)
    d = double_split_epi_from_points(p, q)
    assert d.squares_commute()
    assert is_regular_pushout(d.square())


def test_regular_pushout_fails_on_small_domain():
    # A' = C2 sits diagonally inside the 4-element pullback C2 x_1 C2
    to_one = Homomorphism(C2, trivial_monoid(), (0, 0))
    i = identity(C2)
    assert not is_regular_pushout(Square(top=i, left=i, right=to_one, bottom=to_one))


def test_regular_pushout_rejects_noncommuting():
    f = identity(C2)
    z = Homomorphism(C2, C2, (0, 0))
    with pytest.raises(HomError):
        is_regular_pushout(Square(f, f, z, f))


def test_double_split_epi_lemma_reports():
    d = double_split_epi_from_points(id_point(C2), id_point(C2))
    rep = check_double_split_epi_lemma(d)
    assert rep.status == "confirmed"
    d2 = double_split_epi_from_points(diag_point(C2), diag_point(C2))
    assert check_double_split_epi_lemma(d2).status == "confirmed"
    d3 = double_split_epi_from_points(diag_point(T), diag_point(T))
    assert check_double_split_epi_lemma(d3, []).status == "untested"


def test_lemma_never_violated_on_monoid_points():
    pool = [C2, M2]
    for B in (C2, M2):
        pts = _points_over(B, [product(B, a).algebra for a in pool])
        for p in pts:
            for q in pts:
                rep = check_double_split_epi_lemma(double_split_epi_from_points(p, q), pool)
                assert not rep.violated


def test_quotient_checks():
    p = diag_point(C2)
    assert point_quotient_check(p, identity(p.domain), identity(C2), p).status == "confirmed"
    pr = product(C2, C2)
    q = id_point(C2)
    rep = point_quotient_check(p, pr.left, identity(C2), q)
    assert rep.target_strong and rep.status == "confirmed"
    m = product(X, T)
    np_ = make_point(m.left, m.pair(identity(X), zero_map(X, T)))
    assert point_quotient_check(np_, identity(np_.domain), identity(X), np_).status == "vacuous"


def test_quotients_of_strong_points_stay_strong():
    for B in (C2, M2):
        doms = [product(B, a).algebra for a in (C2, M2)]
        for p in _points_over(B, doms):
            for alpha in enumerate_homs(p.domain, B):
                if len(set(alpha.mapping)) != B.size:
                    continue
                # quotient onto the identity point of B when the squares commute
                q = id_point(B)
                if compose(alpha, p.s) == identity(B) and compose(identity(B), p.f) == alpha:
                    assert not point_quotient_check(p, alpha, identity(B), q).violated


def test_enumerate_points_order():
    pts = enumerate_points(C2, [C2, product(C2, C2).algebra])
    assert pts[0].domain is C2
    # three surjections C2 x C2 -> C2, two sections each
    assert len(pts) == 1 + 3 * 2
