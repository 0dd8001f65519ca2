import pytest

from algcat.algebra import InputError
from algcat.catalog import (bicyclic, boolean_semiring, cyclic_group, default_pool, finite_catalog,
                            idempotent_monoid_2, natural_semiring_truncated, subtraction_3,
                            subtraction_T, subtraction_X, trivial_algebra, trivial_monoid,
                            zmod_ring)
from algcat.classify import (ABSENT, BOUNDED, EXACT, FAILS, GENERATED, HOLDS, PROPERTIES, UNKNOWN,
                             chain_violations, check_maltsev_object, check_property, check_pm_via_sum,
                             check_protomodular_object, check_strongly_unital_object,
                             check_subtractive_object, check_unital_object, classify,
                             classify_table, has_subtraction_duals, in_probe_pullback,
                             is_gregarious_monoid, is_group_monoid, is_ring_semiring,
                             maltsev_freeproduct_probe)
from algcat.homs import Homomorphism, identity
from algcat.words import BicyclicElement

C2, C3, M2 = cyclic_group(2), cyclic_group(3), idempotent_monoid_2()
B = bicyclic()


def test_group_monoid():
    assert is_group_monoid(C3).holds
    res = is_group_monoid(M2)
    assert res.holds is False and res.witness == 1


def test_bicyclic_not_group_witness_x():
    res = is_group_monoid(B, bound=20)
    assert res.holds is False and res.exact
    assert res.witness == B.x and res.reason == "no left inverse"


def test_lazy_needs_bound():
    with pytest.raises(InputError):
        is_group_monoid(B)
    with pytest.raises(InputError):
        check_maltsev_object(B)


def test_gregarious():
    res = is_gregarious_monoid(B, elements=B.grid(10))
    assert res.holds
    for y, (u, v) in res.witnesses.items():
        assert (u, v) == (B.power(B.x, y.n), B.power(B.y, y.m))
    bad = is_gregarious_monoid(M2)
    assert bad.holds is False and bad.witness == 1
    grp = is_gregarious_monoid(C3)
    assert grp.holds
    t = C3.tables["mul"]
    for y, (u, v) in grp.witnesses.items():
        assert t[t[u][y]][v] == 0


def test_ring_semiring():
    res = is_ring_semiring(boolean_semiring())
    assert res.holds is False and res.witness == 1
    assert is_ring_semiring(zmod_ring(4)).holds
    res = is_ring_semiring(natural_semiring_truncated(3))
    assert res.holds is False and res.witness == 1


def test_unital():
    assert check_unital_object(M2).status == HOLDS
    rec = check_unital_object(subtraction_3())
    assert rec.status == HOLDS and rec.method == EXACT
    rec = check_unital_object(subtraction_T(), pool=[subtraction_X()])
    assert rec.status == FAILS and rec.method == BOUNDED
    assert "(0,0),(0,a),(u,0),(v,0)" in rec.witness


def test_subtraction_duals():
    assert has_subtraction_duals(subtraction_3()).holds
    assert not has_subtraction_duals(subtraction_T()).holds


def test_strongly_unital():
    assert check_strongly_unital_object(B, bound=10).status == HOLDS
    rec = check_strongly_unital_object(boolean_semiring())
    assert rec.status == FAILS and rec.witness.startswith("1")
    for kind in ("monoid", "commutative-monoid", "semiring", "subtraction-algebra"):
        assert check_strongly_unital_object(trivial_algebra(kind)).status == HOLDS


def test_subtractive():
    assert check_subtractive_object(C2.with_kind("commutative-monoid")).status == HOLDS
    assert check_subtractive_object(M2.with_kind("commutative-monoid")).status == FAILS
    rec = check_subtractive_object(C2, mode="bounded", pool=[a for a in default_pool("monoid") if a.size <= 3])
    assert rec.status == UNKNOWN
    assert check_subtractive_object(subtraction_T()).status == HOLDS


def test_maltsev():
    assert check_maltsev_object(C3).status == HOLDS
    assert check_maltsev_object(M2).status == FAILS
    assert check_maltsev_object(trivial_monoid()).status == HOLDS
    rec = check_maltsev_object(B, bound=20)
    assert rec.status == FAILS and rec.witness.startswith("x")


def test_maltsev_bounded_finds_subtraction_witness():
    rec = check_maltsev_object(trivial_algebra("subtraction-algebra"), mode="bounded")
    assert rec.status == FAILS


def test_protomodular():
    assert check_protomodular_object(zmod_ring(2)).status == HOLDS
    assert check_protomodular_object(boolean_semiring()).status == FAILS
    pool = [M2, C2, trivial_monoid()]
    assert check_protomodular_object(M2, pool=pool).status == FAILS
    rec = check_protomodular_object(M2, mode="bounded", pool=pool)
    assert rec.status in (FAILS, UNKNOWN) and rec.method == BOUNDED


def test_fails_records_carry_witnesses():
    for Y in finite_catalog(4):
        for rec in classify(Y).records.values():
            if rec.status == FAILS:
                assert rec.witness
            if rec.method == EXACT:
                assert rec.theorem


def test_table_patterns():
    mon = classify_table([C3, M2, B], bound=20)
    got = [[r.status(p) for p in PROPERTIES] for r in mon]
    H, F = HOLDS, FAILS
    assert got == [[H, H, H, H, H], [H, F, F, F, F], [H, H, H, F, F]]
    srng = classify_table([boolean_semiring(), zmod_ring(4)])
    assert [[r.status(p) for p in PROPERTIES] for r in srng] == [[H, F, F, F, F], [H, H, H, H, H]]
    assert classify_table([]) == []


def test_finite_monoids_gregarious_iff_group():
    for Y in finite_catalog():
        if Y.kind == "monoid":
            assert bool(is_gregarious_monoid(Y).holds) == bool(is_group_monoid(Y).holds)
    assert is_gregarious_monoid(B, bound=8).holds and is_group_monoid(B, bound=8).holds is False


@pytest.mark.parametrize("mode", ["exact", "bounded", "both"])
def test_chain_on_catalog(mode):
    for Y in finite_catalog(3):
        assert chain_violations(classify(Y, mode)) == []


def test_bounded_fails_implies_exact_fails():
    for Y in finite_catalog(3):
        r = classify(Y, "both")
        for p, rec in r.records.items():
            if rec.cross_check is not None and rec.cross_check.status == FAILS:
                assert rec.status == FAILS, (Y.name, p)


def test_bad_mode_and_property():
    with pytest.raises(InputError):
        check_property("unital", C2, mode="fast")
    with pytest.raises(InputError):
        check_property("abelian", C2)


def test_probe_c2_generated_with_checked_trace():
    res = maltsev_freeproduct_probe(C2, 1, 4)
    assert res.status == GENERATED
    P = res.monoid
    for x, how in res.derivation():
        assert in_probe_pullback(C2, 1, x)
        if how[0] == "mul":
            assert P.multiply(how[1], how[2]) == x


def test_probe_m2_absent():
    res = maltsev_freeproduct_probe(M2, 1, 5)
    assert res.status == ABSENT
    assert all(in_probe_pullback(M2, 1, x) for x in res.closure.elements)


def test_probe_preconditions():
    with pytest.raises(InputError):
        maltsev_freeproduct_probe(trivial_monoid(), 0, 3)
    with pytest.raises(InputError):
        maltsev_freeproduct_probe(zmod_ring(2), 1, 3)


def test_pm_via_sum():
    triv = Homomorphism(trivial_monoid(), C2, (0,))
    for bound in (1, 3, 5):
        assert check_pm_via_sum(C2, triv, bound).status == GENERATED
    res = check_pm_via_sum(C2, identity(C2), 4)
    assert res.status == GENERATED
    assert {res.monoid.format(w) for w in res.kernel if len(w) <= 2} == {"1", "_g.^g", "^g._g"}
    bad = check_pm_via_sum(M2, identity(M2), 6)
    assert bad.status == ABSENT
    assert bad.missing[0] == res.monoid.letter(0, 1)


def test_bicyclic_classify_records_bound():
    r = classify(B, bound=6)
    assert r.records["maltsev"].bound == "length<=6"
    assert r.records["unital"].status == HOLDS


def test_bicyclic_bounded_mode_is_unknown():
    r = classify(B, "bounded", bound=6)
    assert all(rec.status == UNKNOWN for rec in r.records.values())


def test_gregarious_witness_grid():
    g = B.grid(20)
    res = is_gregarious_monoid(B, elements=g)
    assert res.holds and len(res.witnesses) == 441
    assert res.witnesses[BicyclicElement(3, 5)] == (BicyclicElement(0, 3), BicyclicElement(5, 0))
