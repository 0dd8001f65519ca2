import pytest

from algcat.algebra import FiniteAlgebra, InputError, from_tables, validate_axioms
from algcat.catalog import (NAMES, builtin, cyclic_group, default_pool, finite_catalog,
                            subtraction_T, subtraction_X, trivial_algebra)


def test_T_passes():
    assert validate_axioms(subtraction_T()).passed


def test_trivial_monoid_passes():
    assert validate_axioms(builtin("trivial_monoid"))


def test_broken_unit_row_reports_e_a():
    bad = from_tables("monoid", ["e", "a"], {"mul": [["e", "e"], ["a", "a"]]}, {"unit": "e"})
    rep = validate_axioms(bad)
    assert not rep.passed
    assert rep.first_failure.axiom == "left-unit"
    assert rep.first_failure.witness == ("e", "a")


def test_lexicographically_first_associativity_failure():
    # multiplication is constantly 0, so 1 cannot be its unit
    alg = from_tables("semiring", ["0", "1"],
                      {"add": [["0", "1"], ["1", "1"]], "mul": [["0", "0"], ["0", "0"]]},
                      {"zero": "0", "one": "1"})
    rep = validate_axioms(alg)
    assert rep.first_failure.axiom == "mul-left-unit"
    assert rep.first_failure.witness == ("1", "1")


@pytest.mark.parametrize("alg", finite_catalog(), ids=lambda a: a.name)
def test_catalog_validates(alg):
    assert validate_axioms(alg).passed


def test_subtraction_X_table():
    X = subtraction_X()
    s = lambda a, b: X.elements[X.op("sub", X.index(a), X.index(b))]
    assert s("u", "v") == "0" and s("u", "0") == "u" and s("v", "u") == "0" and s("0", "v") == "0"


def test_cyclic_group_1_is_trivial():
    C1 = builtin("cyclic_group", 1)
    assert C1.size == 1 and C1.tables["mul"] == ((0,),)


def test_boolean_semiring_one_plus_one():
    B = builtin("boolean_semiring")
    assert B.op("add", 1, 1) == 1


@pytest.mark.parametrize("bad", [("nope",), ("cyclic_group", 0), ("cyclic_group",), ("bicyclic", 3)])
def test_builtin_errors(bad):
    with pytest.raises(InputError):
        builtin(*bad)


def test_every_builtin_name_resolves():
    for name in NAMES:
        params = (2,) if name in ("cyclic_group", "zmod_ring", "natural_semiring_truncated") else ()
        builtin(name, *params)


def test_malformed_tables_rejected():
    with pytest.raises(InputError):
        FiniteAlgebra("monoid", ("e", "a"), {"mul": ((0, 1),)}, {"unit": 0})
    with pytest.raises(InputError):
        FiniteAlgebra("monoid", ("e", "a"), {"mul": ((0, 1), (1, 2))}, {"unit": 0})
    with pytest.raises(InputError):
        FiniteAlgebra("monoid", ("e", "e"), {"mul": ((0, 1), (1, 0))}, {"unit": 0})
    with pytest.raises(InputError):
        FiniteAlgebra("group", ("e",), {"mul": ((0,),)}, {"unit": 0})


def test_with_kind_keeps_tables():
    C2 = cyclic_group(2)
    D = C2.with_kind("commutative-monoid")
    assert D.kind == "commutative-monoid" and D.tables == C2.tables


def test_default_pool_filters_kind_and_commutativity():
    pool = default_pool("commutative-monoid")
    assert all(a.kind == "commutative-monoid" for a in pool)
    assert {a.name for a in pool} >= {"C2", "M2"}
    assert all(a.size <= 4 for a in default_pool("semiring"))
    assert {a.name for a in default_pool("subtraction-algebra")} == {"trivial-subtraction-algebra", "T", "X", "S3"}


def test_trivial_algebra_each_kind():
    for kind in ("monoid", "commutative-monoid", "semiring", "subtraction-algebra"):
        assert validate_axioms(trivial_algebra(kind))
