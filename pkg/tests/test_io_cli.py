import pytest

from algcat.algebra import InputError
from algcat.catalog import builtin, cyclic_group, finite_catalog, subtraction_T
from algcat.classify import PROPERTIES, classify_table
from algcat.cli import main
from algcat.constructions import diagonal, product
from algcat.homs import identity
from algcat.io import (load_algebra, parse_algebra_file, parse_mapping, render_algebra,
                       render_mapping, render_report)

T_TEXT = """\
# the two-element subtraction algebra
kind: subtraction-algebra
name: T
elements: 0 a
zero: 0
table sub:
0 0
a 0
"""


def test_parse_T_equals_builtin():
    assert parse_algebra_file(T_TEXT) == subtraction_T()


@pytest.mark.parametrize("alg", finite_catalog(), ids=lambda a: a.name)
def test_round_trip(alg):
    back = parse_algebra_file(render_algebra(alg))
    assert back == alg and back.elements == alg.elements and back.name == alg.name


@pytest.mark.parametrize("text,line", [
    (T_TEXT.replace("a 0\n", "a 0 0\n"), 8),
    (T_TEXT.replace("elements: 0 a", "elements: 0 0"), 4),
    (T_TEXT.replace("kind: subtraction-algebra", "kind: loop"), 2),
    (T_TEXT.replace("a 0\n", "a b\n"), 8),
])
def test_parse_errors_report_lines(text, line):
    with pytest.raises(InputError, match=f"line {line}"):
        parse_algebra_file(text)


def test_missing_table_and_constant():
    with pytest.raises(InputError, match="missing table"):
        parse_algebra_file(T_TEXT.split("table")[0])
    with pytest.raises(InputError, match="zero"):
        parse_algebra_file(T_TEXT.replace("zero: 0\n", ""))


def test_short_table():
    with pytest.raises(InputError, match="rows"):
        parse_algebra_file(T_TEXT.replace("a 0\n", ""))


def test_axiom_failure_reported():
    broken = T_TEXT.replace("a 0\n", "0 0\n")
    with pytest.raises(InputError, match="right-zero"):
        parse_algebra_file(broken)
    assert parse_algebra_file(broken, validate=False).size == 2


def test_builtin_refs():
    assert load_algebra("builtin:cyclic_group:3") == cyclic_group(3)
    assert load_algebra("builtin:bicyclic").name == "bicyclic"
    with pytest.raises(InputError):
        load_algebra("builtin:cyclic_group:x")


def test_mapping_round_trip():
    C3 = cyclic_group(3)
    f = identity(C3)
    assert parse_mapping(render_mapping(f), C3, C3) == f
    with pytest.raises(InputError):
        parse_mapping("e -> e\n", C3, C3)
    with pytest.raises(InputError):
        parse_mapping("e -> e\ng -> g2\ng2 -> g\ng -> e\n", C3, C3)


def test_report_formats():
    reps = classify_table([cyclic_group(3), builtin("idempotent_monoid_2")])
    text = render_report(reps, "text")
    assert text.splitlines()[0].split() == ["object", "kind", *PROPERTIES]
    assert text.splitlines()[2].split()[2:] == ["yes", "no", "no", "no", "no"]
    machine = render_report(reps, "machine").splitlines()
    assert len(machine) == 2 * 5
    assert all(len(line.split("\t")) == 5 for line in machine)
    assert render_report([], "text").splitlines() == ["object  kind  " + "  ".join(PROPERTIES)]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_classify_ring(capsys):
    code, out, _ = run(capsys, "classify", "builtin:zmod_ring:2")
    assert code == 0


def test_cli_check_boolean(capsys):
    code, out, _ = run(capsys, "check", "protomodular", "builtin:boolean_semiring")
    assert code == 1 and "fails" in out


def test_cli_probe_m2(capsys):
    code, out, _ = run(capsys, "probe-coproduct", "builtin:idempotent_monoid_2", "--element", "a",
                       "--length", "5")
    assert code == 2 and out.startswith("absent-at-bound")


def test_cli_probe_c2(capsys):
    code, out, _ = run(capsys, "probe-coproduct", "builtin:cyclic_group:2", "--element", "g",
                       "--length", "4")
    assert code == 0 and "(^1, ^g) = " in out


def test_cli_usage_errors(capsys):
    code, _, err = run(capsys, "classify", "--bogus", "builtin:trivial_monoid")
    assert code == 3 and "usage" in err
    code, _, _ = run(capsys, "nosuch")
    assert code == 3
    code, _, err = run(capsys, "classify", "builtin:bicyclic")
    assert code == 3 and "bound" in err
    code, _, _ = run(capsys, "classify", "/no/such/file.alg")
    assert code == 3


def test_cli_machine_classify(capsys):
    code, out, _ = run(capsys, "classify", "builtin:cyclic_group:3", "builtin:bicyclic",
                       "--bound", "8", "--format", "machine")
    lines = out.splitlines()
    assert len(lines) == 10 and code == 1
    assert lines[-1] == "bicyclic\tprotomodular\tfails\texact-theorem\tx: no left inverse"


def test_cli_unknown_exit(capsys):
    code, out, _ = run(capsys, "check", "maltsev", "builtin:subtraction_3", "--mode", "bounded",
                       "--pool", "builtin:subtraction_3")
    assert code in (1, 2)


def test_cli_files(tmp_path, capsys):
    T = subtraction_T()
    (tmp_path / "T.alg").write_text(render_algebra(T))
    (tmp_path / "X.alg").write_text(render_algebra(builtin("subtraction_X")))
    pr = product(T, T)
    TT = pr.algebra
    (tmp_path / "TT.alg").write_text(render_algebra(TT))
    (tmp_path / "f.map").write_text(render_mapping(pr.left))
    (tmp_path / "s.map").write_text(render_mapping(diagonal(T, pr)))
    pool = tmp_path / "pool"
    pool.mkdir()
    (pool / "X.alg").write_text(render_algebra(builtin("subtraction_X")))
    code, out, _ = run(capsys, "validate", str(tmp_path / "T.alg"))
    assert code == 0
    args = ["point-check", "--f", str(tmp_path / "f.map"), "--s", str(tmp_path / "s.map"),
            str(tmp_path / "TT.alg"), str(tmp_path / "T.alg")]
    code, out, _ = run(capsys, *args)
    assert code == 0 and "(a,0) = sub((a,a), (0,a))" in out
    code, out, _ = run(capsys, *args, "--pool", str(pool))
    assert code == 1 and "falsified" in out
    code, out, _ = run(capsys, "pullback", "--f", str(tmp_path / "f.map"), "--g", str(tmp_path / "f.map"),
                       str(tmp_path / "TT.alg"), str(tmp_path / "TT.alg"), str(tmp_path / "T.alg"))
    assert code == 0 and out.startswith("8 elements")
    code, out, _ = run(capsys, "homs", str(tmp_path / "T.alg"), str(tmp_path / "X.alg"))
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "relations", "builtin:cyclic_group:3")
    assert "all transitive: yes" in out and "all pairs commute: yes" in out
    code, out, _ = run(capsys, "point-check", "--f", str(tmp_path / "f.map"), "--s", str(tmp_path / "f.map"),
                       str(tmp_path / "TT.alg"), str(tmp_path / "T.alg"))
    assert code == 3
