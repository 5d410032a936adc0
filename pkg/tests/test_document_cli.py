import json

import pytest

from softgt import StructuralError
from softgt.cli import main
from softgt.document import ParseError, fixture_names, load_fixture, loads
from softgt.sgt_space import SGTS

SMALL = """\
[universe]
a, b
[parameters]
p, q
[carrier]
C: p=X; q={b}
[basis]
B1: p={a}
B2: p={b}; q={b}
[covers]
both: B1, B2
"""


@pytest.mark.parametrize("name", fixture_names())
def test_fixtures_round_trip(name):
    doc = load_fixture(name)
    again = loads(doc.serialize())
    assert again == doc
    assert again.build() == doc.build()


def test_fixture_inventory():
    assert set(fixture_names()) >= {"three_point", "ones_basis_n4", "pairs_m3", "discrete_subspace_n4"}


def test_example_fixture_matches_builtin(three_point):
    g, sets = three_point
    doc = load_fixture("three_point")
    built = doc.build()
    assert isinstance(built, SGTS) and built == g
    named = doc.named_sets()
    for k, v in sets.items():
        assert named[k] == v


def test_parse_small_document():
    doc = loads(SMALL)
    g = doc.build()
    assert g.strong
    assert [str(m) for m in doc.cover("both")] == ["{(p,{a})}", "{(p,{b}),(q,{b})}"]


def test_unresolved_cover_reference_reports_line():
    text = SMALL.replace("both: B1, B2", "both: B1, B9")
    with pytest.raises(ParseError) as info:
        loads(text, source="doc.sgt")
    assert (info.value.line, info.value.column) == (11, 11)
    assert "B9" in str(info.value)
    assert str(info.value).startswith("doc.sgt:11:11")


def test_unknown_point_reports_column():
    text = SMALL.replace("B1: p={a}", "B1: p={z}")
    with pytest.raises(ParseError) as info:
        loads(text)
    assert info.value.line == 8 and info.value.column is not None


def test_member_outside_carrier_is_rejected():
    with pytest.raises((ParseError, StructuralError)):
        loads(SMALL.replace("B2: p={b}; q={b}", "B2: p={b}; q={a}"))


def test_opens_must_be_union_closed():
    text = SMALL.replace("[basis]", "[opens]")
    with pytest.raises((ParseError, StructuralError)):
        loads(text).build()


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_regular_text(capsys):
    code, out, _ = run(capsys, "regular", "--fixture", "three_point")
    assert code == 0
    assert "open but not regular open" in out
    assert "regular: PASS" in out


def test_cli_machine_is_deterministic(capsys):
    a = run(capsys, "compactness", "--fixture", "three_point", "--format", "machine")
    b = run(capsys, "compactness", "--fixture", "three_point", "--format", "machine")
    assert a == b and a[0] == 0
    payload = json.loads(a[1])
    assert payload["n_mu_compact"] and payload["finite_trivial"]


def test_cli_lawsuite_machine_is_byte_identical(capsys):
    args = ("lawsuite", "--seed", "7", "--instances", "20", "--law", "operator_axioms", "--format", "machine")
    first, second = run(capsys, *args), run(capsys, *args)
    assert first == second and first[0] == 0


def test_cli_witness(capsys):
    code, out, _ = run(capsys, "witness", "family_example_ones", "--n-max", "6", "--format", "machine")
    assert code == 0
    assert json.loads(out)["plain_minimal_subcover"] == [1, 2, 3, 4, 5]


def test_cli_document_file(tmp_path, capsys):
    path = tmp_path / "small.sgt"
    path.write_text(SMALL)
    code, out, _ = run(capsys, "project", str(path), "--param", "p")
    assert code == 0 and "mu_p" in out


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.sgt"
    bad.write_text(SMALL.replace("B1, B2", "B1, B9"))
    assert run(capsys, "regular", str(bad))[0] == 2
    assert run(capsys, "regular", str(tmp_path / "missing.sgt"))[0] == 2
    assert run(capsys, "nonsense", "--fixture", "three_point")[0] == 2
    assert run(capsys, "subspace", "--fixture", "three_point", "--subset", "nope")[0] == 2
    # this law has known counterexamples on general spaces
    code, out, _ = run(capsys, "lawsuite", "--instances", "60", "--law", "a_universal_correspondence")
    assert code == 1 and "FAIL" in out


def test_empty_opens_section():
    doc = loads("[universe]\na\n[parameters]\nr\n[carrier]\nr=X\n[opens]\n")
    g = doc.build()
    assert g.opens == (g.carrier.with_bits(0),) and not g.strong


def test_cli_project_second_parameter(capsys):
    code, out, _ = run(capsys, "project", "--fixture", "three_point", "--param", "r2", "--format", "machine")
    (proj,) = json.loads(out)["projections"]
    assert code == 0
    assert proj["parameter"] == "r2" and proj["mu_space"] is False
    assert proj["opens"] == ["{}", "{c}", "{b,c}"]


def test_cli_witness_positional_index(capsys):
    code, out, _ = run(capsys, "witness", "family_example_ones", "10", "--format", "machine")
    payload = json.loads(out)
    assert code == 0
    assert payload["plain_minimal_subcover"] == list(range(1, 10))
    assert payload["near_minimal_subcover"] == [1] * 9
