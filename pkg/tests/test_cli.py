import json

import pytest

from sloops.catalog import corpus_entry
from sloops.cli import main
from sloops.core import parse_table, write_table


@pytest.fixture
def tbl(tmp_path):
    def make(name):
        path = tmp_path / f"{name}.tbl"
        write_table(corpus_entry(name).table, path)
        return str(path)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys, tbl):
    assert run(capsys, "check", tbl("z4"), "--property", "mouf1") == (0, "pass\n", "")
    code, out, _ = run(capsys, "check", tbl("chein12"), "--property", "assoc")
    assert code == 1 and out.startswith("counterexample: x=")
    code, out, _ = run(capsys, "check", tbl("chein12"), "--property", "assoc", "--json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["result"] == "counterexample"


def test_universal(capsys, tbl):
    assert run(capsys, "universal", tbl("lbol8"), "--property", "lbol")[:2] == \
        (0, "universal (64 isotopes)\n")
    code, out, _ = run(capsys, "universal", tbl("lip6"), "--property", "lip")
    assert code == 1 and out.startswith("not universal: isotope f=")
    code, out, _ = run(capsys, "universal", tbl("z4"), "--class", "s_loop", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["witness"] == [0, 2] and doc["quantifier"] == "s"
    assert run(capsys, "universal", tbl("z4"))[0] == 2
    assert run(capsys, "universal", tbl("z5"), "--class", "sml")[0] == 2


def test_verify(capsys, tbl):
    code, out, _ = run(capsys, "verify", tbl("chein12"), "--theorem", "1.7")
    assert code == 0
    for i in range(1, 7):
        assert f"t1_7_m{i}:" in out and "failing" not in out
    code, out, _ = run(capsys, "verify", tbl("z5"), "--theorem", "1.7", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["hypothesis_status"] == "fails"
    assert run(capsys, "verify", tbl("z4"), "--theorem", "9.9")[0] == 2


def test_isotope_round_trip(capsys, tbl, tmp_path):
    out_path = tmp_path / "iso.tbl"
    assert run(capsys, "isotope", tbl("z4"), "--f", "1", "--g", "1", "-o", str(out_path))[0] == 0
    H = parse_table(out_path.read_text())
    assert H.identity == 2
    code, out, _ = run(capsys, "isotope", tbl("z4"), "--f", "1", "--g", "1")
    assert parse_table(out) == H
    assert run(capsys, "isotope", tbl("z4"), "--f", "9", "--g", "1")[0] == 2


def test_validate_and_classify(capsys, tbl, tmp_path):
    code, out, _ = run(capsys, "validate", tbl("sub3"))
    assert code == 0 and out.startswith("valid quasigroup of order 3, identity none")
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 1\n1 1\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "row" in err
    assert run(capsys, "validate", str(tmp_path / "missing.tbl"))[0] == 2
    code, out, _ = run(capsys, "classify", tbl("z4"), "--json")
    assert json.loads(out)["classes"]["s_loop"]["witness"] == [0, 2]


def test_search_and_gen(capsys):
    code, out, _ = run(capsys, "search", "--order", "6", "--require", "lip",
                       "--forbid", "lbol", "--seed", "0")
    assert code == 0 and parse_table(out) == corpus_entry("lip6").table
    code, out, _ = run(capsys, "gen", "chein", "sym3")
    assert parse_table(out) == corpus_entry("chein12").table
    code, out, _ = run(capsys, "gen", "dihedral", "4")
    assert parse_table(out) == corpus_entry("d4").table
    assert run(capsys, "gen", "cyclic")[0] == 2
    assert run(capsys, "search", "--order", "12")[0] == 2
    assert run(capsys, "bogus")[0] == 2
