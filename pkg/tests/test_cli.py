import csv
import io
import json
import subprocess
import sys

import pytest

from loopclass.cli import _cell, main, parse_chain, parse_word

COMMANDS = [
    ["classify", "--type", "D4", "--nullity", "2", "--over", "r2"],
    ["classify", "--type", "A5", "--over", "k"],
    ["classify", "--type", "E8", "--nullity", "3", "--over", "k"],
    ["table", "eala2", "--types", "A3,D6,E6"],
    ["table", "eala2", "--symbolic"],
    ["cohomology", "--group", "2,2", "--sigma", "0,1;1,0", "--sigma", "1,0;0,1"],
    ["quadforms", "--dim", "3", "-n", "2"],
    ["quadforms", "--dim", "2", "-n", "1", "--count"],
    ["g2", "-n", "4"],
    ["g2", "-n", "4", "--completeness"],
    ["exceptional3", "--type", "E8", "--quotient"],
    ["azumaya", "generators", "--chain", "2,2", "-d", "8"],
    ["azumaya", "irreducible", "--chain", "2", "-d", "2"],
    ["azumaya", "presentation", "--chain", "2,4", "-d", "8"],
    ["azumaya", "real", "-d", "4"],
    ["normal-form", "brussel", "--chain", "5", "--tuple", "a;3b"],
]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def tsv_records(text):
    return list(csv.DictReader(io.StringIO(text), delimiter="\t"))


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_json_and_tsv_agree(capsys, argv):
    code, tsv, _ = run(capsys, argv)
    assert code == 0
    code, js, _ = run(capsys, ["--format", "json"] + argv)
    assert code == 0
    records = json.loads(js)
    assert [{k: _cell(v) for k, v in r.items()} for r in records] == tsv_records(tsv)


@pytest.mark.parametrize("argv", COMMANDS[:4], ids=lambda a: " ".join(a[:2]))
def test_deterministic(capsys, argv):
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second


def test_examples(capsys):
    _, out, _ = run(capsys, ["classify", "--type", "D4", "--nullity", "2", "--over", "r2"])
    assert len(tsv_records(out)) == 12
    _, out, _ = run(capsys, ["classify", "--type", "E8", "--nullity", "2", "--over", "r2"])
    assert len(tsv_records(out)) == 1
    _, out, _ = run(capsys, ["quadforms", "--dim", "2", "-n", "1", "--count"])
    assert tsv_records(out)[0]["count"] == "2"
    _, out, _ = run(capsys, ["normal-form", "brussel", "--chain", "5", "--tuple", "a;3b"])
    assert tsv_records(out)[0]["form"] == "A(2,5)"


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["classify", "--type", "Q7"],
    ["normal-form", "brussel", "--chain", "5", "--tuple", "a;3c"],
    ["normal-form", "brussel", "--chain", "5,x", "--tuple", "a;b"],
    ["normal-form", "brussel", "--chain", "5", "--tuple", "a;a"],
    ["normal-form", "brussel", "--chain", "2", "--tuple", "a2;b"],
    ["azumaya", "irreducible", "--chain", "2", "-d", "3"],
    ["quadforms", "--dim", "0", "-n", "1"],
    ["table", "eala3"],
])
def test_validation_errors(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 2
    assert out == ""


def test_verify(capsys):
    code, out, _ = run(capsys, ["verify"])
    assert code == 0
    assert all(r["status"] == "PASS" for r in tsv_records(out))


def test_word_grammar():
    assert parse_word("a", 1) == (1, 0)
    assert parse_word("3b", 1) == (0, 3)
    assert parse_word("2a1-b2", 2) == (2, 0, 0, -1)
    assert parse_word("0", 2) == (0, 0, 0, 0)
    assert parse_chain("2, 4") == (2, 4)
    for bad in ("", "x", "a b", "2a3"):
        with pytest.raises(ValueError):
            parse_word(bad, 2)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "loopclass", "azumaya", "real", "-d", "3"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["degree\tclass", "3\t0+0"]
