import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from shiftcsl.cli import (
    EXIT_MISMATCH,
    EXIT_NOT_MEMBER,
    EXIT_PARSE,
    EXIT_UNSUPPORTED,
    CLIError,
    main,
    parse_gaussian_int,
    parse_rational_shift,
    parse_shift,
)
from shiftcsl.gaussian import GaussianInt as G
from shiftcsl.shifted import AIrrBRat, ARatBIrr, BothIrrDependent, BothIrrIndependent

from conftest import Q

SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parsers():
    assert parse_rational_shift("2/5+1/5i") == Q("2/5", "1/5")
    assert parse_rational_shift("-1/2 - 1/2i") == Q("-1/2", "-1/2")
    assert parse_rational_shift("1/3") == Q("1/3")
    assert parse_gaussian_int("3-2i") == G(3, -2)
    assert parse_gaussian_int("-i") == G(0, -1)
    assert parse_shift("irr-a b=1/2") == AIrrBRat(Q("1/2").re)
    assert parse_shift("irr-b a=1/3") == ARatBIrr(Q("1/3").re)
    assert parse_shift("indep") == BothIrrIndependent()
    assert parse_shift("dep 0/1 -2/1") == BothIrrDependent(0, 1, -2, 1)
    for bad in ("1/0", "abc", "dep 1/2", "dep 2/4 1/1"):
        with pytest.raises(CLIError):
            parse_shift(bad)


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "4+7i")
    assert code == 0 and out.startswith("4+7i = ")
    code, _, err = run(capsys, "factor", "0")
    assert code == EXIT_PARSE and "error" in err
    code, _, _ = run(capsys, "factor", "x+y")
    assert code == EXIT_PARSE


def test_factor_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "factor", "65")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == "1" and doc["command"] == "factor"
    assert doc["results"]["norm"] == "4225"
    assert sorted(f["norm"] for f in doc["results"]["factors"]) == ["13", "13", "5", "5"]


def test_rotations(capsys):
    code, out, _ = run(capsys, "rotations", "--sigma", "5")
    assert code == 0 and out.startswith("8 rotations, 8 reflections of index 5")
    code, out, _ = run(capsys, "rotations", "--sigma", "5", "--shift", "1/2")
    assert code == 0 and out.startswith("4 rotations")
    code, out, _ = run(capsys, "rotations", "--sigma", "5", "--shift", "dep", "0/1", "-2/1")
    assert code == 0 and "R(1+2i, -1)T_r" in out
    code, _, _ = run(capsys, "rotations", "--sigma", "0")
    assert code == EXIT_PARSE


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--shift", "2/5+1/5i", "--limit", "65", "--nonzero")
    rows = [line.split() for line in out.splitlines()[2:]]
    assert code == 0
    assert {r[0]: r[1:] for r in rows}["65"] == ["2", "0", "8", "8"]
    code, _, err = run(capsys, "count", "--shift", "indep")
    assert code == EXIT_UNSUPPORTED and "rational" in err


def test_structure(capsys):
    code, out, _ = run(capsys, "structure", "--shift", "2/5+1/5i")
    assert code == 0 and "verdict: not a group" in out and "witness:" in out
    code, out, _ = run(capsys, "structure", "--shift", "1/3")
    assert "generator: <R(1, 1)T_r>" in out
    code, out, _ = run(capsys, "structure", "--shift", "1/7+2/7i", "--bound", "10")
    assert "bounded verdict" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--shift", "1/2", "--sigma-max", "13")
    assert code == 0 and out.rstrip().endswith("PASS")
    code, _, _ = run(capsys, "verify", "--shift", "irr-a", "b=1/2")
    assert code == EXIT_UNSUPPORTED
    assert EXIT_MISMATCH == 1


def test_render(capsys, tmp_path):
    path = tmp_path / "a.svg"
    code, out, _ = run(capsys, "render", "--shift", "1/2+1/2i", "--numerator", "2+i",
                       "-o", str(path))
    assert code == 0 and out == ""
    root = ET.parse(path).getroot()
    ids = {g.get("id") for g in root.iter(f"{SVG}g")}
    assert ids == {"lattice", "rotated", "csl", "fundamental-domain"}
    csl_group = next(g for g in root.iter(f"{SVG}g") if g.get("id") == "csl")
    assert len(csl_group.findall(f"{SVG}circle")) > 0


def test_render_errors(capsys):
    assert run(capsys, "render", "--shift", "1/2", "--numerator", "2+i", "--eps", "i")[0] == EXIT_NOT_MEMBER
    assert run(capsys, "--format", "json", "render", "--shift", "0")[0] == EXIT_PARSE
    assert run(capsys, "render", "--shift", "0", "--eps", "2")[0] == EXIT_PARSE
    assert run(capsys, "render", "--shift", "0", "--numerator", "0")[0] == EXIT_PARSE
    # negative values after an option are values, not options
    assert run(capsys, "render", "--shift", "0", "--numerator", "-2+i", "--eps", "-i")[0] == 0


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2


COMMANDS = [
    ["factor", "-3+11i"],
    ["rotations", "--sigma", "25", "--shift", "2/5+1/5i"],
    ["count", "--shift", "1/5", "--limit", "30"],
    ["structure", "--shift", "2/5+1/5i"],
    ["structure", "--shift", "dep", "0/1", "-2/1"],
    ["verify", "--shift", "1/3", "--sigma-max", "10"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
def test_json_round_trip_is_byte_identical(capsys, argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, indent=2, ensure_ascii=False) + "\n" == out
    assert set(doc) == {"schema_version", "command", "inputs", "results"}
    _, again, _ = run(capsys, "--format", "json", *argv)
    assert again == out


def test_format_after_subcommand(capsys):
    _, a, _ = run(capsys, "--format", "json", "factor", "5")
    _, b, _ = run(capsys, "factor", "5", "--format", "json")
    assert a == b


def test_svg_is_deterministic(capsys):
    argv = ["render", "--shift", "2/5+1/5i", "--numerator", "3+2i", "--eps", "i"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and a.startswith("<?xml")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shiftcsl", "factor", "5"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("5 = ")
