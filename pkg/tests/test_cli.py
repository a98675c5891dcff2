from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from superquiver.cli import main, parse_simple

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--n", "2", "--m", "2")
    data = json.loads(out)
    assert code == 0 and data["count"] == 12 and data["odd"] == 8
    code, out, _ = run(capsys, "roots", "--n", "1", "--m", "1")
    assert json.loads(out)["count"] == 2


def test_roots_text_ascii(capsys):
    code, out, _ = run(capsys, "roots", "--n", "1", "--m", "1", "--format", "text", "--ascii")
    assert out.splitlines() == ["e1-d1\todd", "d1-e1\todd"]


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "e2-d2")
    assert code == 0
    assert out.splitlines()[0] == "○^{0|0} ← ⊗^{0|1} ← ○^{1|0}"
    code, out, _ = run(capsys, "construct", "--format", "json", "--ascii", "e1-e2")
    data = json.loads(out)
    assert data["render"] == "o^{1|0} <- (x)^{0|0} <- o^{0|0}" and data["parity"] == 0


def test_construct_matches_table(capsys):
    golden = (GOLDEN / "a22_table.txt").read_text().splitlines()
    for line in golden:
        root, _, rendering = line.split("\t")
        code, out, _ = run(capsys, "construct", root)
        assert code == 0 and out.splitlines()[0] == rendering


def test_construct_domain_errors(capsys):
    code, _, err = run(capsys, "construct", "d2-d1")
    assert code == 3 and "not a positive root" in err
    code, _, _ = run(capsys, "construct", "e5-d1")
    assert code == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "verify", "--n", "3", "--m", "2", "--all-orient", "--format", "text")
    assert code == 0 and len(out.splitlines()) == 8


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--inject-fault")
    assert code == 1 and not json.loads(out)["ok"]


def test_ar(capsys):
    code, out, _ = run(capsys, "ar", "--n", "2", "--m", "2")
    assert code == 0 and out == (GOLDEN / "a22_ar.dot").read_text()
    code, out, _ = run(capsys, "ar", "--n", "1", "--m", "1", "--format", "json")
    assert len(json.loads(out)["vertices"]) == 2


def test_pathalg(capsys):
    code, out, _ = run(capsys, "pathalg", "--type", "A2")
    data = json.loads(out)
    assert code == 0 and data["total"] == 4 and data["mesh_degree_zero"]
    code, out, _ = run(capsys, "pathalg", "--type", "A3", "--parity", "010", "--orient", "<>")
    assert json.loads(out)["total"] == 10


def test_reflect(capsys):
    code, out, _ = run(capsys, "reflect", "--at", "2", "--ascii")
    steps = json.loads(out)
    assert steps[1]["roots"] == ["e1-d1", "d1-e2", "e2-d2"] and steps[1]["colours"] == [1, 1, 1]


def test_simple_system_descriptions():
    assert [r.label(True) for r in parse_simple("st:1,2/1,2", 2, 2).roots] == ["e1-d1", "d1-e2", "e2-d2"]
    assert parse_simple("word:2", 2, 2) == parse_simple("st:1,2/1,2/+", 2, 2)
    with pytest.raises(ValueError):
        parse_simple("bogus", 2, 2)


@pytest.mark.parametrize("argv", [
    ["construct", "--orient", "<<<", "e1-d1"],
    ["roots", "--n", "0"],
    ["verify", "--simple", "st:2/1"],
    ["nonsense"],
    ["pathalg", "--type", "B2"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "superquiver", "ar", "--n", "2", "--m", "2", "--ascii"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"(x)" in a
