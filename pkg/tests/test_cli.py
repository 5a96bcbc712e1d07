import json

import pytest

from tilespace.cli import main
from tilespace.dataset import serialize_dataset


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate(capsys):
    code, out, err = run(capsys, "validate")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == {"tiles": 36, "edges": 45,
                                 "vertices": 10, "rules": 36}
    assert "dataset valid: 36 tiles, 45 edges, 10 vertices, 36 rules" in err


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate")
    assert code == 0
    payload = json.loads(out)
    assert payload["derived"] == 36
    assert payload["match"] == "exact"
    assert "derived 36 tiles, match: exact" in err


def test_forcing_collared(capsys):
    code, out, err = run(capsys, "forcing")
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert ("edge-level border forcing at k=1: PASS "
            "(180/180 sides singleton)") in err


def test_forcing_uncollared_fails(capsys):
    code, out, err = run(capsys, "forcing", "--uncollared")
    assert code == 1
    payload = json.loads(out)
    assert payload["passed"] is False
    assert payload["counterexample"]
    assert ("uncollared border forcing at k=1: FAIL "
            "(35/55 groups singleton)") in err


def test_incidence_json(capsys):
    code, out, _ = run(capsys, "incidence")
    assert code == 0
    payload = json.loads(out)
    assert payload["edgeJoinCounts"] == {"2": 25, "4": 5, "7": 10, "8": 5}


def test_incidence_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "incidence")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,id,entries"
    assert sum(1 for l in lines if l.startswith("edge,")) == 45


def test_complex_json(capsys):
    code, out, _ = run(capsys, "complex")
    assert code == 0
    payload = json.loads(out)
    assert payload["faces"] == 36 and payload["edges"] == 45
    assert len(payload["boundary2"]) == 45


def test_complex_dot(capsys):
    code, out, _ = run(capsys, "complex", "--export", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("->") == 45


def test_export_dot_with_faces(capsys):
    code, out, _ = run(capsys, "export-dot", "--faces")
    assert code == 0
    assert out.count("shape=box]") == 36


def test_cohomology_text(capsys):
    code, out, _ = run(capsys, "cohomology")
    assert code == 0
    assert "H2(complex) = Z^5 + (Z/2)^5" in out
    assert "checks: 9/9 passed" in out


def test_cohomology_json_deterministic(capsys):
    code, first, _ = run(capsys, "cohomology", "--json")
    assert code == 0
    code, second, _ = run(capsys, "cohomology", "--json")
    assert code == 0
    assert first == second
    payload = json.loads(first)
    assert payload["limits"]["H0"]["rationalDim"] == 1
    assert payload["limits"]["H2"]["rationalDim"] == 5


def test_fib(capsys):
    code, out, err = run(capsys, "fib")
    assert code == 0
    payload = json.loads(out)
    assert payload["borderForcing"]["minimalK"] == 2
    assert "border forcing k=2" in err


def test_subst1d_with_rules_file(capsys, tmp_path):
    rules = tmp_path / "tm.txt"
    rules.write_text("a -> ab\nb -> ba\n")
    code, out, _ = run(capsys, "subst1d", "--rules", str(rules))
    assert code == 0
    assert len(json.loads(out)["collaredLetters"]) == 6


def test_subst1d_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "subst1d", "--rules", str(tmp_path / "no.txt"))
    assert code == 2
    assert "cannot read rules file" in err


def test_subst1d_bad_rules_exit_one(capsys, tmp_path):
    rules = tmp_path / "bad.txt"
    rules.write_text("a = ab\n")
    code, _, err = run(capsys, "subst1d", "--rules", str(rules))
    assert code == 1
    assert "error:" in err


def test_shift_walk_schema(capsys):
    code, out, _ = run(capsys, "shift", "--depth", "4", "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"seed", "depth", "baseFace", "addresses", "walk"}
    assert payload["seed"] == 7 and payload["depth"] == 4
    lengths = [len(step) for step in payload["walk"]]
    assert lengths == [5, 4, 3, 2, 1]
    for longer, shorter in zip(payload["walk"], payload["walk"][1:]):
        assert longer[:-1] == shorter


def test_shift_global_seed_fallback(capsys):
    code, first, _ = run(capsys, "--seed", "3", "shift")
    assert code == 0
    code, second, _ = run(capsys, "--seed", "3", "shift")
    assert first == second
    code, third, _ = run(capsys, "--seed", "4", "shift")
    assert json.loads(first)["seed"] == 3
    assert json.loads(third)["seed"] == 4


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "--out", str(target), "validate")
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["counts"]["tiles"] == 36


def test_dataset_flag_and_env(capsys, tmp_path, monkeypatch, d):
    copy = tmp_path / "ds"
    serialize_dataset(d, copy)
    code, out, _ = run(capsys, "--dataset", str(copy), "validate")
    assert code == 0
    assert json.loads(out)["counts"]["tiles"] == 36

    monkeypatch.setenv("TILESPACE_DATASET", str(copy))
    code, out, _ = run(capsys, "enumerate")
    assert code == 0
    assert json.loads(out)["match"] == "exact"


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_stdout_is_machine_readable_only(capsys):
    _, out, err = run(capsys, "validate")
    json.loads(out)
    assert err.strip()
