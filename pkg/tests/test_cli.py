import json

import pytest

from sdpcert.cli import EXIT_NOT_COVERED, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coverage_dihedral_full(capsys):
    code, out, _ = run_cli(
        capsys, "coverage", "--n", "5", "--r", "4", "--format", "json"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["status"] == "ok"
    assert report["results"]["coverage"]["subgroup"] == [1, 2, 3, 4]
    assert report["results"]["coverage"]["is_full"] is True


def test_coverage_with_exhaustive_oracle(capsys):
    code, out, _ = run_cli(
        capsys,
        "coverage", "--n", "5", "--r", "1", "--exhaustive", "2", "--format", "json",
    )
    assert code == EXIT_OK
    report = json.loads(out)
    oracle = report["results"]["oracle"]
    assert oracle["bound"] == 2
    assert oracle["agrees"] is True
    assert oracle["subgroup"] == report["results"]["coverage"]["subgroup"]


def test_coverage_usage_error(capsys):
    code, out, err = run_cli(capsys, "coverage", "--n", "4", "--r", "2")
    assert code == EXIT_USAGE
    assert out == ""
    assert "coprime" in err


def test_certificate_success(capsys):
    code, out, _ = run_cli(
        capsys, "certificate", "--n", "3", "--r", "2", "--l", "2", "--format", "json"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    cert = report["results"]["certificate"]
    verification = report["results"]["verification"]
    assert verification["passed"] is True
    assert cert["n"] == 3 and cert["l"] == 2
    names = [c["name"] for c in verification["checks"]]
    assert "exponent-identity" in names
    assert all(c["passed"] for c in verification["checks"])


def test_certificate_identity(capsys):
    code, out, _ = run_cli(
        capsys, "certificate", "--n", "5", "--r", "2", "--l", "1", "--format", "json"
    )
    assert code == EXIT_OK
    cert = json.loads(out)["results"]["certificate"]
    assert cert["alpha_tilde"] == [1, 0, 0, 0, 0]
    assert cert["k"] == 0 and cert["s"] == 0


def test_certificate_not_covered(capsys):
    code, out, _ = run_cli(
        capsys, "certificate", "--n", "7", "--r", "2", "--l", "3", "--format", "json"
    )
    assert code == EXIT_NOT_COVERED
    report = json.loads(out)
    assert report["status"] == "not-covered"
    assert "not covered" in report["results"]["message"]


def test_certificate_usage_error(capsys):
    code, _, err = run_cli(capsys, "certificate", "--n", "6", "--r", "5", "--l", "3")
    assert code == EXIT_USAGE
    assert "coprime" in err


def test_verify_tower_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "tower", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    names = [c["name"] for c in report["results"]["suites"]["tower"]]
    assert "tau-hat commutes with fixed monomials" in names
    assert report["results"]["passed"] is True


def test_verify_seeded_determinism(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "crossed", "--seed", "7", "--format", "json"
        )
        assert code == EXIT_OK
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_coverage_text_determinism(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "coverage", "--n", "7", "--r", "6")
        assert code == EXIT_OK
        outputs.append(out)
    assert outputs[0] == outputs[1]
    assert "is_full: true" in outputs[0]


def test_verify_all_aggregates(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "all", "--format", "json"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert set(report["results"]["suites"]) == {
        "coverage", "crossed", "group-ring", "monomial", "quotient", "tower",
    }


def test_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == EXIT_USAGE
