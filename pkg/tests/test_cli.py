"""End-to-end CLI behaviour: JSON reports, exit codes, determinism."""

import json

import pytest

from suq2.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_nf(capsys):
    code, report = run_cli(capsys, "nf", "--algebra", "suq2", "a'*a")
    assert code == 0
    assert report["schema"] == 1
    assert report["command"] == "nf"
    assert report["algebra"] == "suq2"
    assert report["result"] == "1 - g*g'"


def test_nf_unicode(capsys):
    code, report = run_cli(capsys, "nf", "--unicode", "a'*a")
    assert code == 0
    assert report["result"] == "1 - γ*γ*"


def test_deg(capsys):
    code, report = run_cli(capsys, "deg", "g")
    assert (code, report["result"]) == (0, 1)
    code, report = run_cli(capsys, "deg", "g + a")
    assert report["result"] == "inhomogeneous"
    code, report = run_cli(capsys, "deg", "g - g")
    assert report["result"] == "zero"


def test_mul_and_adjoint(capsys):
    code, report = run_cli(capsys, "mul", "a", "g")
    assert (code, report["result"]) == (0, "qb*g*a")
    code, report = run_cli(capsys, "adjoint", "a*g")
    assert (code, report["result"]) == (0, "g'*a'")


def test_tensor_algebra_normal_form(capsys):
    code, report = run_cli(capsys, "nf", "--algebra", "suq2-tensor2", "j2(g)*j1(g)")
    assert code == 0
    assert report["result"] == "q^-1*qb*j1(g)*j2(g)"


def test_parse_error_exit_code(capsys):
    code = main(["nf", "a*("])
    captured = capsys.readouterr()
    assert code == 2
    assert "column 3" in captured.err


def test_verify_single_check(capsys):
    code, report = run_cli(capsys, "verify", "unitary-u")
    assert code == 0
    assert report["check"] == "unitary-u"
    assert report["result"] == "pass"
    assert report["residuals"] == []
    assert report["paper_anchor"]


def test_verify_all(capsys):
    code, report = run_cli(capsys, "verify", "all")
    assert code == 0
    assert report["result"] == "pass"
    ids = [c["check"] for c in report["checks"]]
    assert ids == sorted(ids)
    assert len(ids) == 17


def test_verify_report_is_byte_stable(capsys):
    code1 = main(["verify", "invariance-constraints"])
    out1 = capsys.readouterr().out
    code2 = main(["verify", "invariance-constraints"])
    out2 = capsys.readouterr().out
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_confluence_command(capsys):
    code, report = run_cli(
        capsys, "confluence", "--algebra", "uq2", "--maxlen", "4",
        "--trials", "100", "--seed", "1",
    )
    assert code == 0
    assert report["result"] == "pass"
    assert report["details"]["critical_pairs"] > 0


def test_numeric_relations(capsys):
    code, report = run_cli(
        capsys, "numeric", "relations", "--q", "0.6,0.3", "--N", "12", "--M", "4"
    )
    assert code == 0
    assert report["result"] == "pass"
    assert len(report["residuals"]) == 5


def test_numeric_compare_and_spectrum(capsys):
    code, report = run_cli(
        capsys, "numeric", "compare", "--q", "0.5", "--N", "10", "--M", "4",
        "--count", "25", "--maxlen", "5", "--seed", "3",
    )
    assert code == 0 and report["result"] == "pass"
    code, report = run_cli(
        capsys, "numeric", "spectrum", "--q", "0.4,0.1", "--N", "8", "--M", "3"
    )
    assert code == 0 and report["result"] == "pass"


def test_numeric_tolerance_override_can_fail(capsys):
    code, report = run_cli(
        capsys, "numeric", "relations", "--q", "0.5", "--N", "8", "--M", "3",
        "--tol", "1e-30",
    )
    assert code == 1
    assert report["result"] == "fail"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, report = run_cli(capsys, "nf", "a*a'", "--out", str(path))
    assert code == 0
    on_disk = json.loads(path.read_text())
    assert on_disk == report


def test_bad_q_value_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["numeric", "relations", "--q", "nope"])
    assert exc.value.code == 2
