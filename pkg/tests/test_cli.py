"""End-to-end tests for the command-line interface.

These drive ``bhl.cli.main`` exactly as the console script would, checking
exit codes, both output formats, schema conformance of the JSON reports,
and the skip/strict behavior around the dimension guard.
"""

import json
import pathlib

import jsonschema
import pytest

from bhl.cli import PACKAGE_DIR, main

SCHEMA = json.loads(
    (PACKAGE_DIR / "schemas" / "report.schema.json").read_text())
CORPUS = PACKAGE_DIR / "corpus"
S3_TABLE = PACKAGE_DIR / "data" / "cayley_s3.json"
SAMPLE_MODULE = PACKAGE_DIR / "data" / "sample_module_p3_mu1.json"


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, capsys):
    code, out, _ = run_cli(argv + ["--format", "json"], capsys)
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


def test_ribbon_single_mu_json(capsys):
    code, report = run_json(["verify", "ribbon", "--p", "3", "--mu", "1"],
                            capsys)
    assert code == 0
    assert report["command"] == "verify ribbon"
    assert report["params"] == {"p": 3, "mu": 1, "seed": 0}
    names = {c["name"]: c["status"] for c in report["checks"]}
    assert names["varsigma_equals_scaled_ribbon"] == "PASS"
    assert names["prefactor_scalar_route"] == "PASS"


def test_ribbon_family_includes_center(capsys):
    code, report = run_json(["verify", "ribbon", "--p", "3"], capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any("center dimension" in n for n in names)
    assert any("prefactor_depends_only_on_mu_squared" in n for n in names)


def test_hopf_axioms_both_families(capsys):
    code, report = run_json(["verify", "hopf-axioms", "--p", "3"], capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any(n.startswith("anyonic p=3:") for n in names)
    assert any(n.startswith("taft p=3:") for n in names)
    assert any("S^2(x)" in n for n in names)
    assert all(c["status"] == "PASS" for c in report["checks"])


def test_hopf_axioms_p2(capsys):
    code, report = run_json(["verify", "hopf-axioms", "--p", "2"], capsys)
    assert code == 0
    assert all(c["status"] == "PASS" for c in report["checks"])


def test_dual_algebra(capsys):
    code, report = run_json(["verify", "dual-algebra", "--p", "5"], capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any("z^i maps to" in n for n in names)
    assert all(c["status"] == "PASS" for c in report["checks"])


def test_uqsl2_iso_single_mu(capsys):
    code, report = run_json(["verify", "uqsl2-iso", "--p", "3", "--mu", "2"],
                            capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any(n.startswith("p=3 mu=2:") for n in names)
    assert not any("mu=0" in n for n in names if "coproduct" not in n)


def test_ayd_regular_module(capsys):
    code, report = run_json(["verify", "ayd", "--p", "3", "--mu", "1"],
                            capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any("x_power_vanishes" in n for n in names)
    assert any("xz_commutation" in n for n in names)


def test_ayd_p2_adds_closed_forms(capsys):
    code, report = run_json(["verify", "ayd", "--p", "2", "--mu", "0"],
                            capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any(n.startswith("sweedler mu=0:") for n in names)


def test_ayd_module_from_file(capsys):
    code, report = run_json(
        ["verify", "ayd", "--module", str(SAMPLE_MODULE)], capsys)
    assert code == 0
    assert report["params"]["module"] == str(SAMPLE_MODULE)
    assert all(c["status"] == "PASS" for c in report["checks"])


def test_ayd_malformed_module_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"unexpected": 1}))
    code, report = run_json(["verify", "ayd", "--module", str(bad)], capsys)
    assert code == 1
    first = report["checks"][0]
    assert first["status"] == "FAIL"
    assert first["witnesses"]


def test_stable_dim_all_mu(capsys):
    code, report = run_json(["stable-dim", "--p", "3"], capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any("mu=0: kernel chain stabilizes at power 1" in n
               for n in names)
    assert any("mu=1: kernel chain stabilizes at power 2" in n
               for n in names)


def test_stable_dim_single_mu(capsys):
    code, report = run_json(["stable-dim", "--p", "2", "--mu", "1"], capsys)
    assert code == 0
    assert report["params"]["mu"] == 1
    details = " ".join(c["details"] for c in report["checks"])
    assert "chain [6, 8]" in details


def test_dimension_guard_skips(monkeypatch, capsys):
    monkeypatch.setenv("BHL_DIM_GUARD", "10")
    code, report = run_json(["stable-dim", "--p", "3"], capsys)
    assert code == 0
    assert all(c["status"] == "SKIP" for c in report["checks"])
    assert all(c["details"] for c in report["checks"])


def test_dimension_guard_strict_fails(monkeypatch, capsys):
    monkeypatch.setenv("BHL_DIM_GUARD", "10")
    code, _, _ = run_cli(["stable-dim", "--p", "3", "--strict"], capsys)
    assert code == 1


def test_decompose_vecg_n3(capsys):
    code, out, _ = run_cli(["decompose", "vec-g", "--n", "3"], capsys)
    assert code == 0
    assert "1 -> 1" in out
    assert "q(3,1) -> 2" in out
    assert "PASS stable classes" in out


def test_decompose_vecg_n2_singletons(capsys):
    code, report = run_json(["decompose", "vec-g", "--n", "2"], capsys)
    assert code == 0
    braided = next(c for c in report["checks"]
                   if c["name"] == "braided classes")
    assert "singleton" in braided["details"]


def test_decompose_repg_s3(capsys):
    code, out, _ = run_cli(["decompose", "rep-g", "--cayley", str(S3_TABLE)],
                           capsys)
    assert code == 0
    assert "sizes (1, 3, 2)" in out
    assert "centralizer orders (6, 2, 3)" in out


def test_decompose_repg_rejects_non_group(tmp_path, capsys):
    bad = tmp_path / "notgroup.json"
    bad.write_text("[[0, 0], [0, 0]]")
    code, report = run_json(["decompose", "rep-g", "--cayley", str(bad)],
                            capsys)
    assert code == 1
    first = report["checks"][0]
    assert first["status"] == "FAIL"
    assert "identity" in first["witnesses"][0]["error"]


def test_dsl_check_corpus_passes(capsys):
    code, report = run_json(
        ["dsl", "check", str(CORPUS / "hopf_anyonic.bdsl"), "--n", "3"],
        capsys)
    assert code == 0
    assert all(c["status"] == "PASS" for c in report["checks"])


def test_dsl_check_negative_control_fails_with_witness(capsys):
    code, report = run_json(
        ["dsl", "check", str(CORPUS / "negative_control.bdsl"), "--n", "3"],
        capsys)
    assert code == 1
    for c in report["checks"]:
        assert c["status"] == "FAIL"
        assert c["witnesses"]


def test_dsl_check_syntax_error_reports_location(tmp_path, capsys):
    script = tmp_path / "broken.bdsl"
    script.write_text("let V = obj[deg 0: 1]\nassert id[V ==\n")
    code, report = run_json(["dsl", "check", str(script)], capsys)
    assert code == 1
    first = report["checks"][0]
    assert first["name"] == "script loads"
    assert "line" in first["witnesses"][0]["error"]


def test_suite_p3(capsys):
    code, report = run_json(["suite", "--p", "3"], capsys)
    assert code == 0
    by_name = {c["name"]: c["status"] for c in report["checks"]}
    assert len(by_name) == 11
    assert by_name["criterion 8: sweedler-case"] == "SKIP"
    passing = [n for n, s in by_name.items() if s == "PASS"]
    assert len(passing) == 10


def test_suite_p2(capsys):
    code, report = run_json(["suite", "--p", "2"], capsys)
    assert code == 0
    by_name = {c["name"]: c["status"] for c in report["checks"]}
    assert by_name["criterion 8: sweedler-case"] == "PASS"
    assert by_name["criterion 1: hopf-axioms"] == "PASS"


def test_usage_errors_exit_2(capsys):
    code, _, err = run_cli(["verify", "ribbon", "--p", "2"], capsys)
    assert code == 2
    assert "odd prime" in err

    code, _, err = run_cli(
        ["decompose", "rep-g", "--cayley", "/no/such/file.json"], capsys)
    assert code == 2
    assert "cannot read" in err

    code, _, err = run_cli(["dsl", "check", "/no/such/script.bdsl"], capsys)
    assert code == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_json_reports_are_deterministic(capsys):
    def snapshot():
        _, report = run_json(["decompose", "vec-g", "--n", "5"], capsys)
        report.pop("elapsed_ms")
        return json.dumps(report, sort_keys=True)

    assert snapshot() == snapshot()


def test_text_report_summarizes_counts(capsys):
    code, out, _ = run_cli(["verify", "dual-algebra", "--p", "3"], capsys)
    assert code == 0
    last = out.strip().splitlines()[-1]
    assert "PASS" in last and "FAIL" in last and "SKIP" in last


def test_seed_recorded_in_params(capsys):
    _, report = run_json(["suite", "--p", "3", "--seed", "7"], capsys)
    assert report["params"]["seed"] == 7
