"""Suite harness, open-problem probes, report determinism, and the CLI."""

import json

import pytest

from kdmv.checks import (
    CheckSpec,
    counterexample_search,
    resolve_corpus,
    run_suite,
)
from kdmv.cli import main as cli_main
from kdmv.families import fig_girth
from kdmv.gen import connected_graphs_upto


def suite(corpus, ids, **kw):
    return run_suite(corpus, [CheckSpec(i, **kw) for i in ids])


def test_small_corpus_zero_failures():
    report = suite("geng:n<=5", ["ObsChain", "OrderBound", "GammaTotalUpper"])
    assert report.summary["failed"] == 0
    assert report.summary["passed"] > 0
    assert set(report.summary["coverage"]) == {"ObsChain", "OrderBound", "GammaTotalUpper"}
    assert all(report.summary["coverage"][c] > 0 for c in report.summary["coverage"])


def test_hypothesis_skips_are_not_passes():
    # FigGirth has girth 6: the girth >= 7 check must record a hypothesis
    # skip, and its companion detail documents gamma > chi_mu2 sharpness
    report = suite([fig_girth()], ["GirthGammaLower"])
    rec = report.instances[0]
    out = rec.checks["GirthGammaLower"]
    assert out["verdict"] == "skip-hypothesis"
    assert out["detail"]["gamma"] > out["detail"]["chi_mu2"]
    assert report.summary["failed"] == 0 and report.summary["skipped"] == 1


def test_report_determinism():
    a = suite("geng:n<=4", ["ObsChain", "LexicChain", "ConstructionValidity"]).to_json()
    b = suite("geng:n<=4", ["ObsChain", "LexicChain", "ConstructionValidity"]).to_json()
    assert a == b


def test_report_csv_columns():
    report = suite("cycle:5;path:4", ["FormulaAgreement"])
    csv = report.to_csv()
    header = csv.splitlines()[0]
    assert header.startswith("graph6,n,girth,diam,chi_mu2,gamma,gamma_t,theta_nd2,rho2")
    assert "check:FormulaAgreement" in header
    assert len(csv.splitlines()) == 3


def test_spec_corpus_checks():
    report = suite(
        "cycle:7;strong(path:6,complete:2);cartesian(cycle:4,cycle:4);fig1tree:2,2,1",
        ["FormulaAgreement", "ConstructionValidity"],
    )
    assert report.summary["failed"] == 0
    for rec in report.instances:
        assert rec.checks["FormulaAgreement"]["verdict"] == "pass"


def test_qn_structure_check():
    report = suite("hypercube:3;hypercube:4;cycle:5", ["QnStructure"])
    verdicts = [r.checks["QnStructure"]["verdict"] for r in report.instances]
    assert verdicts == ["pass", "pass", "skip-hypothesis"]


def test_budget_skips_recorded():
    report = suite("geng:n=6", ["ObsChain"], budget=1)
    assert report.summary["failed"] == 0
    # everything skips except instances whose bounds close without search
    # (the complete graph)
    assert report.summary["skipped"] >= report.summary["checked"] - 1 > 0


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        CheckSpec("NoSuchCheck")


def test_probe_qn():
    report = counterexample_search("OpenQnEquality", 3)
    assert report.summary["findings"] == []
    for rec in report.instances:
        detail = rec.checks["OpenQnEquality"]["detail"]
        assert detail["equal"]


def test_probe_block_theta():
    report = counterexample_search("OpenBlockTheta", 5)
    # complete graphs already separate chi_mu2 from theta, so findings exist
    assert report.summary["findings"]
    eq = [r.checks["OpenBlockTheta"]["detail"]["equal"] for r in report.instances]
    assert any(eq) and not all(eq)


def test_probe_cartesian_gamma():
    report = counterexample_search("OpenCartesianGamma", 12)
    # informational: the conjectured bound holds on every probed pair
    assert report.summary["findings"] == []


def test_resolve_corpus_sources(tmp_path):
    assert len(resolve_corpus("geng:n<=4")) == 1 + 1 + 2 + 6
    assert len(resolve_corpus("geng:n=5")) == 21
    path = tmp_path / "two.g6"
    path.write_text("A_\nD?{\n")
    out = resolve_corpus(f"file:{path}")
    assert [g.n for _, g, _ in out] == [2, 5]
    assert [gid for gid, _, _ in resolve_corpus("cycle:4;path:2")] == ["cycle:4", "path:2"]


# -- CLI ------------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_chi_example(capsys):
    code, out = run_cli(capsys, "chi", "--k", "2", "cycle:7")
    payload = json.loads(out)
    assert code == 0
    assert payload["value"] == 4 and payload["status"] == "Exact"


def test_cli_solvers(capsys):
    code, out = run_cli(capsys, "gamma", "path:9")
    assert code == 0 and json.loads(out)["value"] == 3
    code, out = run_cli(capsys, "gammat", "complete:5")
    assert json.loads(out)["value"] == 2
    code, out = run_cli(capsys, "gammak", "--k", "2", "path:9")
    assert json.loads(out)["value"] == 2
    code, out = run_cli(capsys, "rho2", "corona(path:3)")
    assert json.loads(out)["value"] == 3
    code, out = run_cli(capsys, "theta", "cycle:5")
    assert json.loads(out)["value"] == 3
    code, out = run_cli(capsys, "mu", "--k", "2", "cycle:9")
    assert json.loads(out)["value"] == 2
    code, out = run_cli(capsys, "imu2", "star:4")
    assert json.loads(out)["value"] == 2
    code, out = run_cli(capsys, "eod", "cartesian(cycle:4,cycle:4)")
    payload = json.loads(out)
    assert payload["exists"] and len(payload["set"]) == 4


def test_cli_construct(capsys):
    code, out = run_cli(
        capsys, "construct", "--scheme", "strong-path-complete", "--n", "15", "--m", "3", "--k", "3"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["verified"] is True and payload["num_classes"] == 6
    code, out = run_cli(capsys, "construct", "--scheme", "torus-eod", "--m", "4", "--n", "4")
    payload = json.loads(out)
    assert payload["num_classes"] == 4 and payload["verified"]
    code, out = run_cli(capsys, "construct", "--scheme", "block", "named:fig5block")
    payload = json.loads(out)
    assert payload["num_classes"] == 3 and payload["k"] == 4 and payload["verified"]
    code, out = run_cli(capsys, "construct", "--scheme", "tree-half", "path:7")
    assert json.loads(out)["num_classes"] == 4


def test_cli_suite_and_exit_codes(capsys):
    code, out = run_cli(
        capsys, "suite", "--corpus", "geng:n<=4", "--checks", "ObsChain,GammaTotalUpper"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"]["failed"] == 0
    # budget starvation with --exact-required exits 3
    code, _ = run_cli(
        capsys, "suite", "--corpus", "geng:n=5", "--checks", "ObsChain",
        "--budget", "1", "--exact-required",
    )
    assert code == 3


def test_cli_exact_required_on_solver(capsys):
    code, _ = run_cli(
        capsys, "chi", "--k", "2", "cartesian(cycle:6,cycle:6)", "--budget", "10", "--exact-required"
    )
    assert code == 3


def test_cli_usage_and_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli_main(["chi", "cycle:7"])  # missing --k
    assert exc.value.code == 2
    code = cli_main(["gamma", "nosuch:1"])
    assert code == 2


def test_cli_gen(capsys):
    code, out = run_cli(capsys, "gen", "cycle:5")
    assert code == 0 and out.strip() == "Dhc"
    code, out = run_cli(capsys, "gen", "geng:n=4")
    assert len(out.strip().splitlines()) == 6


def test_cli_probe(capsys):
    code, out = run_cli(capsys, "probe", "--problem", "OpenQnEquality", "--limit", "3")
    payload = json.loads(out)
    assert code == 0 and payload["suite"]["findings"] == []


def test_cli_csv_output(capsys, tmp_path):
    out_path = tmp_path / "report.csv"
    code = cli_main([
        "suite", "--corpus", "cycle:6", "--checks", "ObsChain",
        "--format", "csv", "--out", str(out_path),
    ])
    assert code == 0
    text = out_path.read_text()
    assert text.splitlines()[0].startswith("graph6,n,girth")
