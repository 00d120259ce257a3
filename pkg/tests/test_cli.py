import json

import pytest

from qsymball.cli import main, run
from qsymball.report import SUITES, CheckEntry, Report, RunConfig


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(q=1.5)
    with pytest.raises(ValueError):
        RunConfig(tol=0.0)
    with pytest.raises(ValueError):
        RunConfig(phi_grid=2)
    with pytest.raises(ValueError):
        RunConfig(suites=("nope",))


def test_empty_suite_list_passes_with_no_checks():
    report = run(RunConfig(suites=()))
    assert report.passed
    assert report.entries == []


def test_structured_report_round_trip():
    report = run(RunConfig(suites=("confluence",)))
    payload = report.structured()
    data = json.loads(payload)
    assert data["schema"] == "qsymball-report/1"
    back = Report.from_structured(payload)
    assert back.config == report.config
    assert back.sorted_entries() == report.sorted_entries()
    assert back.passed == report.passed


def test_text_report_has_one_line_per_check():
    report = run(RunConfig(suites=("confluence",)))
    lines = report.text().splitlines()
    assert len(lines) == len(report.entries) + 1
    assert all(line.startswith(("PASS", "FAIL")) for line in lines[:-1])


def test_runs_are_deterministic():
    cfg = RunConfig(n1=24, n2=12, n3=8, phi_grid=8, suites=("hopf",))
    a = run(cfg)
    b = run(cfg)
    assert a.sorted_entries() == b.sorted_entries()


def test_failing_entry_flips_exit_and_summary():
    report = Report(RunConfig())
    report.add("demo/ok", "anchor", 0.0, 1e-8)
    report.add("demo/bad", "anchor", 1.0, 1e-8)
    assert not report.passed
    assert "FAIL" in report.text()


def test_internal_errors_become_failed_checks(monkeypatch):
    import qsymball.cli as cli

    def boom(report, cfg, rng):
        raise RuntimeError("iteration cap")

    monkeypatch.setitem(cli._RUNNERS, "confluence", boom)
    report = run(RunConfig(suites=("confluence",)))
    assert not report.passed
    assert report.entries[0].name == "confluence/error"


def test_main_exit_codes_and_formats(capsys):
    rc = main(["--suite", "confluence", "--format", "structured",
               "--n1", "16", "--n2", "8", "--n3", "4", "--phi-grid", "8"])
    out = capsys.readouterr().out
    assert rc == 0
    assert json.loads(out)["passed"] is True

    rc = main(["--q", "2.0"])
    assert rc == 2


def test_main_text_format(capsys):
    rc = main(["--suite", "confluence"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.strip().splitlines()[0].startswith("PASS")


def test_suite_names_cover_the_public_list():
    from qsymball.cli import _RUNNERS
    assert set(_RUNNERS) == set(SUITES)
