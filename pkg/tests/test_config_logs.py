import logging

import pytest

from spcob.core.errors import DomainError
from spcob.core.models import Report
from spcob.lib import cache, config, logs
from spcob.lib.display import ansi
from spcob.lib.display.format import report_lines, summary_line, table


def test_defaults_without_config_file():
    cfg = config.load()
    assert cfg.format == "json"
    assert cfg.suite.max_r == 3
    assert cfg.logs.max_lines == 500


def test_save_and_reload(spcob_home):
    cfg = config.Config(format="text", suite=config.SuiteConfig(max_r=2, workers=1))
    config.save(cfg)
    assert (spcob_home / "config.yaml").exists()
    loaded = config.load()
    assert loaded.format == "text"
    assert loaded.suite.max_r == 2
    assert loaded.suite.workers == 1


def test_unknown_keys_are_ignored(spcob_home):
    (spcob_home / "config.yaml").write_text("format: text\nsuite:\n  max_deg: 5\n  colour: blue\nextra: 1\n")
    cfg = config.load()
    assert cfg.format == "text"
    assert cfg.suite.max_deg == 5


def test_bad_format_in_config(spcob_home):
    (spcob_home / "config.yaml").write_text("format: xml\n")
    with pytest.raises(DomainError):
        config.load()


def test_output_format_precedence(spcob_home, monkeypatch):
    (spcob_home / "config.yaml").write_text("format: text\n")
    assert config.output_format() == "text"
    monkeypatch.setenv(config.FORMAT_ENV, "json")
    assert config.output_format() == "json"
    assert config.output_format("text") == "text"
    monkeypatch.setenv(config.FORMAT_ENV, "yaml")
    with pytest.raises(DomainError):
        config.output_format()


def test_info_lines_are_json(spcob_home):
    logs.info("suite", "all", checks=3, failed=0)
    entries = logs.read("suite")
    assert entries[-1]["msg"] == "all"
    assert entries[-1]["checks"] == 3
    assert (spcob_home / "logs" / "suite.log").exists()


def test_logs_are_truncated(spcob_home):
    (spcob_home / "config.yaml").write_text("logs:\n  max_lines: 3\n")
    for i in range(5):
        logs.info("cli", f"call {i}")
    assert [e["msg"] for e in logs.read("cli")] == ["call 2", "call 3", "call 4"]


def test_error_entries_carry_traceback():
    try:
        raise DomainError("boom")
    except DomainError as e:
        logs.write("errors", e, context="ring hgr")
    entry = logs.read("errors")[-1]
    assert entry["level"] == "ERROR"
    assert entry["msg"] == "ring hgr"
    assert "boom" in entry["traceback"]


def test_log_config_failure_falls_back(spcob_home, caplog):
    (spcob_home / "config.yaml").write_text("format: xml\n")
    with caplog.at_level(logging.WARNING):
        logs.info("cli", "still written")
    assert logs.read("cli")[-1]["msg"] == "still written"
    assert "Failed to read log config" in caplog.text


def test_read_missing_log():
    assert logs.read("nothing") == []


def test_failed_report_needs_witness():
    with pytest.raises(DomainError):
        Report("x.y", {}, passed=False)


def test_timed_report():
    report = Report.timed("x.y", {"r": 1}, lambda: (False, {"why": "because"}))
    assert report.to_json() == {
        "check": "x.y",
        "params": {"r": 1},
        "pass": False,
        "witness": {"why": "because"},
        "elapsed_ms": report.elapsed_ms,
    }


def test_report_rendering():
    ansi.use(ansi.PLAIN)
    ok = Report("a.b", {"n": 2}, elapsed_ms=3)
    bad = Report("c.d", {}, passed=False, witness=[1], elapsed_ms=4)
    assert report_lines(ok) == ["PASS a.b n=2 (3ms)"]
    assert report_lines(bad)[1] == "  witness: [1]"
    assert summary_line([ok, bad]) == "2 checks, 1 failed, 7ms"


def test_ansi_strip():
    ansi.use(ansi.DEFAULT)
    try:
        assert ansi.strip(ansi.red("x")) == "x"
        assert ansi.bold("y") != "y"
    finally:
        ansi.use(ansi.PLAIN)


def test_table_pads_columns():
    assert table([["a", "bbb"], ["cc", "d"]], ["h", "i"]) == ["h   i", "a   bbb", "cc  d"]
    assert table([]) == []


def test_memoize_caches_by_arguments(cold_cache):
    calls = []

    @cache.memoize
    def square(x: int) -> int:
        calls.append(x)
        return x * x

    assert square(3) == 9
    assert square(3) == 9
    assert square(4) == 16
    assert calls == [3, 4]


def test_clear_drops_memoized_values(cold_cache):
    calls = []

    @cache.memoize
    def double(x: int) -> int:
        calls.append(x)
        return 2 * x

    assert double(5) == 10
    cache.clear()
    assert double(5) == 10
    assert calls == [5, 5]
