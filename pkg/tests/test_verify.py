"""The verify suites themselves: labels, determinism, and failure reporting."""

from bicolored import exact
from bicolored.verify import EXPECTED_FLAGGED_H, GOLDEN_CELLS, SUITES, run_suites


def collect(names, seed=0):
    lines = []
    ok = run_suites(names, seed=seed, out=lines.append)
    return ok, lines


def test_suite_registry():
    assert set(SUITES) == {"characters", "cycleform", "bounds", "asymptotics"}
    assert set(GOLDEN_CELLS) == {(3, 0), (12, 2), (30, 2), (48, 0), (48, 4)}
    assert set(EXPECTED_FLAGGED_H) == {0, 1, 2, 3}


def test_bounds_suite_passes():
    ok, lines = collect(["bounds"])
    assert ok
    assert lines and all(line.startswith("pass  bounds: ") for line in lines)
    labels = [line.split(": ", 1)[1] for line in lines]
    assert len(labels) == len(set(labels))


def test_suites_are_deterministic():
    first = collect(["cycleform"], seed=3)
    second = collect(["cycleform"], seed=3)
    assert first == second


def test_failure_reporting(monkeypatch):
    monkeypatch.setitem(exact._stirling_rows, 4, (0, 6, 12, 6, 1))
    ok, lines = collect(["characters"])
    assert not ok
    assert any(line.startswith("FAIL") for line in lines)
