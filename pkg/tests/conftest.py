import os
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_criteria = {}


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def small_table_path():
    return DATA / "small_table.csv"


def fnc1_dir():
    """Directory holding the four FNC-1 CSVs, or None.

    Looked up in ``$FANDS_FNC1_DIR`` first, then ``tests/data/fnc-1``.
    """
    names = (
        "train_stances.csv",
        "train_bodies.csv",
        "competition_test_stances.csv",
        "competition_test_bodies.csv",
    )
    for cand in (os.environ.get("FANDS_FNC1_DIR"), DATA / "fnc-1"):
        if cand and all((Path(cand) / n).is_file() for n in names):
            return Path(cand)
    return None


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None or (report.when != "call" and report.passed):
        return
    _criteria.setdefault(crit, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria):
        outcomes = _criteria[crit]
        if "failed" in outcomes:
            label = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            label = "NOT RUN (input data unavailable)"
        elif "skipped" in outcomes:
            label = "PASS (partly not run)"
        else:
            label = "PASS"
        terminalreporter.write_line(f"criterion {crit}: {label} [{len(outcomes)} checks]")
