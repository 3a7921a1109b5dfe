import random

import pytest

from tagrec.fixture import bundled_path

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): exit criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when not in ("setup", "call"):
        return
    n, title = marker.args
    if report.failed or report.when == "call":
        prev = _ACCEPTANCE.get(n, (title, True))[1]
        _ACCEPTANCE[n] = (title, prev and not report.failed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}")


@pytest.fixture(scope="session")
def fixture_files():
    return {name: bundled_path(name) for name in ("triples.tsv", "corpus.tsv", "thesaurus.tsv")}


@pytest.fixture
def rng():
    return random.Random(1234)
