import pytest

from banlemma.resources import (
    DATA_DIR,
    LemmaDictionary,
    MarkerCategory,
    MarkerSet,
    VerbResources,
    load_resources,
)

GOLDEN = DATA_DIR / "golden.tsv"

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    key = mark.args[0]
    title = mark.args[1]
    prev = _criteria.get(key, (title, True))
    if rep.when == "call" or rep.failed:
        _criteria[key] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        title, ok = _criteria[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title}")


@pytest.fixture(scope="session")
def bundle():
    return load_resources()


@pytest.fixture(scope="session")
def markers(bundle):
    return bundle.markers


@pytest.fixture
def empty_dictionary():
    return LemmaDictionary({})


def small_markers(**lists):
    """A MarkerSet with every category present; unspecified ones get a dummy marker."""
    base = {cat: ["ঃঃঃ"] for cat in MarkerCategory}
    base.update({MarkerCategory[k.upper()]: v for k, v in lists.items()})
    return MarkerSet(base)


def empty_verbs():
    return VerbResources((), {})
