import pytest
from hypothesis import strategies as st

from thetaconj import Alphabet, parse_involution

ABC = Alphabet("abc")
AB = Alphabet("ab")


@pytest.fixture
def theta_abc():
    """The running example: a <-> b, c fixed."""
    return parse_involution("ab,c", ABC)


@pytest.fixture
def theta_ab():
    return parse_involution("ab", AB)


def words(letters="abc", max_size=8):
    return st.text(alphabet=letters, max_size=max_size)


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE = []
_NOTES = []


@pytest.fixture
def note():
    """Record an informational line for the acceptance summary."""
    return _NOTES.append


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    n, title = marker.args
    _ACCEPTANCE.append((n, item.name, title, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    by_criterion = {}
    for n, name, title, outcome in _ACCEPTANCE:
        by_criterion.setdefault(n, []).append((name, title, outcome))
    for n in sorted(by_criterion):
        parts = by_criterion[n]
        status = "PASS" if all(o == "passed" for _, _, o in parts) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}")
        for name, title, outcome in parts:
            terminalreporter.write_line(f"    {outcome.upper():7} {title} ({name})")
    for line in _NOTES:
        terminalreporter.write_line(line)
