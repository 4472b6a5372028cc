import pytest

from limitdisc import ghk

CRITERIA = {
    1: "worked example regression",
    2: "verdicts match simulated radii",
    3: "exact limit disc vs simulation",
    4: "complete-graph dimension closed form",
    5: "rapid escape property",
    6: "pointwise convergence and exceptional point",
    7: "non-tangent pairs force limit points",
    8: "oracle equivalence (image disc, spectral radius)",
}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    n = getattr(report, "criterion", None)
    if n is None:
        return
    _outcomes[n] = _outcomes.get(n, True) and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, label in CRITERIA.items():
        if n in _outcomes:
            status = "PASS" if _outcomes[n] else "FAIL"
        else:
            status = "NOT RUN"
        terminalreporter.write_line(f"criterion {n}: {status}  {label}")


@pytest.fixture(scope="session")
def F():
    return ghk()
