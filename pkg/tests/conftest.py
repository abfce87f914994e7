import pytest

from bareo import make_graph, named_graph

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def example_graph():
    """Three vertices, edges e1 = v1v2 and e2 = v1v3."""
    return make_graph(["v1", "v2", "v3"], [("v1", "v2"), ("v1", "v3")])


@pytest.fixture
def k1():
    return make_graph(["w"])


@pytest.fixture
def k2():
    return make_graph(["u", "v"], [("u", "v")])


@pytest.fixture
def p3():
    return make_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def xy():
    """K2 on x, y: the usual codomain for two-colourings."""
    return make_graph(["x", "y"], [("x", "y")])


@pytest.fixture
def petersen():
    return named_graph("petersen")
