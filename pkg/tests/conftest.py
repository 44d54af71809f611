import random

import pytest

from gamma3_lab.graph import Multigraph, SimpleGraph


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run slow checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    if rep.skipped:
        status = "SKIP"
    elif rep.failed:
        status = "FAIL"
    elif rep.when == "call":
        status = "PASS"
    else:
        return
    # a criterion spread over several tests passes only if all of them do
    prev = _CRITERIA.get(number, ("PASS", title))[0]
    if prev == "FAIL" or (prev == "SKIP" and status == "PASS"):
        status = prev
    _CRITERIA[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def random_multigraph(rng: random.Random, max_edges: int, max_vertices: int = 8,
                      connected: bool = True) -> Multigraph:
    """Random multigraph without loops; grown as a connected edge set when asked."""
    m = rng.randint(1, max_edges)
    n = rng.randint(2, max_vertices)
    edges = []
    touched = [0]
    for _ in range(m):
        if connected:
            a = rng.choice(touched)
            b = rng.randrange(n)
            while b == a:
                b = rng.randrange(n)
        else:
            a, b = rng.sample(range(n), 2)
        edges.append((a, b))
        if b not in touched:
            touched.append(b)
    return Multigraph.from_edges(n, edges).without_isolated()


@pytest.fixture
def rng():
    return random.Random(20240611)
