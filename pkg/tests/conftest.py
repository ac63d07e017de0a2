import numpy as np
import pytest

from hyperdp.errors import InvalidHypergraph
from hyperdp.genlib import graph_cycle, loose_cycle, loose_path
from hyperdp.hypercore import Hypergraph

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        num, text = mark.args
        _CRITERIA.append((num, "PASS" if rep.passed else "FAIL", text))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num, status, text in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{status}] criterion {num:>2}: {text}")


def random_hypergraph(rng, n_max=6, m_max=4, sizes=(2, 3)):
    """Random simple hypergraph; retries until the edge set is valid."""
    while True:
        n = int(rng.integers(2, n_max + 1))
        m = int(rng.integers(0, m_max + 1))
        edges = []
        for _ in range(m):
            r = int(rng.choice([s for s in sizes if s <= n]))
            edges.append(tuple(sorted(rng.choice(n, size=r, replace=False).tolist())))
        try:
            return Hypergraph(n, tuple(edges))
        except InvalidHypergraph:
            continue


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def path2():
    return loose_path(3, 2)


@pytest.fixture
def cyc3():
    return loose_cycle(3, 3)


@pytest.fixture
def cyc4():
    return loose_cycle(3, 4)


@pytest.fixture
def c4():
    return graph_cycle(4)
