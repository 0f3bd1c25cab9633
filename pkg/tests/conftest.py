from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import pytest

from icecrystal.crystal_graph import generate
from icecrystal.ice_model import Partition, from_dict
from icecrystal.tableau_oracle import tableau_crystal

DATA = Path(__file__).parent / "data"


def partitions_in_box(n_max: int = 4, part_max: int = 4) -> list[Partition]:
    """Every partition with n <= n_max rows, largest part <= part_max and last part 0."""
    out = []

    def grow(prefix, bound, left):
        if left == 0:
            out.append(Partition(tuple(prefix) + (0,)))
            return
        for a in range(bound, -1, -1):
            grow(prefix + [a], a, left - 1)

    for n in range(1, n_max + 1):
        grow([], part_max, n - 1)
    return out


ENVELOPE = partitions_in_box()
SMALL = [lam for lam in ENVELOPE if lam.n <= 3 and lam[1] <= 3]


@lru_cache(maxsize=None)
def ice_graph(lam: Partition):
    return generate(lam)


@lru_cache(maxsize=None)
def tab_graph(lam: Partition):
    return tableau_crystal(lam, lam.n)


def load_model(name: str):
    return from_dict(json.loads((DATA / name).read_text()))


@pytest.fixture
def model_3x5():
    """The 3x5 model of M(2,1,0) with boxes {(2,3),(1,5),(2,5)}."""
    return load_model("model_3x5.json")


@pytest.fixture
def e1_before():
    """Boxes {(2,3),(3,4),(1,5)}: sigma_1 = R L, sigma_2 = L R."""
    return load_model("model_e1_before.json")


@pytest.fixture
def e1_after():
    return load_model("model_e1_after.json")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (report.when == "call" or report.failed):
        item.config._criteria.append((*mark.args, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter, config):
    if config._criteria:
        terminalreporter.section("acceptance criteria")
        for number, title, verdict in sorted(config._criteria):
            terminalreporter.write_line(f"[{verdict}] {number}. {title}")
