from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from mixedcages.core import MixedGraph


def random_mixed_graph(rng: random.Random, n: int, p_edge: float, p_arc: float) -> MixedGraph:
    edges, arcs = set(), set()
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if u < v and rng.random() < p_edge:
                edges.add((u, v))
            if rng.random() < p_arc:
                arcs.add((u, v))
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@st.composite
def mixed_graphs(draw, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.sets(st.sampled_from([(u, v) for u, v in pairs if u < v]))) if n > 1 else set()
    arcs = draw(st.sets(st.sampled_from(pairs))) if n > 1 else set()
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


@pytest.fixture
def rng():
    return random.Random(20261016)


# -- acceptance report: one line per criterion, worst outcome of its tests

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria.setdefault(number, {"title": title, "failed": False, "ran": False, "skipped": 0})
            item.user_properties.append(("criterion", number))


def pytest_runtest_logreport(report):
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    entry = _criteria[number]
    if report.skipped:
        entry["skipped"] += 1
    elif report.when == "call" or report.failed:
        entry["ran"] = entry["ran"] or report.when == "call"
        entry["failed"] = entry["failed"] or report.failed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        if entry["failed"]:
            status = "FAIL"
        elif entry["ran"]:
            status = "PASS"
        else:
            status = "NOT RUN"
        note = f" ({entry['skipped']} opt-in checks skipped)" if entry["skipped"] else ""
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {entry['title']}{note}")
