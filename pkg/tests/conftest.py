import itertools

import pytest

from expdeg.graph import DualGraph, single_edge_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    """Collects one pass/fail line per acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def one_edge():
    return single_edge_graph(fibre_dim=2)


@pytest.fixture
def two_edge_sink():
    return DualGraph.build(["A", "B", "C"], [("D1", "A", "C"), ("D2", "B", "C")])


def small_multigraphs(max_vertices: int = 5, max_edges: int = 6):
    """Loopless undirected multigraphs, oriented from lower to higher vertex index."""
    for nv in range(1, max_vertices + 1):
        vids = [f"v{i}" for i in range(nv)]
        pairs = list(itertools.combinations(range(nv), 2))
        for m in range(max_edges + 1):
            for edges in itertools.combinations_with_replacement(pairs, m):
                yield DualGraph.build(
                    vids, [(f"e{k}", vids[i], vids[j]) for k, (i, j) in enumerate(edges)]
                )
