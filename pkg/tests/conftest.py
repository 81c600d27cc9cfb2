from itertools import combinations

import pytest

from dspread.families import FamilySpec, generate
from dspread.graphs import Graph, is_connected


def family(kind, *params):
    return generate(FamilySpec(kind, tuple(params)))


@pytest.fixture(scope="session")
def zoo():
    """Small named graphs exercised throughout the suite."""
    return {
        "K2": family("complete", 2),
        "K3": family("complete", 3),
        "K4": family("complete", 4),
        "K5": family("complete", 5),
        "P3": family("path", 3),
        "P4": family("path", 4),
        "P5": family("path", 5),
        "C4": family("cycle", 4),
        "C5": family("cycle", 5),
        "C6": family("cycle", 6),
        "K13": family("kbip", 1, 3),
        "K23": family("kbip", 2, 3),
        "K33": family("kbip", 3, 3),
        "CS25": family("split", 2, 5),
        "CS22": family("split", 2, 4),  # the diamond
    }


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])


def connected_graph_from_mask(n: int, mask: int) -> Graph | None:
    g = graph_from_mask(n, mask)
    return g if is_connected(g) else None
