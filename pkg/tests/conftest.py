"""Shared oracles and drawing helpers for the test suite.

The oracles here are deliberately independent of the library code paths
they check: epsilon by literal pair enumeration, alpha by subset scan,
and random drawings rejected until they pass general position.
"""

from __future__ import annotations

import random
from itertools import combinations

from tanglekit.drawing import Drawing, validate_drawing
from tanglekit.geometry import Point
from tanglekit.graphs import Graph


def brute_epsilon(g: Graph) -> int:
    """Count disjoint edge pairs by direct enumeration."""
    count = 0
    for (a, b), (c, d) in combinations(g.edges, 2):
        if len({a, b, c, d}) == 4:
            count += 1
    return count


def brute_alpha(node_count: int, adjacency: list[tuple[int, int]]) -> int:
    """Independence number by scanning all 2^n subsets, largest first."""
    neighbors = [set() for _ in range(node_count)]
    for i, j in adjacency:
        neighbors[i].add(j)
        neighbors[j].add(i)
    for size in range(node_count, -1, -1):
        for subset in combinations(range(node_count), size):
            chosen = set(subset)
            if all(not (neighbors[v] & chosen) for v in chosen):
                return size
    return 0


def random_valid_drawing(g: Graph, rng: random.Random, span: int = 1000) -> Drawing:
    """Random integer positions, regenerated until general position holds."""
    while True:
        points: set[Point] = set()
        while len(points) < g.n:
            points.add(Point(rng.randint(-span, span), rng.randint(-span, span)))
        shuffled = sorted(points)
        rng.shuffle(shuffled)
        d = Drawing(graph=g, positions=dict(enumerate(shuffled)))
        if not validate_drawing(d):
            return d
