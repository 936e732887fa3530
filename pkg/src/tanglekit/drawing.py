"""Straight-line drawings, validation, and exact crossing counting.

A drawing is valid when all vertex positions are distinct, no vertex sits in
the open interior of an edge segment, and no two edges overlap collinearly.
Crossing counting enumerates all non-adjacent edge pairs; at desk scale the
O(m^2) scan is instant and doubles as its own oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, InvalidDrawingError
from .geometry import (
    COORD_CAP,
    Point,
    Segment,
    point_in_open_segment,
    properly_cross,
)
from .graphs import Graph


@dataclass
class Drawing:
    graph: Graph
    positions: dict[int, Point]

    def segment(self, edge_index: int) -> Segment:
        u, v = self.graph.edges[edge_index]
        return Segment(self.positions[u], self.positions[v])


@dataclass
class CrossingReport:
    count: int
    pairs: list[tuple[int, int]]


def validate_drawing(d: Drawing) -> list[str]:
    """Check the drawing invariants exhaustively; return all violations."""
    violations: list[str] = []
    g = d.graph
    expected = set(range(g.n))
    got = set(d.positions)
    for v in sorted(expected - got):
        violations.append(f"missing position for vertex {v}")
    for v in sorted(got - expected):
        violations.append(f"position for unknown vertex {v}")
    if violations:
        return violations

    for v in range(g.n):
        p = d.positions[v]
        if not isinstance(p[0], int) or not isinstance(p[1], int):
            violations.append(f"non-integer position for vertex {v}: {p!r}")
        elif abs(p[0]) > COORD_CAP or abs(p[1]) > COORD_CAP:
            violations.append(f"coordinate cap exceeded at vertex {v}: {p!r}")
    if violations:
        return violations

    seen: dict[Point, int] = {}
    for v in range(g.n):
        p = Point(*d.positions[v])
        if p in seen:
            violations.append(
                f"duplicate position: vertices {seen[p]} and {v} both at {tuple(p)}"
            )
        else:
            seen[p] = v

    for ei, (u, w) in enumerate(g.edges):
        seg = Segment(d.positions[u], d.positions[w])
        for v in range(g.n):
            if v in (u, w):
                continue
            if point_in_open_segment(d.positions[v], seg):
                violations.append(
                    f"vertex on edge interior: vertex {v} inside edge {ei} ({u}, {w})"
                )

    from .geometry import _collinear_overlap

    m = g.m
    for i in range(m):
        si = d.segment(i)
        for j in range(i + 1, m):
            if _collinear_overlap(si, d.segment(j)):
                violations.append(f"collinear overlapping edges: {i} and {j}")
    return violations


def count_crossings(d: Drawing) -> CrossingReport:
    """Exact crossing count with the list of crossing edge-index pairs."""
    violations = validate_drawing(d)
    if violations:
        raise InvalidDrawingError("; ".join(violations))
    g = d.graph
    segs = [d.segment(i) for i in range(g.m)]
    pairs: list[tuple[int, int]] = []
    for i in range(g.m):
        a, b = g.edges[i]
        for j in range(i + 1, g.m):
            c, e = g.edges[j]
            if a == c or a == e or b == c or b == e:
                continue  # adjacent edges cannot share an inner point
            if properly_cross(segs[i], segs[j]):
                pairs.append((i, j))
    report = CrossingReport(count=len(pairs), pairs=pairs)
    # Planar-certified graphs can never reach 3*n^2 crossings in any
    # drawing; trip an internal error rather than serve a bogus count.
    n = g.n
    if g.reference_layout is not None and report.count >= 3 * n * n:
        raise InternalInvariantError(
            f"crossing count {report.count} >= 3n^2 for planar graph {g.name}"
        )
    return report


def is_crossing_free(d: Drawing) -> bool:
    return count_crossings(d).count == 0
