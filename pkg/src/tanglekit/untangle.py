"""Crossing elimination by vertex shifts.

For matchings the exact shift complexity of a drawing is the number of
edges minus the independence number of its segment intersection graph;
shrinking every edge outside a maximum independent set realizes it.  Star
and double-star shapes fall to the two-apex construction, and any graph
with a stored reference layout can be restored wholesale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .drawing import Drawing, count_crossings, is_crossing_free, validate_drawing
from .errors import (
    CapExceededError,
    DegenerateInputError,
    InternalInvariantError,
    NoMethodApplicableError,
    NoReferenceLayoutError,
    PreconditionError,
    WrongGraphClassError,
)
from .geometry import Point
from .graphs import Graph

MIS_EXACT_CAP = 40


@dataclass
class SegmentIntersectionGraph:
    node_count: int  # nodes are edge indices 0..m-1 of the source drawing
    adjacency: list[tuple[int, int]]

    def neighbor_sets(self) -> list[set[int]]:
        nbr: list[set[int]] = [set() for _ in range(self.node_count)]
        for i, j in self.adjacency:
            nbr[i].add(j)
            nbr[j].add(i)
        return nbr


@dataclass
class UntangleResult:
    final: Drawing
    moved: set[int]
    method: str
    shifts: int


def build_intersection_graph(d: Drawing) -> SegmentIntersectionGraph:
    """Nodes are the edges of the drawing, adjacency is proper crossing."""
    report = count_crossings(d)
    return SegmentIntersectionGraph(node_count=d.graph.m, adjacency=report.pairs)


def max_independent_set(sg: SegmentIntersectionGraph, cap: int = MIS_EXACT_CAP) -> list[int]:
    """Exact maximum independent set by branch and bound.

    Decisions are explored in node-index order with inclusion first, and an
    incumbent is only replaced by a strictly larger set, so the result is
    the lexicographically smallest optimum.
    """
    if sg.node_count > cap:
        raise CapExceededError(
            f"exact independent-set cap is {cap} nodes, got {sg.node_count}"
        )
    n = sg.node_count
    nbr = sg.neighbor_sets()
    best: list[int] = []
    chosen: list[int] = []
    blocked = [0] * n  # how many chosen neighbors block this node

    def rec(u: int, remaining: int) -> None:
        nonlocal best
        while u < n and blocked[u] > 0:
            u += 1
            remaining -= 1
        if u == n:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + remaining <= len(best):
            return
        # Include u.
        chosen.append(u)
        for w in nbr[u]:
            blocked[w] += 1
        rec(u + 1, remaining - 1)
        for w in nbr[u]:
            blocked[w] -= 1
        chosen.pop()
        # Exclude u.
        rec(u + 1, remaining - 1)

    # Count only nodes not yet passed as "remaining".
    rec(0, n)
    return best


def greedy_independent_set(sg: SegmentIntersectionGraph) -> list[int]:
    """Deterministic min-degree greedy lower bound (not necessarily optimal)."""
    nbr = sg.neighbor_sets()
    alive = set(range(sg.node_count))
    out = []
    while alive:
        v = min(alive, key=lambda u: (len(nbr[u] & alive), u))
        out.append(v)
        alive -= nbr[v] | {v}
    return sorted(out)


def _require_matching(g: Graph) -> None:
    if any(deg != 1 for deg in g.degrees()):
        raise WrongGraphClassError("operation requires a perfect matching graph")


def matching_shift_complexity(d: Drawing) -> int:
    """Exact shift complexity of a matching drawing: m - alpha(S_D)."""
    _require_matching(d.graph)
    sg = build_intersection_graph(d)
    alpha = len(max_independent_set(sg))
    return d.graph.m - alpha


def _point_segment_dist2(p: Point, a: Point, b: Point) -> Fraction:
    """Exact squared distance from p to segment ab."""
    ab = (b.x - a.x, b.y - a.y)
    ap = (p.x - a.x, p.y - a.y)
    dot = ap[0] * ab[0] + ap[1] * ab[1]
    len2 = ab[0] * ab[0] + ab[1] * ab[1]
    if dot <= 0:
        return Fraction(ap[0] * ap[0] + ap[1] * ap[1])
    if dot >= len2:
        bp = (p.x - b.x, p.y - b.y)
        return Fraction(bp[0] * bp[0] + bp[1] * bp[1])
    cross = ap[0] * ab[1] - ap[1] * ab[0]
    return Fraction(cross * cross, len2)


def _dist2(p: Point, q: Point) -> Fraction:
    return Fraction((p.x - q.x) ** 2 + (p.y - q.y) ** 2)


def shrink_untangle(d: Drawing, keep: list[int]) -> UntangleResult:
    """Shrink every edge outside `keep` onto its kept endpoint.

    `keep` must be independent in the intersection graph.  Each shrunk edge
    moves its higher-id endpoint to an integer point strictly inside the
    safety radius around the lower-id endpoint, so no new incidences can
    appear and the kept edges are untouched.
    """
    g = d.graph
    _require_matching(g)
    violations = validate_drawing(d)
    if violations:
        raise DegenerateInputError("; ".join(violations))
    sg = build_intersection_graph(d)
    keep_set = set(keep)
    if not keep_set <= set(range(g.m)):
        raise PreconditionError("keep contains unknown edge indices")
    for i, j in sg.adjacency:
        if i in keep_set and j in keep_set:
            raise PreconditionError(
                f"keep is not independent: edges {i} and {j} cross"
            )

    shrink_edges = [i for i in range(g.m) if i not in keep_set]
    kept_endpoint = {}
    for i in shrink_edges:
        u, w = g.edges[i]
        kept_endpoint[i] = min(u, w)

    # Half the minimum distance between the anchors of shrinking edges.
    anchors = [d.positions[kept_endpoint[i]] for i in shrink_edges]
    pair_min2: Fraction | None = None
    for i in range(len(anchors)):
        for j in range(i + 1, len(anchors)):
            dd = _dist2(anchors[i], anchors[j])
            if pair_min2 is None or dd < pair_min2:
                pair_min2 = dd

    positions = dict(d.positions)
    moved: set[int] = set()
    for i in shrink_edges:
        u, w = g.edges[i]
        anchor = min(u, w)
        far = max(u, w)
        pa = d.positions[anchor]
        # Clearance from the anchor to everything not on this edge.
        clear2: Fraction | None = None
        for j in range(g.m):
            if j == i:
                continue
            a2, b2 = g.edges[j]
            dd = _point_segment_dist2(pa, d.positions[a2], d.positions[b2])
            if clear2 is None or dd < clear2:
                clear2 = dd
        for v in range(g.n):
            if v in (anchor, far):
                continue
            dd = _dist2(pa, d.positions[v])
            if clear2 is None or dd < clear2:
                clear2 = dd
        r2 = clear2 if clear2 is not None else Fraction(4)
        if pair_min2 is not None and pair_min2 / 4 < r2:
            r2 = pair_min2 / 4
        r2 = r2 / 4  # r = min(clearance, pair_min / 2) / 2

        new_point = _integer_point_near(pa, d.positions[far], r2)
        if new_point is None:
            raise DegenerateInputError(
                f"no integer point within shrink radius at edge {i}; "
                "rescale the drawing to larger coordinates"
            )
        positions[far] = new_point
        moved.add(far)

    final = Drawing(graph=g, positions=positions)
    if not is_crossing_free(final):
        raise InternalInvariantError("shrink untangle left a crossing")
    return UntangleResult(
        final=final, moved=moved, method="mis-shrink", shifts=len(moved)
    )


def _integer_point_near(anchor: Point, toward: Point, r2: Fraction) -> Point | None:
    """An integer point within squared distance r2 of anchor, preferring the
    direction of `toward` (the shrinking edge's own segment)."""
    import math

    dx, dy = toward.x - anchor.x, toward.y - anchor.y
    gcd = math.gcd(abs(dx), abs(dy))
    candidates: list[tuple[int, int]] = []
    if gcd:
        candidates.append((dx // gcd, dy // gcd))
    rad = 1
    while Fraction(rad * rad) < r2 and rad < 8:
        rad += 1
    for ring in range(1, rad + 1):
        for ox in range(-ring, ring + 1):
            for oy in range(-ring, ring + 1):
                if max(abs(ox), abs(oy)) == ring:
                    candidates.append((ox, oy))
    for ox, oy in candidates:
        if (ox, oy) == (0, 0):
            continue
        if Fraction(ox * ox + oy * oy) < r2:
            return Point(anchor.x + ox, anchor.y + oy)
    return None


def apex_untangle(d: Drawing, centers: set[int]) -> UntangleResult:
    """Move at most two cover vertices to the two apex points of the rest.

    Every edge must have an endpoint in `centers`, and no edge may join two
    centers (the segment between the apexes is not covered by the two-apex
    guarantee).  All non-center vertices stay fixed.
    """
    from .geometry import apex_points

    g = d.graph
    violations = validate_drawing(d)
    if violations:
        raise DegenerateInputError("; ".join(violations))
    centers = set(centers)
    if not centers or len(centers) > 2:
        raise PreconditionError("apex untangle needs 1 or 2 center vertices")
    if not centers <= set(range(g.n)):
        raise PreconditionError("unknown center vertex")
    for u, w in g.edges:
        if u not in centers and w not in centers:
            raise PreconditionError(f"edge ({u}, {w}) has no endpoint in centers")
        if u in centers and w in centers:
            raise PreconditionError(f"edge ({u}, {w}) joins two centers")

    fixed = [v for v in range(g.n) if v not in centers]
    positions = dict(d.positions)
    moved: set[int] = set()
    if fixed:
        z = [d.positions[v] for v in fixed]
        above, below = apex_points(z)
        targets = [above, below]
        for rank, c in enumerate(sorted(centers)):
            if positions[c] != targets[rank]:
                positions[c] = targets[rank]
                moved.add(c)

    final = Drawing(graph=g, positions=positions)
    if not is_crossing_free(final):
        raise InternalInvariantError("apex untangle left a crossing")
    return UntangleResult(final=final, moved=moved, method="apex", shifts=len(moved))


def reference_untangle(d: Drawing) -> UntangleResult:
    """Restore the stored crossing-free reference layout."""
    g = d.graph
    if g.reference_layout is None:
        raise NoReferenceLayoutError(f"graph {g.name!r} has no reference layout")
    positions = {v: g.reference_layout[v] for v in range(g.n)}
    moved = {v for v in range(g.n) if positions[v] != d.positions[v]}
    final = Drawing(graph=g, positions=positions)
    if not is_crossing_free(final):
        raise InternalInvariantError("reference layout is not crossing-free")
    return UntangleResult(
        final=final, moved=moved, method="reference", shifts=len(moved)
    )


def _find_apex_centers(g: Graph) -> set[int] | None:
    """Smallest vertex set of size <= 2 covering all edges with no internal
    edge, or None.  Deterministic: lowest ids win."""
    if g.m == 0:
        return set()
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] == g.m:
            return {v}
    edge_set = set(g.edges)
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if (u, w) in edge_set:
                continue
            if all(a in (u, w) or b in (u, w) for a, b in g.edges):
                return {u, w}
    return None


def untangle(d: Drawing, method: str = "auto") -> UntangleResult:
    """Dispatch to the cheapest applicable untangling method.

    auto: mis-shrink for matchings (greedy keep-set above the exact cap,
    labeled as such), the two-apex move when a 2-vertex edge cover exists,
    and the reference layout otherwise.
    """
    g = d.graph
    if method not in ("auto", "mis-shrink", "apex", "reference"):
        raise PreconditionError(f"unknown method {method!r}")

    if method == "auto" and g.m == 0:
        violations = validate_drawing(d)
        if violations:
            raise DegenerateInputError("; ".join(violations))
        return UntangleResult(final=d, moved=set(), method="identity", shifts=0)

    if method == "mis-shrink" or (method == "auto" and all(x == 1 for x in g.degrees()) and g.m > 0):
        sg = build_intersection_graph(d)
        try:
            keep = max_independent_set(sg)
            result = shrink_untangle(d, keep)
        except CapExceededError:
            keep = greedy_independent_set(sg)
            result = shrink_untangle(d, keep)
            result.method = "mis-shrink-greedy"  # shift count is an upper bound
        return result

    if method == "apex":
        centers = _find_apex_centers(g)
        if centers is None:
            raise PreconditionError("no 2-vertex independent edge cover exists")
        return apex_untangle(d, centers)

    if method == "auto":
        centers = _find_apex_centers(g)
        if centers is not None:
            return apex_untangle(d, centers)
        if g.reference_layout is not None:
            return reference_untangle(d)
        raise NoMethodApplicableError(
            "graph fits no special class and has no reference layout"
        )

    return reference_untangle(d)
