"""Combinatorial graphs, family generators, and shift/crossing bound reports.

Graphs are plain vertex-count + edge-list structures with dense ids 0..n-1.
Generators attach a crossing-free reference layout whenever the instance is
planar; a graph is treated as planar exactly when it carries such a layout.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapExceededError, InternalInvariantError, InvalidParameterError
from .geometry import Point, apex_points, circle_positions, orient

MATCHING_EXACT_CAP = 40


@dataclass
class Graph:
    n: int
    edges: list[tuple[int, int]]
    name: str | None = None
    reference_layout: dict[int, Point] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameterError(f"vertex count must be >= 0, got {self.n}")
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range 0..{self.n - 1}")
            normalized.append((u, v) if u < v else (v, u))
        if len(set(normalized)) != len(normalized):
            raise InvalidParameterError("duplicate edges")
        self.edges = sorted(normalized)
        if self.reference_layout is not None:
            if set(self.reference_layout) != set(range(self.n)):
                raise InvalidParameterError("reference layout must cover all vertices")
            self.reference_layout = {
                v: Point(*self.reference_layout[v]) for v in range(self.n)
            }

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass
class DegreeStats:
    degrees: list[int]
    min_degree: int
    degree_square_sum: int


@dataclass
class BoundsReport:
    epsilon: int
    nu: int | None
    shift_lower: int
    shift_upper: int
    obf_upper: int
    flags: dict[str, str] = field(default_factory=dict)


def epsilon(g: Graph) -> int:
    """Number of unordered pairs of edges sharing no endpoint.

    Computed as C(m, 2) minus the adjacent pairs grouped per vertex; the
    equivalent form (m*(m+1) - sum deg^2) / 2 is checked by the test suite.
    """
    m = g.m
    total = math.comb(m, 2)
    for d in g.degrees():
        total -= math.comb(d, 2)
    return total


def epsilon_degree_form(g: Graph) -> int:
    """The same quantity via the degree-square sum (must equal epsilon)."""
    m = g.m
    sq = sum(d * d for d in g.degrees())
    num = m * (m + 1) - sq
    if num % 2 != 0:
        raise InternalInvariantError("degree-form numerator is odd")
    return num // 2


def degree_stats(g: Graph) -> DegreeStats:
    deg = g.degrees()
    return DegreeStats(
        degrees=deg,
        min_degree=min(deg) if deg else 0,
        degree_square_sum=sum(d * d for d in deg),
    )


def matching_number(g: Graph, cap: int = MATCHING_EXACT_CAP) -> int:
    """Exact maximum matching size by branch and bound over edges.

    Raises CapExceededError for graphs above the exact-search cap; callers
    that only want a bound line may skip it.
    """
    if g.n > cap:
        raise CapExceededError(f"matching_number cap is {cap} vertices, got {g.n}")
    adj = [sorted(s) for s in g.neighbors()]
    used = [False] * g.n
    best = 0

    # Greedy warm start tightens pruning from the first branch.
    for u, v in g.edges:
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            best += 1
    used = [False] * g.n
    greedy_best = best

    def rec(u: int, size: int, free: int) -> None:
        nonlocal best
        while u < g.n and (used[u] or not any(not used[w] for w in adj[u])):
            if not used[u]:
                free -= 1
            u += 1
        if u == g.n:
            best = max(best, size)
            return
        if size + free // 2 <= best:
            return
        # Branch: match u with each free neighbor.
        used[u] = True
        for w in adj[u]:
            if not used[w]:
                used[w] = True
                rec(u + 1, size + 1, free - 2)
                used[w] = False
        # Branch: leave u unmatched.
        rec(u + 1, size, free - 1)
        used[u] = False

    rec(0, 0, g.n)
    return max(best, greedy_best)


def _connected_after_removal(g: Graph, removed: frozenset[int]) -> bool:
    remaining = [v for v in range(g.n) if v not in removed]
    if len(remaining) <= 1:
        return True
    adj = g.neighbors()
    start = remaining[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(remaining)


def is_connected(g: Graph) -> bool:
    return _connected_after_removal(g, frozenset())


def k_connected(g: Graph, k: int) -> bool:
    """True iff removal of every (k-1)-subset leaves the remainder connected."""
    if not 1 <= k <= 4:
        raise InvalidParameterError(f"k must be in 1..4, got {k}")
    if g.n <= k:
        return True  # every removal leaves at most one vertex
    if min(g.degrees()) < k:
        # Deleting a minimum-degree vertex's neighborhood (padded to k-1
        # removals) isolates it, so the subset scan is guaranteed to fail.
        return False
    for subset in combinations(range(g.n), k - 1):
        if not _connected_after_removal(g, frozenset(subset)):
            return False
    return True


def bounds_report(g: Graph) -> BoundsReport:
    """Collect the applicable shift and crossing bounds for a graph."""
    eps = epsilon(g)
    stats = degree_stats(g)
    n = g.n
    try:
        nu = matching_number(g)
    except CapExceededError:
        nu = None

    flags: dict[str, str] = {}
    shift_lower = 0
    flags["shift_lower"] = "trivial"
    if nu is not None and nu - 1 > shift_lower:
        shift_lower = nu - 1
        flags["shift_lower"] = "matching-number"
    if n >= 10 and stats.min_degree >= 3 and is_connected(g):
        cand = -(-(n - 1) // 3)
        if cand > shift_lower:
            shift_lower = cand
            flags["shift_lower"] = "min-degree-3"
    if k_connected(g, 4):
        cand = -(-(n - 3) // 2) if n >= 3 else 0
        if cand > shift_lower:
            shift_lower = cand
            flags["shift_lower"] = "4-connected"

    shift_upper = n - 3 if n >= 3 else 0
    flags["shift_upper"] = "straight-line-embedding" if n >= 3 else "tiny-graph"

    if g.reference_layout is not None:
        obf_upper = min(eps, 3 * n * n - 1)
        flags["obf_upper"] = "planar-pair-bound" if 3 * n * n - 1 < eps else "pair-bound"
    else:
        obf_upper = eps
        flags["obf_upper"] = "pair-bound"

    report = BoundsReport(
        epsilon=eps,
        nu=nu,
        shift_lower=shift_lower,
        shift_upper=shift_upper,
        obf_upper=obf_upper,
        flags=flags,
    )
    if report.shift_lower > report.shift_upper and n >= 3:
        raise InternalInvariantError(
            f"shift bounds inverted: {report.shift_lower} > {report.shift_upper}"
        )
    return report


# ---------------------------------------------------------------------------
# Family generators.  Every planar instance gets a crossing-free reference
# layout; layouts are re-validated by validate_reference_layout at the end
# of each generator.
# ---------------------------------------------------------------------------


def _validate_layout(g: Graph) -> Graph:
    # Imported here to avoid a cycle: drawing.py builds on graphs.py.
    from .drawing import Drawing, is_crossing_free, validate_drawing

    if g.reference_layout is None:
        return g
    d = Drawing(graph=g, positions=dict(g.reference_layout))
    violations = validate_drawing(d)
    if violations:
        raise InternalInvariantError(
            f"{g.name}: reference layout invalid: {violations[0]}"
        )
    if not is_crossing_free(d):
        raise InternalInvariantError(f"{g.name}: reference layout has crossings")
    return g


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    layout = dict(enumerate(circle_positions(n)))
    return _validate_layout(
        Graph(n=n, edges=edges, name=f"cycle-{n}", reference_layout=layout)
    )


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    layout = None
    if n <= 4:
        corners = [Point(0, 0), Point(4, 0), Point(2, 4), Point(2, 1)]
        layout = {i: corners[i] for i in range(n)}
    return _validate_layout(
        Graph(n=n, edges=edges, name=f"complete-{n}", reference_layout=layout)
    )


def gen_complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise InvalidParameterError(f"parts must be >= 1, got ({s}, {t})")
    n = s + t
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    layout = None
    if min(s, t) <= 2:
        # Small part plays the apex role over a collinear row of the big part.
        if s <= t:
            small = list(range(s))
            big = list(range(s, n))
        else:
            small = list(range(s, n))
            big = list(range(s))
        row = [Point(2 * k, 0) for k in range(len(big))]
        layout = {v: row[k] for k, v in enumerate(big)}
        if len(small) == 1:
            layout[small[0]] = Point(len(big) - 1, 3) if len(big) > 1 else Point(0, 3)
        else:
            above, below = apex_points(row)
            layout[small[0]] = above
            layout[small[1]] = below
    return _validate_layout(
        Graph(n=n, edges=edges, name=f"bipartite-{s}-{t}", reference_layout=layout)
    )


def gen_matching(m: int) -> Graph:
    if m < 1:
        raise InvalidParameterError(f"matching needs m >= 1, got {m}")
    edges = [(2 * i, 2 * i + 1) for i in range(m)]
    layout = {}
    for i in range(m):
        layout[2 * i] = Point(0, 2 * i)
        layout[2 * i + 1] = Point(4, 2 * i)
    return _validate_layout(
        Graph(n=2 * m, edges=edges, name=f"matching-{m}", reference_layout=layout)
    )


def gen_star_forest(k: int, s: int) -> Graph:
    """k disjoint stars with s leaves each; centers get ids 0..k-1."""
    if k < 1 or s < 1:
        raise InvalidParameterError(f"star forest needs k, s >= 1, got ({k}, {s})")
    n = k + k * s
    edges = []
    for i in range(k):
        for j in range(s):
            edges.append((i, k + i * s + j))
    # Each star sits in its own horizontal box: leaves on a row, the center
    # above the row, so segments stay inside the box.
    width = 2 * s + 2
    layout = {}
    for i in range(k):
        x0 = i * width
        layout[i] = Point(x0 + s - 1, 2)
        for j in range(s):
            layout[k + i * s + j] = Point(x0 + 2 * j, 0)
    return _validate_layout(
        Graph(n=n, edges=edges, name=f"starforest-{k}-{s}", reference_layout=layout)
    )


def _gs_edges(s: int) -> list[tuple[int, int]]:
    # Centers are 0,1,2; subdivider i (1-based) has id i + 2 and joins the
    # two centers other than (i mod 3).
    edges = []
    for i in range(1, 3 * s + 1):
        for j in range(3):
            if j != i % 3:
                edges.append((j, i + 2))
    return edges


def _gs_layout(s: int) -> dict[int, Point]:
    """Three corner vertices with nested integer 'tents' of subdividers.

    The s parallel length-2 paths between each corner pair are drawn as
    nested tents over that side of a big triangle, apexes spaced along the
    exact outward perpendicular through the side midpoint.
    """
    from .drawing import Drawing, is_crossing_free, validate_drawing

    side = 4 * s + 8
    while side <= 1 << 20:
        half = side  # triangle is (0,0), (2*half, 0), (half, 2*half)
        corners = [Point(0, 0), Point(2 * half, 0), Point(half, 2 * half)]
        # Outward unit-ish normals with exact perpendicularity per side.
        tent_base = {
            # side (c1, c2): subdividers with i % 3 == 0
            0: (Point((corners[1].x + corners[2].x) // 2, (corners[1].y + corners[2].y) // 2), (2, 1)),
            # side (c0, c2): i % 3 == 1
            1: (Point((corners[0].x + corners[2].x) // 2, (corners[0].y + corners[2].y) // 2), (-2, 1)),
            # side (c0, c1): i % 3 == 2
            2: (Point((corners[0].x + corners[1].x) // 2, (corners[0].y + corners[1].y) // 2), (0, -1)),
        }
        layout = {j: corners[j] for j in range(3)}
        counters = {0: 0, 1: 0, 2: 0}
        for i in range(1, 3 * s + 1):
            r = i % 3
            counters[r] += 1
            h = counters[r]
            mid, normal = tent_base[r]
            layout[i + 2] = Point(mid.x + h * normal[0], mid.y + h * normal[1])
        g = Graph(n=3 * s + 3, edges=_gs_edges(s), reference_layout=None)
        d = Drawing(graph=g, positions=layout)
        if not validate_drawing(d) and is_crossing_free(d):
            return layout
        side *= 2
    raise InternalInvariantError(f"no valid tent layout found for gs-{s}")


def gen_gs(s: int) -> Graph:
    """Subdivided triangle multigraph: 3 corners, 3s degree-2 subdividers."""
    if s < 1:
        raise InvalidParameterError(f"gs needs s >= 1, got {s}")
    layout = _gs_layout(s)
    return _validate_layout(
        Graph(n=3 * s + 3, edges=_gs_edges(s), name=f"gs-{s}", reference_layout=layout)
    )


def gen_stacked_triangulation(n: int, seed: int = 0) -> Graph:
    """Maximal planar graph grown by inserting vertices into faces.

    Face choice is seeded and area-weighted, which keeps faces fat enough
    that a rounded-centroid insertion point always exists at desk scale.
    """
    if n < 3:
        raise InvalidParameterError(f"triangulation needs n >= 3, got {n}")
    rng = random.Random(seed)
    size = 1 << 20
    pos: dict[int, Point] = {0: Point(0, 0), 1: Point(size, 0), 2: Point(size // 2, size)}
    edges = [(0, 1), (0, 2), (1, 2)]
    faces: list[tuple[int, int, int]] = [(0, 1, 2)]

    def doubled_area(f: tuple[int, int, int]) -> int:
        a, b, c = (pos[v] for v in f)
        return abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))

    def strictly_inside(p: Point, f: tuple[int, int, int]) -> bool:
        a, b, c = (pos[v] for v in f)
        s1 = orient(a, b, p)
        s2 = orient(b, c, p)
        s3 = orient(c, a, p)
        return s1 == s2 == s3 and s1 != 0

    for v in range(3, n):
        weights = [doubled_area(f) for f in faces]
        idx = rng.choices(range(len(faces)), weights=weights, k=1)[0]
        face = faces.pop(idx)
        a, b, c = (pos[w] for w in face)
        cx = (a.x + b.x + c.x) // 3
        cy = (a.y + b.y + c.y) // 3
        placed = None
        for dx, dy in _spiral_offsets(12):
            cand = Point(cx + dx, cy + dy)
            if strictly_inside(cand, face):
                placed = cand
                break
        if placed is None:
            raise InternalInvariantError(
                f"no interior integer point in face {face} at n={v}"
            )
        pos[v] = placed
        fa, fb, fc = face
        edges.extend([(fa, v), (fb, v), (fc, v)])
        faces.extend([(fa, fb, v), (fb, fc, v), (fa, fc, v)])

    name = f"triangulation-{n}" if seed == 0 else f"triangulation-{n}-r{seed}"
    return _validate_layout(
        Graph(n=n, edges=edges, name=name, reference_layout=pos)
    )


def _spiral_offsets(radius: int) -> list[tuple[int, int]]:
    offs = [(0, 0)]
    for r in range(1, radius + 1):
        ring = []
        for dx in range(-r, r + 1):
            for dy in range(-r, r + 1):
                if max(abs(dx), abs(dy)) == r:
                    ring.append((dx, dy))
        offs.extend(sorted(ring))
    return offs
