"""High-crossing drawing construction.

The main tool places vertices one by one onto convex positions, each time
choosing the slot that maximizes the expected number of crossings when the
remaining vertices are completed by a uniformly random injection.  Because
the random completion places each still-free vertex uniformly over the free
slots, the best slot is always at least as good as the pre-placement
average, so the finished drawing carries at least a third of the
disjoint-edge-pair count of the graph.

On convex positions a chord pair crosses iff the slot indices interleave in
cyclic order, so the conditional probabilities reduce to counting free
slots in arcs.  The closed forms used here are checked against exhaustive
placement enumeration by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .drawing import Drawing, count_crossings, validate_drawing
from .errors import InvalidParameterError, PreconditionError
from .geometry import Point, Segment, convex_positions, properly_cross
from .graphs import Graph, epsilon


@dataclass
class PartialAssignment:
    """A partial injection of vertices into convex slots."""

    slots: list[Point]
    assigned: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        taken = list(self.assigned.values())
        if len(set(taken)) != len(taken):
            raise InvalidParameterError("slot assignment is not injective")
        for s in taken:
            if not 0 <= s < len(self.slots):
                raise InvalidParameterError(f"slot index {s} out of range")

    @property
    def slot_count(self) -> int:
        return len(self.slots)

    def free_slots(self) -> list[int]:
        taken = set(self.assigned.values())
        return [s for s in range(len(self.slots)) if s not in taken]


def _in_open_arc(x: int, i: int, j: int, n: int) -> bool:
    """True iff slot x lies strictly inside the clockwise arc from i to j."""
    return 0 < (x - i) % n < (j - i) % n


def chords_interleave(a: int, b: int, c: int, d: int, n: int) -> bool:
    """Do chords {a,b} and {c,d} of an n-slot convex polygon cross?"""
    return _in_open_arc(c, a, b, n) != _in_open_arc(d, a, b, n)


class _FreeArcs:
    """Prefix-sum view of the free slots, with one optional slot removed."""

    def __init__(self, n: int, free: set[int], minus: int | None = None):
        self.n = n
        self.minus = minus
        pre = [0] * (n + 1)
        for s in range(n):
            pre[s + 1] = pre[s] + (1 if s in free else 0)
        self.pre = pre

    def _range(self, lo: int, hi: int) -> int:
        cnt = self.pre[hi] - self.pre[lo]
        if self.minus is not None and lo <= self.minus < hi:
            cnt -= 1
        return cnt

    def open_arc(self, i: int, j: int) -> int:
        """Free slots strictly inside the clockwise arc from i to j."""
        if i == j:
            return 0
        if i < j:
            return self._range(i + 1, j)
        return self._range(i + 1, self.n) + self._range(0, j)


def _pair_probability_parts(
    ends: tuple[int, int, int, int],
    slot_of: dict[int, int],
    arcs: _FreeArcs,
    n: int,
) -> tuple[int, int, int, int]:
    """Crossing probability of one edge pair, as case-tagged integer parts.

    Returns (ones, thirds, num_g, num_gg): the probability equals
    ones + thirds/3 + num_g/g + num_gg/(g*(g-1)) with g free slots.
    """
    a, b, c, d = ends
    sa, sb = slot_of.get(a), slot_of.get(b)
    sc, sd = slot_of.get(c), slot_of.get(d)
    unassigned = (sa is None) + (sb is None) + (sc is None) + (sd is None)

    if unassigned >= 3:
        # At most one endpoint pinned: of the 3! labelings of the other
        # three slots, exactly two interleave, independent of geometry.
        return (0, 1, 0, 0)

    if unassigned == 0:
        return (1 if chords_interleave(sa, sb, sc, sd, n) else 0, 0, 0, 0)

    if unassigned == 1:
        if sa is None or sb is None:
            sa, sb, sc, sd = sc, sd, sa, sb  # make (a, b) the pinned edge
        other = sc if sc is not None else sd
        # The chords cross iff the lone random endpoint lands on the far
        # side of chord (a, b) from its already-pinned partner.
        if _in_open_arc(other, sa, sb, n):
            cnt = arcs.open_arc(sb, sa)
        else:
            cnt = arcs.open_arc(sa, sb)
        return (0, 0, cnt, 0)

    # unassigned == 2
    if (sa is None) != (sb is None):
        # One endpoint of each edge pinned.
        alpha = sa if sa is not None else sb
        gamma = sc if sc is not None else sd
        k1 = arcs.open_arc(alpha, gamma)
        k2 = arcs.open_arc(gamma, alpha)
        return (0, 0, 0, k1 * (k1 - 1) // 2 + k2 * (k2 - 1) // 2)
    if sa is None:
        sa, sb, sc, sd = sc, sd, sa, sb  # make (a, b) the pinned edge
    # Both random endpoints belong to one edge: they must land on opposite
    # sides of the pinned chord.
    x = arcs.open_arc(sa, sb)
    y = arcs.open_arc(sb, sa)
    return (0, 0, 0, 2 * x * y)


def _parts_to_fraction(parts: tuple[int, int, int, int], g: int) -> Fraction:
    ones, thirds, num_g, num_gg = parts
    total = Fraction(ones) + Fraction(thirds, 3)
    if num_g:
        total += Fraction(num_g, g)
    if num_gg:
        total += Fraction(num_gg, g * (g - 1))
    return total


def _nonadjacent_pairs(g: Graph) -> list[tuple[int, int, int, int]]:
    pairs = []
    m = g.m
    for i in range(m):
        a, b = g.edges[i]
        for j in range(i + 1, m):
            c, d = g.edges[j]
            if a in (c, d) or b in (c, d):
                continue
            pairs.append((a, b, c, d))
    return pairs


def pair_crossing_probability(
    pa: PartialAssignment, e: tuple[int, int], f: tuple[int, int]
) -> Fraction:
    """Exact probability that chords e and f interleave after a uniformly
    random injection of their unassigned endpoints into the free slots."""
    a, b = e
    c, d = f
    if len({a, b, c, d}) != 4:
        raise PreconditionError(f"edges {e} and {f} share an endpoint")
    n = pa.slot_count
    free = set(pa.free_slots())
    arcs = _FreeArcs(n, free)
    parts = _pair_probability_parts((a, b, c, d), pa.assigned, arcs, n)
    return _parts_to_fraction(parts, len(free))


def pair_crossing_probability_brute(
    pa: PartialAssignment, e: tuple[int, int], f: tuple[int, int]
) -> Fraction:
    """Reference oracle: exhaustive enumeration over all placements of the
    unassigned endpoints.  Must agree with pair_crossing_probability."""
    a, b = e
    c, d = f
    if len({a, b, c, d}) != 4:
        raise PreconditionError(f"edges {e} and {f} share an endpoint")
    n = pa.slot_count
    free = pa.free_slots()
    unknown = [v for v in (a, b, c, d) if v not in pa.assigned]
    if not unknown:
        s = pa.assigned
        return Fraction(1 if chords_interleave(s[a], s[b], s[c], s[d], n) else 0)
    hits = 0
    total = 0
    for placement in permutations(free, len(unknown)):
        s = dict(pa.assigned)
        s.update(zip(unknown, placement))
        total += 1
        if chords_interleave(s[a], s[b], s[c], s[d], n):
            hits += 1
    return Fraction(hits, total)


def conditional_expected_crossings(pa: PartialAssignment, g: Graph) -> Fraction:
    """Expected crossing count of the random completion, by linearity."""
    n = pa.slot_count
    free = set(pa.free_slots())
    arcs = _FreeArcs(n, free)
    ones = thirds = num_g = num_gg = 0
    for pair in _nonadjacent_pairs(g):
        p1, p3, pg, pgg = _pair_probability_parts(pair, pa.assigned, arcs, n)
        ones += p1
        thirds += p3
        num_g += pg
        num_gg += pgg
    return _parts_to_fraction((ones, thirds, num_g, num_gg), max(len(free), 1))


def default_order(g: Graph) -> list[int]:
    """Descending degree, ties by vertex id."""
    deg = g.degrees()
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


def _greedy_assign(g: Graph, order: list[int]) -> tuple[dict[int, int], list[Fraction]]:
    """Greedy slot assignment; returns the placement and the conditional
    expectation after each step (entry 0 is the empty-assignment value)."""
    n = g.n
    pairs = _nonadjacent_pairs(g)
    assigned: dict[int, int] = {}
    free: set[int] = set(range(n))
    pairs_by_vertex: dict[int, list[int]] = {v: [] for v in range(n)}
    for idx, (a, b, c, d) in enumerate(pairs):
        for v in (a, b, c, d):
            pairs_by_vertex[v].append(idx)
    placed_count = [0] * len(pairs)
    fixed_cross = 0  # fully placed pairs that cross

    expectations: list[Fraction] = [Fraction(len(pairs), 3)]

    for v in order:
        active = []
        inert_thirds = 0
        vset_pairs = set(pairs_by_vertex[v])
        for idx in range(len(pairs)):
            placed = placed_count[idx]
            if placed == 4:
                continue  # folded into fixed_cross
            post = placed + (1 if idx in vset_pairs else 0)
            if post >= 2:
                active.append(idx)
            else:
                inert_thirds += 1

        best_slot = -1
        best_value: Fraction | None = None
        for s in sorted(free):
            assigned[v] = s
            arcs = _FreeArcs(n, free, minus=s)
            gg = len(free) - 1
            ones = thirds = num_g = num_gg = 0
            for idx in active:
                p1, p3, pg, pgg = _pair_probability_parts(pairs[idx], assigned, arcs, n)
                ones += p1
                thirds += p3
                num_g += pg
                num_gg += pgg
            value = _parts_to_fraction(
                (ones + fixed_cross, thirds + inert_thirds, num_g, num_gg),
                max(gg, 1),
            )
            if best_value is None or value > best_value:
                best_value = value
                best_slot = s
            del assigned[v]

        assigned[v] = best_slot
        free.discard(best_slot)
        expectations.append(best_value if best_value is not None else Fraction(0))
        for idx in pairs_by_vertex[v]:
            placed_count[idx] += 1
            if placed_count[idx] == 4:
                a, b, c, d = pairs[idx]
                if chords_interleave(assigned[a], assigned[b], assigned[c], assigned[d], n):
                    fixed_cross += 1

    return assigned, expectations


def derandomized_obfuscate(g: Graph, order: list[int] | None = None) -> Drawing:
    """Greedy conditional-expectation placement on convex positions.

    The returned drawing always has at least epsilon(g)/3 crossings.
    """
    drawing, _ = derandomized_obfuscate_with_trace(g, order)
    return drawing


def derandomized_obfuscate_with_trace(
    g: Graph, order: list[int] | None = None
) -> tuple[Drawing, list[Fraction]]:
    """Like derandomized_obfuscate, also returning the conditional
    expectation after every greedy step (trace[0] is epsilon/3)."""
    if order is None:
        order = default_order(g)
    if sorted(order) != list(range(g.n)):
        raise InvalidParameterError("order must be a permutation of the vertices")
    slots = convex_positions(g.n) if g.n else []
    assignment, trace = _greedy_assign(g, order)
    positions = {v: slots[s] for v, s in assignment.items()}
    return Drawing(graph=g, positions=positions), trace


def local_search_swaps(d: Drawing, max_rounds: int = 50) -> Drawing:
    """Hill-climb by position swaps; never decreases the crossing count.

    Each round applies the single best swap of two vertex positions as long
    as some swap strictly increases the count.  Intended for drawings on
    convex position, where every swap keeps the drawing valid.
    """
    g = d.graph
    positions = dict(d.positions)
    base_count = count_crossings(d).count
    incident: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for idx, (u, w) in enumerate(g.edges):
        incident[u].append(idx)
        incident[w].append(idx)

    def crossings_touching(pos: dict[int, Point], verts: tuple[int, int]) -> int:
        """Crossing pairs with at least one edge incident to verts."""
        eset = {e for v in verts for e in incident[v]}
        cnt = 0
        for i in eset:
            a, b = g.edges[i]
            for j in range(g.m):
                if j == i or (j in eset and j < i):
                    continue
                c, e = g.edges[j]
                if a in (c, e) or b in (c, e):
                    continue
                if properly_cross(Segment(pos[a], pos[b]), Segment(pos[c], pos[e])):
                    cnt += 1
        return cnt

    for _ in range(max_rounds):
        best_gain = 0
        best_pair: tuple[int, int] | None = None
        for u in range(g.n):
            for w in range(u + 1, g.n):
                before = crossings_touching(positions, (u, w))
                positions[u], positions[w] = positions[w], positions[u]
                after = crossings_touching(positions, (u, w))
                positions[u], positions[w] = positions[w], positions[u]
                gain = after - before
                if gain > best_gain:
                    best_gain = gain
                    best_pair = (u, w)
        if best_pair is None:
            break
        u, w = best_pair
        positions[u], positions[w] = positions[w], positions[u]

    result = Drawing(graph=g, positions=positions)
    if count_crossings(result).count < base_count:
        raise PreconditionError("local search decreased the crossing count")
    return result


# ---------------------------------------------------------------------------
# Family-specific optimal drawings.
# ---------------------------------------------------------------------------


def family_optimal_drawing(g: Graph) -> Drawing | None:
    """The known best drawing for recognized families, else None."""
    name = g.name or ""
    head, *rest = name.split("-")
    try:
        args = [int(x) for x in rest]
    except ValueError:
        return None
    if head == "complete" and len(args) == 1:
        return _complete_drawing(g, args[0])
    if head == "bipartite" and len(args) == 2:
        return _bipartite_rows_drawing(g, args[0], args[1])
    if head == "cycle" and len(args) == 1 and args[0] % 2 == 1:
        return _cycle_star_drawing(g, args[0])
    if head == "starforest" and len(args) == 2:
        return _star_forest_all_crossing_drawing(g, args[0], args[1])
    if head == "gs" and len(args) == 1:
        return _gs_line_drawing(g, args[0])
    return None


def _check_family(g: Graph, expected_edges: list[tuple[int, int]], n: int) -> None:
    normalized = sorted(tuple(sorted(e)) for e in expected_edges)
    if g.n != n or g.edges != normalized:
        raise PreconditionError(f"graph does not match its family label {g.name!r}")


def _complete_drawing(g: Graph, n: int) -> Drawing:
    _check_family(g, [(i, j) for i in range(n) for j in range(i + 1, n)], n)
    slots = convex_positions(n)
    return Drawing(graph=g, positions={v: slots[v] for v in range(n)})


def _bipartite_rows_drawing(g: Graph, s: int, t: int) -> Drawing:
    _check_family(g, [(i, s + j) for i in range(s) for j in range(t)], s + t)
    positions = {i: Point(2 * i, 2) for i in range(s)}
    positions.update({s + j: Point(2 * j, 0) for j in range(t)})
    return Drawing(graph=g, positions=positions)


def _cycle_star_drawing(g: Graph, n: int) -> Drawing:
    _check_family(g, [(i, (i + 1) % n) for i in range(n)], n)
    slots = convex_positions(n)
    step = n // 2
    return Drawing(graph=g, positions={i: slots[(i * step) % n] for i in range(n)})


def _spread_directions(k: int) -> list[tuple[int, int]]:
    """k integer directions, pairwise non-parallel, roughly evenly spread."""
    import math

    base = [(2, 0), (-1, 2), (-1, -2), (0, 3), (3, 3), (-3, 1), (1, -3), (4, 1)]
    if k <= len(base):
        return base[:k]
    scale = 8 * k
    return [
        (
            round(scale * math.cos(2 * math.pi * i / k)),
            round(scale * math.sin(2 * math.pi * i / k)),
        )
        for i in range(k)
    ]


def _star_forest_all_crossing_drawing(g: Graph, k: int, s: int) -> Drawing:
    """Centers far out in spread directions, each star's leaves clustered
    just past the origin opposite its center, so that every pair of
    non-adjacent edges meets near the origin."""
    expected = []
    for i in range(k):
        for j in range(s):
            expected.append((i, k + i * s + j))
    _check_family(g, expected, k + k * s)

    directions = _spread_directions(k)
    target = epsilon(g)
    gap = s + 2  # distance of the leaf clusters past the origin
    for _ in range(8):
        radius = 64 * gap
        for _ in range(6):
            positions: dict[int, Point] = {}
            for i, (ux, uy) in enumerate(directions):
                positions[i] = Point(radius * ux, radius * uy)
                px, py = -uy, ux  # exact perpendicular
                for j in range(s):
                    off = j - (s - 1) // 2
                    positions[k + i * s + j] = Point(
                        -gap * ux + off * px, -gap * uy + off * py
                    )
            if len(set(positions.values())) == len(positions):
                d = Drawing(graph=g, positions=positions)
                if not validate_drawing(d) and count_crossings(d).count == target:
                    return d
            radius *= 2
        gap *= 2
    raise PreconditionError(f"all-crossing drawing construction failed for {g.name}")


def _gs_line_drawing(g: Graph, s: int) -> Drawing:
    """The adversarial drawing: subdividers in order on a line, corner
    vertices at generic points below it."""
    from .graphs import _gs_edges

    _check_family(g, _gs_edges(s), 3 * s + 3)
    span = 3 * s + 1
    for attempt in range(32):
        shift = attempt * 7
        positions = {
            0: Point(1 + shift, -(2 * span + 3)),
            1: Point(span + 2 * shift + 2, -(span + 5)),
            2: Point(-span - shift - 3, -(span + 4)),
        }
        for i in range(1, 3 * s + 1):
            positions[i + 2] = Point(i, 0)
        d = Drawing(graph=g, positions=positions)
        if not validate_drawing(d):
            return d
    raise PreconditionError(f"no generic corner placement found for {g.name}")
