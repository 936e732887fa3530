"""Exact integer-coordinate primitives.

Everything here is computed in exact integer (or integer-ratio) arithmetic;
there is no floating point anywhere on the crossing-counting path.  All
coordinates are capped at |c| <= 2**40 so that every 3-point orientation
determinant stays far below Python's fast small-int paths and fits 128-bit
intermediates in any future native port.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CapExceededError,
    DegenerateInputError,
    InternalInvariantError,
    InvalidParameterError,
)

COORD_CAP = 1 << 40


class Point(NamedTuple):
    x: int
    y: int


class Segment(NamedTuple):
    a: Point
    b: Point


def check_point(p: Point) -> None:
    """Raise CapExceededError if a coordinate is out of range or non-integer."""
    if not isinstance(p[0], int) or not isinstance(p[1], int):
        raise CapExceededError(f"coordinates must be integers, got {p!r}")
    if abs(p[0]) > COORD_CAP or abs(p[1]) > COORD_CAP:
        raise CapExceededError(f"coordinate exceeds cap 2**40: {p!r}")


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p).

    +1 for a counterclockwise turn, -1 for clockwise, 0 iff collinear.
    """
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def point_in_open_segment(p: Point, s: Segment) -> bool:
    """True iff p lies strictly between the endpoints of s on their line."""
    a, b = s
    if orient(a, b, p) != 0:
        return False
    if p == a or p == b:
        return False
    # p is on the line; strictly between iff it is on the a-side of b and
    # the b-side of a (both dot products positive).
    ab = (b[0] - a[0], b[1] - a[1])
    ap = (p[0] - a[0], p[1] - a[1])
    bp = (p[0] - b[0], p[1] - b[1])
    return ap[0] * ab[0] + ap[1] * ab[1] > 0 and bp[0] * ab[0] + bp[1] * ab[1] < 0


def _collinear_overlap(s1: Segment, s2: Segment) -> bool:
    """True iff the two segments lie on one line and share more than a point."""
    a, b = s1
    c, d = s2
    if orient(a, b, c) != 0 or orient(a, b, d) != 0:
        return False
    # All four points collinear: compare intervals along the dominant axis.
    axis = 0 if a[0] != b[0] else 1
    lo1, hi1 = sorted((a[axis], b[axis]))
    lo2, hi2 = sorted((c[axis], d[axis]))
    return max(lo1, lo2) < min(hi1, hi2)


def properly_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the open segments share exactly one interior point.

    Segments sharing an endpoint never properly cross.  A collinear overlap
    of positive length raises DegenerateInputError: it signals that the
    containing drawing violates general position.
    """
    a, b = s1
    c, d = s2
    if a == c or a == d or b == c or b == d:
        if _collinear_overlap(s1, s2):
            raise DegenerateInputError(
                f"collinear overlapping segments: {s1} and {s2}"
            )
        return False
    if _collinear_overlap(s1, s2):
        raise DegenerateInputError(f"collinear overlapping segments: {s1} and {s2}")
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def convex_positions(n: int) -> list[Point]:
    """n distinct integer points in strictly convex position, in cyclic order.

    The points sit on a scaled parabola, so two chords cross iff their index
    pairs interleave in cyclic order -- the same combinatorics as points on
    a circle, but exact on the integer grid.  The 8n scale keeps every
    point at distance >= 4 from every chord it is not an endpoint of, which
    leaves room for integer-coordinate shrink moves later.
    """
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    scale = 8 * n
    if scale * (n - 1) * (n - 1) > COORD_CAP:
        raise CapExceededError(f"convex_positions({n}) exceeds the coordinate cap")
    return [Point(scale * i, scale * i * i) for i in range(n)]


def circle_positions(n: int, radius: int | None = None) -> list[Point]:
    """n integer points approximating a circle, in strictly convex position.

    Used for display-friendly reference layouts.  Rounding can spoil strict
    convexity at small radii, so the radius is doubled until every
    consecutive triple makes a strict left turn.
    """
    import math

    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    if n == 1:
        return [Point(0, 0)]
    if n == 2:
        return [Point(0, 0), Point(4, 0)]
    r = radius if radius is not None else max(8, 4 * n)
    while r <= COORD_CAP:
        pts = [
            Point(
                round(r * math.cos(2 * math.pi * k / n)),
                round(r * math.sin(2 * math.pi * k / n)),
            )
            for k in range(n)
        ]
        if len(set(pts)) == n and all(
            orient(pts[k], pts[(k + 1) % n], pts[(k + 2) % n]) > 0 for k in range(n)
        ):
            return pts
        r *= 2
    raise CapExceededError(f"no convex integer circle with {n} points under the cap")


def apex_points(z: Sequence[Point]) -> tuple[Point, Point]:
    """Two points x (above) and y (below) every line through two points of z.

    The segments joining x or y to the points of z are then pairwise
    non-crossing and contain no point of z in their interiors.  Construction:
    pick the direction d = (1, M + 1) with M at least the absolute slope of
    every line through two points of z (so d is parallel to none of them),
    then walk far enough along +d and -d from z[0] to clear every line.
    All arithmetic is integral, so no rounding step is needed.
    """
    pts = list(z)
    if not pts:
        raise InvalidParameterError("apex_points requires a non-empty point set")
    if len(set(pts)) != len(pts):
        raise InvalidParameterError("apex_points requires distinct points")
    for p in pts:
        check_point(p)
    if len(pts) == 1:
        p = pts[0]
        up, down = Point(p.x, p.y + 1), Point(p.x, p.y - 1)
        check_point(up)
        check_point(down)
        return up, down

    slope_bound = 0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dx = pts[j].x - pts[i].x
            dy = pts[j].y - pts[i].y
            if dx != 0:
                slope_bound = max(slope_bound, -(-abs(dy) // abs(dx)))
    d = (1, slope_bound + 1)

    base = pts[0]
    t = 1
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dx = pts[j].x - pts[i].x
            dy = pts[j].y - pts[i].y
            cross_d = dx * d[1] - dy * d[0]
            if cross_d == 0:
                raise InternalInvariantError("apex direction parallel to a z-line")
            f0 = dx * (base.y - pts[i].y) - dy * (base.x - pts[i].x)
            t = max(t, abs(f0) // abs(cross_d) + 1)

    above = Point(base.x + t * d[0], base.y + t * d[1])
    below = Point(base.x - t * d[0], base.y - t * d[1])
    try:
        check_point(above)
        check_point(below)
    except CapExceededError as exc:
        raise CapExceededError(
            "apex coordinates exceed the cap; rescale the input points"
        ) from exc
    return above, below


def apexes_clear(z: Iterable[Point], above: Point, below: Point) -> bool:
    """Checker for the two-apex property, by exhaustive pairwise tests."""
    pts = list(z)
    segs = [Segment(above, p) for p in pts] + [Segment(below, p) for p in pts]
    if above == below or above in pts or below in pts:
        return False
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            try:
                if properly_cross(segs[i], segs[j]):
                    return False
            except DegenerateInputError:
                return False
    for s in segs:
        if any(point_in_open_segment(p, s) for p in pts):
            return False
    return True
