"""Empty-shape graphs G_S(P) for disks, both triangle orientations, theta-six
and squares.

Every builder returns a :class:`ShapeGraph` whose edges are sorted by
``(i, j)`` and carry a representative homothet with both endpoints on its
boundary and no other point in its interior.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .geom import (Coords, all_float, contains, contains_many, smallest_homothet,
                   square_at, square_family)
from .numeric import EPS, half, tol


class Edge(NamedTuple):
    i: int
    j: int
    weight: object
    rep: object


@dataclass
class ShapeGraph:
    kind: str
    points: list
    edges: list
    alternatives: dict = field(default_factory=dict)

    def edge_set(self):
        return {(e.i, e.j) for e in self.edges}

    def __len__(self):
        return len(self.edges)


def _blocked(h, points, i, j, coords=None):
    if coords is not None:
        inside = contains_many(h, coords, "open")
        inside[[i, j]] = False
        return bool(inside.any())
    return any(contains(h, p, "open") for k, p in enumerate(points) if k not in (i, j))


def empty_pairs(points, kind):
    """Brute force: pairs (i, j) whose smallest homothet has an empty interior."""
    coords = Coords(points) if all_float(points) else None
    out = []
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            h = smallest_homothet(points[i], points[j], kind)
            if not _blocked(h, points, i, j, coords):
                out.append(Edge(i, j, h.scale, h))
    return out


def build_gabriel(points):
    return ShapeGraph("disk", list(points), empty_pairs(points, "disk"))


def _cone_edges(points, upward):
    # For the cone of functional f, q lies in p's cone when the other two
    # functionals both drop (downward triangles) or both rise (upward ones);
    # the nearest q minimises |f(q) - f(p)|.
    sign = -1 if upward else 1
    found = set()
    cones = [p.cone for p in points]
    n = len(points)
    for a in range(n):
        ca = cones[a]
        for f in range(3):
            g, h = (f + 1) % 3, (f + 2) % 3
            best = None
            for b in range(n):
                if b == a:
                    continue
                cb = cones[b]
                if sign * (cb[g] - ca[g]) < 0 and sign * (cb[h] - ca[h]) < 0:
                    key = (sign * (cb[f] - ca[f]), b)
                    if best is None or key < best:
                        best = key
            if best is not None:
                found.add((min(a, best[1]), max(a, best[1])))
    kind = "tri_up" if upward else "tri_down"
    edges = []
    for i, j in sorted(found):
        h = smallest_homothet(points[i], points[j], kind)
        edges.append(Edge(i, j, h.scale, h))
    return edges


def build_tri_down(points):
    return ShapeGraph("tri_down", list(points), _cone_edges(points, upward=False))


def build_tri_up(points):
    return ShapeGraph("tri_up", list(points), _cone_edges(points, upward=True))


def build_theta_six(points):
    down = {(e.i, e.j): e for e in _cone_edges(points, upward=False)}
    up = {(e.i, e.j): e for e in _cone_edges(points, upward=True)}
    edges, alts = [], {}
    for key in sorted(set(down) | set(up)):
        options = [e for e in (down.get(key), up.get(key)) if e is not None]
        # both orientations share a height; prefer the downward one on ties
        best = min(options, key=lambda e: e.rep.size)
        edges.append(best)
        alts[key] = tuple(e.rep for e in options)
    return ShapeGraph("theta6", list(points), edges, alts)


def free_offsets(points, i, j):
    """Surviving offsets of the smallest-square family of (i, j).

    Returns ``(axis, fixed0, s, segments)`` where ``segments`` is the sorted
    list of closed intervals of the free offset whose square has an empty
    interior.
    """
    p, q = points[i], points[j]
    axis, fixed0, s, lo, hi = square_family(p, q)
    cuts = []
    for k, r in enumerate(points):
        if k in (i, j):
            continue
        fix, free = (r.x, r.y) if axis == "y" else (r.y, r.x)
        e = tol(fix, s)
        if fixed0 + e < fix < fixed0 + s - e:
            # r is interior exactly when the offset is in (free - s, free); the
            # cut keeps surviving offsets e/2 clear of the tolerance band so
            # later EPS tests cannot round r into the interior
            cuts.append((free - s + e / 2, free - e / 2))
    return axis, fixed0, s, _subtract(lo, hi, cuts)


def _subtract(lo, hi, cuts):
    """Closed interval [lo, hi] minus a union of open intervals."""
    segments = []
    cur = lo
    for a, b in sorted(c for c in cuts if c[0] < c[1]):
        if b <= cur:
            continue
        if a >= cur:
            if a > hi:
                break
            segments.append((cur, a))
        cur = max(cur, b)
        if cur > hi:
            break
    if cur <= hi:
        segments.append((cur, hi))
    return segments


def empty_square(points, i, j):
    """Smallest square through (i, j) with an empty interior, or None.

    Uses the canonical (middle) placement when it survives, otherwise the
    middle of the surviving interval nearest to it.
    """
    axis, fixed0, s, segments = free_offsets(points, i, j)
    if not segments:
        return None
    lo, hi = square_family(points[i], points[j])[3:]
    mid = half(lo + hi)
    a, b = min(segments, key=lambda seg: max(seg[0] - mid, mid - seg[1], 0))
    if a <= mid <= b:
        return square_at(axis, fixed0, s, mid)
    return square_at(axis, fixed0, s, half(a + b))


def build_linf_delaunay(points):
    edges = []
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            h = empty_square(points, i, j)
            if h is not None:
                edges.append(Edge(i, j, h.s, h))
    return ShapeGraph("square", list(points), edges)


BUILDERS = {
    "disk": build_gabriel,
    "tri_down": build_tri_down,
    "tri_up": build_tri_up,
    "theta6": build_theta_six,
    "square": build_linf_delaunay,
}


def build(points, kind):
    return BUILDERS[kind](points)


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def proper_crossings(graph):
    """Pairs of edges whose segments cross at a point interior to both."""
    pts = [(float(p.x), float(p.y)) for p in graph.points]
    segs = [(e.i, e.j) for e in graph.edges]
    bad = []
    for k, (a, b) in enumerate(segs):
        for c, d in segs[k + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            o1 = _orient(pts[a], pts[b], pts[c])
            o2 = _orient(pts[a], pts[b], pts[d])
            o3 = _orient(pts[c], pts[d], pts[a])
            o4 = _orient(pts[c], pts[d], pts[b])
            if o1 * o2 < -EPS * EPS and o3 * o4 < -EPS * EPS:
                bad.append(((a, b), (c, d)))
    return bad
