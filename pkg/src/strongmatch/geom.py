"""Points, homothets and the predicates everything else is built on.

Four homothet kinds are supported:

* ``Disk(cx, cy, r2)``  -- stored with the squared radius so exact inputs stay exact
* ``TriDown(a, b, c)``  -- ``{u <= a, v <= b, w <= c}``
* ``TriUp(a, b, c)``    -- ``{-u <= a, -v <= b, -w <= c}``
* ``Square(x0, y0, s)``

where ``u = y``, ``v = (-sqrt3 x - y)/2`` and ``w = (sqrt3 x - y)/2`` are the
cone functionals.  They sum to zero, so a downward triangle's height is
``a + b + c``, and each of them has a unit-length gradient.

Each homothet exposes ``size`` (a monotone area surrogate used for ordering:
r^2, height, side) and ``scale`` (r, height, side).
"""

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .numeric import EPS, SQRT3, half, is_exact, sqrt3_for, tol

KINDS = ("disk", "tri_down", "tri_up", "square")


class DegenerateInput(ValueError):
    pass


class UnsupportedComparison(TypeError):
    pass


@dataclass(frozen=True)
class Point:
    x: object
    y: object
    index: int = -1

    @cached_property
    def cone(self):
        return cone_coords(self)

    @property
    def exact(self):
        return is_exact(self.x)

    def __iter__(self):
        yield self.x
        yield self.y


def make_points(coords):
    return [Point(x, y, i) for i, (x, y) in enumerate(coords)]


def cone_coords(p):
    x, y = p.x, p.y
    r3 = sqrt3_for(x)
    u = y
    v = half(-r3 * x - y)
    w = half(r3 * x - y)
    return u, v, w


# -- homothets --------------------------------------------------------------

@dataclass(frozen=True)
class Disk:
    cx: object
    cy: object
    r2: object
    kind = "disk"

    @classmethod
    def from_radius(cls, cx, cy, r):
        return cls(cx, cy, r * r)

    @property
    def radius(self):
        return math.sqrt(float(self.r2))

    size = property(lambda self: self.r2)
    scale = property(lambda self: self.radius)

    def params(self):
        return (self.cx, self.cy, self.radius)


@dataclass(frozen=True)
class TriDown:
    a: object
    b: object
    c: object
    kind = "tri_down"

    @property
    def size(self):
        return self.a + self.b + self.c

    scale = size

    def params(self):
        return (self.a, self.b, self.c)

    def vertices_uvw(self):
        a, b, c = self.a, self.b, self.c
        return [(a, b, -a - b), (a, -a - c, c), (-b - c, b, c)]


@dataclass(frozen=True)
class TriUp:
    a: object
    b: object
    c: object
    kind = "tri_up"

    @property
    def size(self):
        return self.a + self.b + self.c

    scale = size

    def params(self):
        return (self.a, self.b, self.c)

    def vertices_uvw(self):
        a, b, c = self.a, self.b, self.c
        return [(-a, -b, a + b), (-a, a + c, -c), (b + c, -b, -c)]


@dataclass(frozen=True)
class Square:
    x0: object
    y0: object
    s: object
    kind = "square"

    size = property(lambda self: self.s)
    scale = size

    def params(self):
        return (self.x0, self.y0, self.s)

    def corners(self):
        x0, y0, s = self.x0, self.y0, self.s
        return [(x0, y0), (x0 + s, y0), (x0 + s, y0 + s), (x0, y0 + s)]


TRIANGLES = (TriDown, TriUp)


def uvw_to_xy(u, v, w):
    # y = u, w - v = sqrt3 x
    return float(w - v) / SQRT3, float(u)


def vertices_xy(h):
    if isinstance(h, Square):
        return [(float(a), float(b)) for a, b in h.corners()]
    if isinstance(h, TRIANGLES):
        return [uvw_to_xy(*t) for t in h.vertices_uvw()]
    raise UnsupportedComparison(f"{h.kind} has no vertices")


# -- constructors -----------------------------------------------------------

def _check_distinct(p, q):
    if p.x == q.x and p.y == q.y:
        raise DegenerateInput(f"coincident points {p.index} and {q.index}")


def square_family(p, q):
    """Smallest squares with p, q on opposite sides.

    Returns ``(axis, fixed0, s, lo, hi)``: the side ``s``, the fixed lower
    coordinate on the dominant axis and the closed interval ``[lo, hi]`` the
    free offset may slide over.  ``axis`` names the free coordinate.
    """
    _check_distinct(p, q)
    dx, dy = abs(p.x - q.x), abs(p.y - q.y)
    if dx >= dy:
        s = dx
        return "y", min(p.x, q.x), s, max(p.y, q.y) - s, min(p.y, q.y)
    s = dy
    return "x", min(p.y, q.y), s, max(p.x, q.x) - s, min(p.x, q.x)


def square_at(axis, fixed0, s, offset):
    if axis == "y":
        return Square(fixed0, offset, s)
    return Square(offset, fixed0, s)


def smallest_homothet(p, q, kind):
    _check_distinct(p, q)
    if kind == "disk":
        dx, dy = p.x - q.x, p.y - q.y
        return Disk(half(p.x + q.x), half(p.y + q.y), (dx * dx + dy * dy) / 4)
    if kind == "tri_down":
        cp, cq = p.cone, q.cone
        return TriDown(*(max(a, b) for a, b in zip(cp, cq)))
    if kind == "tri_up":
        cp, cq = p.cone, q.cone
        return TriUp(*(-min(a, b) for a, b in zip(cp, cq)))
    if kind == "square":
        axis, fixed0, s, lo, hi = square_family(p, q)
        return square_at(axis, fixed0, s, half(lo + hi))
    raise ValueError(f"unknown kind {kind!r}")


def size_between(p, q, kind):
    """Area surrogate of S(p, q) without building the homothet."""
    if kind == "disk":
        dx, dy = p.x - q.x, p.y - q.y
        return (dx * dx + dy * dy) / 4
    if kind == "tri_down" or kind == "tri_up":
        # both orientations have the same height
        return sum(max(a, b) for a, b in zip(p.cone, q.cone))
    if kind == "square":
        return max(abs(p.x - q.x), abs(p.y - q.y))
    raise ValueError(f"unknown kind {kind!r}")


# -- predicates -------------------------------------------------------------

def _le(a, b):
    return a <= b + tol(a, b)


def _lt(a, b):
    return a < b - tol(a, b)


def contains(h, p, mode="closed"):
    cmp = _le if mode == "closed" else _lt
    if isinstance(h, Square):
        return (cmp(h.x0, p.x) and cmp(p.x, h.x0 + h.s)
                and cmp(h.y0, p.y) and cmp(p.y, h.y0 + h.s))
    if isinstance(h, TriDown):
        u, v, w = p.cone
        return cmp(u, h.a) and cmp(v, h.b) and cmp(w, h.c)
    if isinstance(h, TriUp):
        u, v, w = p.cone
        return cmp(-u, h.a) and cmp(-v, h.b) and cmp(-w, h.c)
    if isinstance(h, Disk):
        dx, dy = p.x - h.cx, p.y - h.cy
        d2 = dx * dx + dy * dy
        if is_exact(d2) and is_exact(h.r2):
            return d2 <= h.r2 if mode == "closed" else d2 < h.r2
        return cmp(math.sqrt(float(d2)), h.radius)
    raise UnsupportedComparison(f"unknown homothet {h!r}")


def on_boundary(h, p):
    return contains(h, p, "closed") and not contains(h, p, "open")


def _disk_overlap(h1, h2, strict):
    dx, dy = h1.cx - h2.cx, h1.cy - h2.cy
    d2 = dx * dx + dy * dy
    if all(is_exact(t) for t in (d2, h1.r2, h2.r2)):
        # d <= r1 + r2  <=>  d2 - r1^2 - r2^2 <= 2 r1 r2
        k = d2 - h1.r2 - h2.r2
        rhs = 4 * h1.r2 * h2.r2
        if strict:
            return k < 0 or k * k < rhs
        return k <= 0 or k * k <= rhs
    d = math.sqrt(float(d2))
    rr = h1.radius + h2.radius
    return d < rr - EPS if strict else d <= rr + EPS


def _tri_mixed(down, up, cmp):
    lows = (-up.a, -up.b, -up.c)
    highs = (down.a, down.b, down.c)
    if not all(cmp(lo, hi) for lo, hi in zip(lows, highs)):
        return False
    return cmp(sum(lows), 0) and cmp(0, sum(highs))


def _overlap(h1, h2, strict):
    cmp = _lt if strict else _le
    if isinstance(h1, Disk) and isinstance(h2, Disk):
        if strict and (h1.r2 == 0 or h2.r2 == 0):
            return False
        return _disk_overlap(h1, h2, strict)
    if isinstance(h1, Square) and isinstance(h2, Square):
        return (cmp(h1.x0, h2.x0 + h2.s) and cmp(h2.x0, h1.x0 + h1.s)
                and cmp(h1.y0, h2.y0 + h2.s) and cmp(h2.y0, h1.y0 + h1.s))
    if isinstance(h1, TRIANGLES) and isinstance(h2, TRIANGLES):
        if type(h1) is type(h2):
            m = min(h1.a, h2.a) + min(h1.b, h2.b) + min(h1.c, h2.c)
            return cmp(0, m)
        if isinstance(h1, TriDown):
            return _tri_mixed(h1, h2, cmp)
        return _tri_mixed(h2, h1, cmp)
    raise UnsupportedComparison(f"cannot compare {h1.kind} with {h2.kind}")


def intersects(h1, h2):
    """Closed-set intersection."""
    return _overlap(h1, h2, strict=False)


def interiors_intersect(h1, h2):
    return _overlap(h1, h2, strict=True)


def within(h, container):
    """Whether homothet ``h`` lies inside ``container`` (closed)."""
    if isinstance(container, Square):
        if isinstance(h, Disk):
            r = h.radius
            pts = [(h.cx - r, h.cy - r), (h.cx + r, h.cy + r)]
        elif isinstance(h, Square):
            pts = [(h.x0, h.y0), (h.x0 + h.s, h.y0 + h.s)]
        else:
            pts = vertices_xy(h)
        return all(contains(container, Point(x, y)) for x, y in pts)
    if isinstance(container, TRIANGLES):
        sign = 1 if isinstance(container, TriDown) else -1
        bounds = container.params()
        if isinstance(h, TRIANGLES):
            verts = h.vertices_uvw()
        elif isinstance(h, Square):
            verts = [Point(x, y).cone for x, y in h.corners()]
        else:
            c = Point(h.cx, h.cy).cone
            r = h.radius
            return all(_le(sign * f + r, b) for f, b in zip(c, bounds))
        return all(_le(sign * f, b) for t in verts for f, b in zip(t, bounds))
    raise UnsupportedComparison(f"container kind {container.kind}")


def enclosing(points, kind):
    """Smallest container of the given kind holding every point."""
    if not points:
        raise DegenerateInput("no points to enclose")
    if kind == "square":
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        x0, y0 = min(xs), min(ys)
        return Square(x0, y0, max(max(xs) - x0, max(ys) - y0))
    cones = [p.cone for p in points]
    if kind == "tri_down":
        return TriDown(*(max(c[k] for c in cones) for k in range(3)))
    if kind == "tri_up":
        return TriUp(*(-min(c[k] for c in cones) for k in range(3)))
    raise ValueError(f"no enclosing container of kind {kind!r}")


# -- numpy fast paths (float mode only) -------------------------------------

class Coords:
    """Column arrays of a float point set, including the cone functionals."""

    def __init__(self, points):
        self.x = np.array([float(p.x) for p in points], dtype=float)
        self.y = np.array([float(p.y) for p in points], dtype=float)
        self.u = self.y
        self.v = (-SQRT3 * self.x - self.y) / 2
        self.w = (SQRT3 * self.x - self.y) / 2

    def __len__(self):
        return len(self.x)


def all_float(points):
    return all(not is_exact(p.x) and not is_exact(p.y) for p in points)


def contains_many(h, coords, mode="closed"):
    """Vectorised ``contains`` over a :class:`Coords` block."""
    e = EPS if mode == "closed" else -EPS
    if mode == "closed":
        le = lambda a, b: a <= b + e  # noqa: E731
    else:
        le = lambda a, b: a < b + e  # noqa: E731
    if isinstance(h, Square):
        x0, y0, s = float(h.x0), float(h.y0), float(h.s)
        return (le(x0, coords.x) & le(coords.x, x0 + s)
                & le(y0, coords.y) & le(coords.y, y0 + s))
    if isinstance(h, TriDown):
        return (le(coords.u, float(h.a)) & le(coords.v, float(h.b))
                & le(coords.w, float(h.c)))
    if isinstance(h, TriUp):
        return (le(-coords.u, float(h.a)) & le(-coords.v, float(h.b))
                & le(-coords.w, float(h.c)))
    if isinstance(h, Disk):
        d = np.hypot(coords.x - float(h.cx), coords.y - float(h.cy))
        return le(d, h.radius)
    raise UnsupportedComparison(f"unknown homothet {h!r}")


def pack(hs):
    """Stack same-kind homothet parameters into a 2-D float array."""
    kinds = {h.kind for h in hs}
    if len(kinds) > 1:
        raise UnsupportedComparison("pack needs a single kind")
    if not hs:
        return np.zeros((0, 3))
    rows = []
    for h in hs:
        if isinstance(h, Disk):
            rows.append((float(h.cx), float(h.cy), h.radius))
        else:
            rows.append(tuple(float(t) for t in h.params()))
    return np.array(rows, dtype=float)


def intersects_many(h, packed):
    """Closed intersection of ``h`` against a packed block of its own kind."""
    if len(packed) == 0:
        return np.zeros(0, dtype=bool)
    P = packed
    if isinstance(h, Disk):
        d = np.hypot(P[:, 0] - float(h.cx), P[:, 1] - float(h.cy))
        return d <= P[:, 2] + h.radius + EPS
    if isinstance(h, Square):
        x0, y0, s = (float(t) for t in h.params())
        return ((x0 <= P[:, 0] + P[:, 2] + EPS) & (P[:, 0] <= x0 + s + EPS)
                & (y0 <= P[:, 1] + P[:, 2] + EPS) & (P[:, 1] <= y0 + s + EPS))
    if isinstance(h, TRIANGLES):
        a, b, c = (float(t) for t in h.params())
        m = np.minimum(P[:, 0], a) + np.minimum(P[:, 1], b) + np.minimum(P[:, 2], c)
        return m >= -EPS
    raise UnsupportedComparison(f"unknown homothet {h!r}")


def pairwise_sizes(coords, kind):
    """Dense matrix of ``size_between`` for every pair (float mode)."""
    if kind == "disk":
        dx = coords.x[:, None] - coords.x[None, :]
        dy = coords.y[:, None] - coords.y[None, :]
        return (dx * dx + dy * dy) / 4
    if kind in ("tri_down", "tri_up"):
        out = np.zeros((len(coords), len(coords)))
        for f in (coords.u, coords.v, coords.w):
            out += np.maximum(f[:, None], f[None, :])
        return out
    if kind == "square":
        dx = np.abs(coords.x[:, None] - coords.x[None, :])
        dy = np.abs(coords.y[:, None] - coords.y[None, :])
        return np.maximum(dx, dy)
    raise ValueError(f"unknown kind {kind!r}")


# -- general position -------------------------------------------------------

@dataclass
class GeneralPositionReport:
    mode: str
    violations: list

    @property
    def ok(self):
        return not self.violations


MODES = {"disk": "disk", "triangle": "triangle", "tri_down": "triangle",
         "tri_up": "triangle", "theta6": "triangle", "square": "square"}


def _near(a, b):
    return abs(a - b) <= tol(a, b)


def check_general_position(points, mode):
    mode = MODES[mode]
    found = set()
    n = len(points)
    pairs = combinations(range(n), 2)
    if all_float(points) and n > 1:
        # only pairs that come within EPS in some tested coordinate can violate
        C = Coords(points)
        cols = (C.x, C.y, C.u, C.v, C.w)
        near = np.zeros((n, n), dtype=bool)
        for col in cols:
            near |= np.abs(col[:, None] - col[None, :]) <= EPS
        near = np.triu(near, 1)
        pairs = zip(*(a.tolist() for a in np.nonzero(near)))
    for i, j in pairs:
        p, q = points[i], points[j]
        if p.x == q.x and p.y == q.y:
            found.add(((i, j), "coincident"))
            continue
        if mode == "triangle":
            for name, a, b in zip(("0deg", "120deg", "60deg"), p.cone, q.cone):
                if _near(a, b):
                    found.add(((i, j), name))
        elif mode == "square":
            if _near(p.x, q.x):
                found.add(((i, j), "equal-x"))
            if _near(p.y, q.y):
                found.add(((i, j), "equal-y"))
    if mode in ("disk", "square"):
        for i, j, others in _cobounded(points, mode):
            for k, l in combinations(others, 2):
                found.add((tuple(sorted((i, j, k, l))), "four-on-boundary"))
    return GeneralPositionReport(mode, sorted(found))


def _cobounded(points, mode):
    """Yield pairs whose canonical smallest shape has 2+ extra boundary points."""
    n = len(points)
    kind = "disk" if mode == "disk" else "square"
    if all_float(points) and n > 2:
        C = Coords(points)
        for i in range(n - 1):
            js = np.arange(i + 1, n)
            band = _boundary_band(C, i, js, mode)
            band[:, i] = False
            band[np.arange(len(js)), js] = False
            for row in np.nonzero(band.sum(axis=1) >= 2)[0]:
                yield i, int(js[row]), [int(k) for k in np.nonzero(band[row])[0]]
        return
    for i, j in combinations(range(n), 2):
        p, q = points[i], points[j]
        if p.x == q.x and p.y == q.y:
            continue
        h = smallest_homothet(p, q, kind)
        others = [k for k in range(n) if k not in (i, j) and on_boundary(h, points[k])]
        if len(others) >= 2:
            yield i, j, others


def _boundary_band(C, i, js, mode):
    """Rows: pairs (i, j); columns: points on the pair's canonical boundary."""
    xi, yi = C.x[i], C.y[i]
    xj, yj = C.x[js], C.y[js]
    if mode == "disk":
        # k is on the circle with diameter ij iff (k - i).(k - j) = d^2 - r^2 = 0;
        # |d - r| <= EPS becomes |d^2 - r^2| <= EPS (2r + EPS) to first order
        bx, by = C.x - xi, C.y - yi
        a = bx * C.x + by * C.y
        dot = a[None, :] - np.outer(xj, bx) - np.outer(yj, by)
        r = np.hypot(xi - xj, yi - yj) / 2
        return np.abs(dot) <= (EPS * (2 * r + EPS))[:, None]
    dx, dy = np.abs(xi - xj), np.abs(yi - yj)
    s = np.maximum(dx, dy)
    lo_x, lo_y = np.minimum(xi, xj), np.minimum(yi, yj)
    hi_x, hi_y = np.maximum(xi, xj), np.maximum(yi, yj)
    ymid = (hi_y - s + lo_y) / 2
    xmid = (hi_x - s + lo_x) / 2
    x0 = np.where(dx >= dy, lo_x, xmid)[:, None]
    y0 = np.where(dx >= dy, ymid, lo_y)[:, None]
    s = s[:, None]
    X, Y = C.x[None, :], C.y[None, :]
    closed = (X >= x0 - EPS) & (X <= x0 + s + EPS) & (Y >= y0 - EPS) & (Y <= y0 + s + EPS)
    inner = (X > x0 + EPS) & (X < x0 + s - EPS) & (Y > y0 + EPS) & (Y < y0 + s - EPS)
    return closed & ~inner
