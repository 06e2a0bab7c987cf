"""Corner bookkeeping for square and triangle containers.

A frame turns a container into a set of numbered corners together with an
*anchored scale*: the size of the smallest homothet anchored at that corner
(and lying inside the container's family) that reaches a given point.
"""

from ..geom import Square, TriDown, TriUp
from ..numeric import half

# square corners in the order S1..S4 of the quadrant split
TL, TR, BL, BR = 0, 1, 2, 3


class SquareFrame:
    kind = "square"

    def __init__(self, sq):
        self.box = sq
        x0, y0, s = sq.x0, sq.y0, sq.s
        self.size = s
        self.corner_xy = [(x0, y0 + s), (x0 + s, y0 + s), (x0, y0), (x0 + s, y0)]
        self.dirs = [(1, -1), (-1, -1), (1, 1), (-1, 1)]
        self.mid = (x0 + half(s), y0 + half(s))

    def scale(self, p, c):
        (cx, cy), (dx, dy) = self.corner_xy[c], self.dirs[c]
        return max(dx * (p.x - cx), dy * (p.y - cy))

    def along(self, p, c, axis):
        """Distance from corner c along one axis ('x' or 'y')."""
        (cx, cy), (dx, dy) = self.corner_xy[c], self.dirs[c]
        return dx * (p.x - cx) if axis == "x" else dy * (p.y - cy)

    def shape(self, c, h):
        (cx, cy), (dx, dy) = self.corner_xy[c], self.dirs[c]
        return Square(cx if dx > 0 else cx - h, cy if dy > 0 else cy - h, h)

    def shape_through(self, c, p):
        return self.shape(c, self.scale(p, c))

    def quadrant(self, p):
        # half-open cells: vertical line goes left, horizontal line goes down
        left = p.x <= self.mid[0]
        low = p.y <= self.mid[1]
        return (BL if left else BR) if low else (TL if left else TR)

    def quadrant_shape(self, q):
        return self.shape(q, half(self.size))

    @staticmethod
    def neighbours(q):
        """(horizontal neighbour, vertical neighbour) of quadrant q."""
        return {TL: (TR, BL), TR: (TL, BR), BL: (BR, TL), BR: (BL, TR)}[q]

    @staticmethod
    def axis_towards(q, c):
        return "x" if c == SquareFrame.neighbours(q)[0] else "y"

    def first_corner(self):
        return TL


class TriFrame:
    """Oriented view in which the container is ``{O_k >= lo_k}``.

    ``O = sign * (u, v, w)`` with ``sign = +1`` for upward containers and
    ``-1`` for downward ones, so both orientations look "upward" here.
    Corner k is the vertex opposite the side ``O_k = lo_k``.
    """

    kind = "theta"

    def __init__(self, tri):
        self.box = tri
        self.sign = 1 if isinstance(tri, TriUp) else -1
        self.lo = tuple(-t for t in tri.params())
        self.size = tri.size
        self.same_cls = TriUp if self.sign == 1 else TriDown
        self.opp_cls = TriDown if self.sign == 1 else TriUp

    def coords(self, p):
        u, v, w = p.cone
        if self.sign == 1:
            return u, v, w
        return -u, -v, -w

    def same(self, lo):
        return self.same_cls(*(-t for t in lo))

    def opposite(self, hi):
        return self.opp_cls(*hi)

    def scale(self, p, c):
        # height of the corner-c triangle reaching p
        return self.lo[c] + self.size - self.coords(p)[c]

    def shape(self, c, h):
        lo = list(self.lo)
        lo[c] = self.lo[c] + self.size - h
        return self.same(lo)

    def shape_through(self, c, p):
        lo = list(self.lo)
        lo[c] = self.coords(p)[c]
        return self.same(lo)

    def quadrant(self, p):
        """Corner index 0..2, or 3 for the inverted central triangle."""
        o = self.coords(p)
        h2 = half(self.size)
        for k in range(3):
            if o[k] - self.lo[k] >= h2:
                return k
        return 3

    def quadrant_shape(self, q):
        h2 = half(self.size)
        if q == 3:
            return self.opposite([t + h2 for t in self.lo])
        return self.shape(q, h2)

    def pair_shape(self, p, q):
        """Smallest same-orientation triangle through p and q."""
        a, b = self.coords(p), self.coords(q)
        return self.same([min(s, t) for s, t in zip(a, b)])

    def first_corner(self):
        return 0


def frame_for(container):
    if isinstance(container, Square):
        return SquareFrame(container)
    if isinstance(container, (TriUp, TriDown)):
        return TriFrame(container)
    raise TypeError(f"no frame for {container!r}")
