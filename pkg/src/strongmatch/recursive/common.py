"""Shared machinery of the recursive engines: anchored shapes, the base
case and the region checks run at every internal node."""

from collections import Counter
from dataclasses import dataclass, field

from ..geom import Square, contains, interiors_intersect, square_family
from ..greedy import Pair, StrongMatching
from .frames import frame_for


class ProofStepFailed(AssertionError):
    """A step the construction guarantees did not hold."""


def bound(k):
    """ceil((k - 1) / 4), with 0 for k <= 1."""
    return (k + 2) // 4 if k > 0 else 0


@dataclass
class AnchoredShape:
    container: object
    corner: int
    mode: str
    x: int
    shape: object
    members: list
    scale: object
    boundary_point: object = None

    @property
    def empty(self):
        return not self.members


def anchor(frame, corner, inside, outside, mode, x):
    """Anchored shrink/grow on explicit point lists.

    ``inside`` are the points of the region being shrunk or grown,
    ``outside`` the other candidates a grow may pull in.  Ties in anchored
    scale fall back to the point index.
    """
    key = lambda p: (frame.scale(p, corner), p.index)  # noqa: E731
    if mode == "shrink":
        order = sorted(inside, key=key)
        k = len(order) - x
        if k <= 0:
            return AnchoredShape(frame.box, corner, mode, x, frame.shape(corner, 0 * frame.size),
                                 [], 0 * frame.size)
        p = order[k - 1]
        return AnchoredShape(frame.box, corner, mode, x, frame.shape_through(corner, p),
                             order[:k], frame.scale(p, corner), p)
    if mode == "grow":
        order = sorted(outside, key=key)
        if len(order) < x:
            raise ValueError(f"cannot grow by {x}: only {len(order)} points available")
        if x == 0:
            return AnchoredShape(frame.box, corner, mode, x, frame.box, list(inside), frame.size)
        p = order[x - 1]
        return AnchoredShape(frame.box, corner, mode, x, frame.shape_through(corner, p),
                             list(inside) + order[:x], frame.scale(p, corner), p)
    raise ValueError(f"unknown anchoring mode {mode!r}")


def anchored_homothet(points, container, corner, mode, x):
    """Anchored shrink (exclude ``x`` points) or grow (include ``x`` more)
    of ``container`` at one of its corners, over the global point list."""
    frame = frame_for(container)
    inside = [p for p in points if contains(container, p)]
    ids = {p.index for p in inside}
    outside = [p for p in points if p.index not in ids]
    if mode == "grow":
        # only points the grown shape can reach
        outside = [p for p in outside if frame.scale(p, corner) >= frame.size]
    return anchor(frame, corner, inside, outside, mode, x)


def pair_homothet(frame, region, p, q):
    """Smallest homothet of the pair placed inside ``region``."""
    if isinstance(region, Square):
        axis, fixed0, s, lo, hi = square_family(p, q)
        r_lo = region.y0 if axis == "y" else region.x0
        # nonempty up to rounding: the pair's extent fits in the region
        a, b = max(lo, r_lo), min(hi, r_lo + region.s - s)
        t = (a + b) / 2
        return Square(fixed0, t, s) if axis == "y" else Square(t, fixed0, s)
    return frame_for(region).pair_shape(p, q)


def base_case(frame, pts, coverage):
    """Shrink at the first corner until two points remain and match them."""
    if len(pts) < 2:
        raise ValueError("base case needs at least two points")
    c = frame.first_corner()
    shrunk = anchor(frame, c, pts, [], "shrink", len(pts) - 2)
    p, q = sorted(shrunk.members, key=lambda t: t.index)
    coverage[f"{frame.kind}.base"] += 1
    return Pair(p.index, q.index, pair_homothet(frame, shrunk.shape, p, q))


def base_case_pair(points, container):
    if not 2 <= len(points) <= 5:
        raise ValueError("base case handles 2 to 5 points")
    for p in points:
        if not contains(container, p):
            raise ValueError(f"point {p.index} lies outside the container")
    pair = base_case(frame_for(container), list(points), Counter())
    kind = "square" if isinstance(container, Square) else "theta6"
    return StrongMatching(kind, [pair], "interior", container)


@dataclass
class Region:
    name: str
    shape: object
    members: list = field(default_factory=list)


def check_regions(regions, n, m, label):
    """Assert the guarantees every internal node relies on."""
    seen = set()
    for r in regions:
        ids = {p.index for p in r.members}
        if ids & seen:
            raise ProofStepFailed(f"{label}: region {r.name} reuses points {sorted(ids & seen)}")
        seen |= ids
        # a quadrant may keep every point; it is still a smaller container
        if n is not None and len(r.members) >= n:
            raise ProofStepFailed(f"{label}: region {r.name} does not shrink the problem")
    live = [r for r in regions if len(r.members) >= 2]
    for k, a in enumerate(live):
        for b in live[k + 1:]:
            if interiors_intersect(a.shape, b.shape):
                raise ProofStepFailed(f"{label}: regions {a.name} and {b.name} overlap")
    total = sum(bound(len(r.members)) for r in regions)
    if total < m + 1:
        raise ProofStepFailed(f"{label}: regions promise {total} pairs, need {m + 1}")


class Engine:
    """Recursion skeleton shared by both shapes; subclasses supply split()."""

    kind = None
    frame_kind = None

    def __init__(self, points, coverage=None):
        self.points = list(points)
        self.coverage = coverage if coverage is not None else Counter()

    def run(self, container):
        for p in self.points:
            if not contains(container, p):
                raise ValueError(f"point {p.index} lies outside the container")
        pairs = self.solve(self.points, container)
        pairs.sort(key=lambda t: (t.i, t.j))
        return StrongMatching(self.kind, pairs, "interior", container,
                              info={"coverage": self.coverage})

    def solve(self, pts, container):
        n = len(pts)
        if n <= 1:
            return []
        frame = frame_for(container)
        if n <= 5:
            return [base_case(frame, pts, self.coverage)]
        if n % 4 != 2:
            # drop the farthest point from the first corner and recurse
            self.coverage[f"{self.frame_kind}.drop"] += 1
            shrunk = anchor(frame, frame.first_corner(), pts, [], "shrink", 1)
            return self.solve(shrunk.members, shrunk.shape)
        m = (n - 2) // 4
        regions = self.split(frame, pts, m)
        out = []
        for r in regions:
            if len(r.members) >= 2:
                out.extend(self.solve(r.members, r.shape))
        return out

    def quadrants(self, frame, pts, count):
        cells = [[] for _ in range(count)]
        for p in pts:
            cells[frame.quadrant(p)].append(p)
        return cells
