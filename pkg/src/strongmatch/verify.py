"""Independent certification of strong matchings, a brute-force maximum
strong matching oracle for tiny inputs, and the required-size table."""

from dataclasses import dataclass, field
from itertools import combinations, product

from .geom import (Coords, all_float, contains, contains_many, interiors_intersect,
                   intersects, smallest_homothet, square_at, within)
from .graphs import free_offsets
from .greedy import Pair, StrongMatching
from .numeric import EPS

ORACLE_CAP = 8


@dataclass
class Certificate:
    failures: list = field(default_factory=list)
    contacts: int = 0

    @property
    def verdict(self):
        return "pass" if not self.failures else "fail"

    @property
    def ok(self):
        return not self.failures


def verify_strong(points, matching, mode=None, container=None, exact_occupancy=False):
    """Check a matching against the definition of a strong matching.

    Checks, in order: (a) vertex-disjoint pairs, (b) endpoints on the
    closed boundary, (c) empty open interior, (d) pairwise disjointness
    (``strict``: closed sets share nothing; ``interior``: open sets share
    nothing), (e) containment in ``container`` when given, and optionally
    (f) each shape holds exactly its two points.
    """
    mode = mode or matching.mode
    cert = Certificate()
    n = len(points)
    coords = Coords(points) if all_float(points) and n else None
    seen = {}
    for pair in matching.pairs:
        for v in (pair.i, pair.j):
            if not 0 <= v < n:
                cert.failures.append(("index", (v,)))
            elif v in seen:
                cert.failures.append(("vertex-disjoint", (seen[v], v)))
            seen[v] = v
    if cert.failures:
        return cert
    for pair in matching.pairs:
        h = pair.rep
        ends = (points[pair.i], points[pair.j])
        if not all(contains(h, p, "closed") and not contains(h, p, "open") for p in ends):
            cert.failures.append(("boundary", (pair.i, pair.j)))
        if coords is not None:
            inner = contains_many(h, coords, "open")
            closed = contains_many(h, coords, "closed")
            inner[[pair.i, pair.j]] = False
            closed[[pair.i, pair.j]] = False
            blockers = [int(k) for k in inner.nonzero()[0]]
            extra = [int(k) for k in closed.nonzero()[0]]
        else:
            others = [k for k in range(n) if k not in (pair.i, pair.j)]
            blockers = [k for k in others if contains(h, points[k], "open")]
            extra = [k for k in others if contains(h, points[k], "closed")]
        if blockers:
            cert.failures.append(("empty-interior", (pair.i, pair.j, *blockers)))
        if exact_occupancy and extra:
            cert.failures.append(("exact-occupancy", (pair.i, pair.j, *extra)))
        if container is not None and not within(h, container):
            cert.failures.append(("container", (pair.i, pair.j)))
    for a, b in combinations(matching.pairs, 2):
        touching = intersects(a.rep, b.rep)
        if not touching:
            continue
        if interiors_intersect(a.rep, b.rep):
            cert.failures.append(("disjoint", (a.i, a.j, b.i, b.j)))
        elif mode == "strict":
            cert.failures.append(("disjoint", (a.i, a.j, b.i, b.j)))
        else:
            cert.contacts += 1
    return cert


# -- required sizes ---------------------------------------------------------

_DIVISORS = {
    ("greedy", "disk"): 17,
    ("greedy", "tri_down"): 9,
    ("greedy", "tri_up"): 9,
    ("recursive", "theta6"): 4,
    ("recursive", "square"): 4,
}
_DEFAULT_ENGINE = {"disk": "greedy", "tri_down": "greedy", "tri_up": "greedy",
                   "theta6": "recursive", "square": "recursive"}


def ceil_div(a, b):
    return -(-a // b)


def check_bound(n, shape, algorithm=None):
    """Guaranteed matching size, or None when no guarantee is tabulated."""
    algorithm = algorithm or _DEFAULT_ENGINE[shape]
    k = _DIVISORS.get((algorithm, shape))
    if k is None:
        return None
    return ceil_div(max(n - 1, 0), k)


def greedy_bound(n, inf):
    """Size promised by the greedy analysis for a measured influence number."""
    return ceil_div(max(n - 1, 0), inf) if inf else 0


# -- oracle -----------------------------------------------------------------

def _matchings(vertices, size):
    """All matchings with ``size`` pairs on the sorted vertex list."""
    if size == 0:
        yield []
        return
    if len(vertices) < 2 * size:
        return
    first, rest = vertices[0], vertices[1:]
    # first vertex unmatched
    yield from _matchings(rest, size)
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in _matchings(remaining, size - 1):
            yield [(first, other)] + m


def _empty(h, points, i, j):
    return not any(contains(h, p, "open") for k, p in enumerate(points) if k not in (i, j))


def oracle_max_strong(points, kind, cap=ORACLE_CAP):
    """Exhaustive maximum strong matching; returns ``(size, witness)``."""
    n = len(points)
    if n > cap:
        raise ValueError(f"oracle is capped at n <= {cap}, got {n}")
    options = {}
    for i, j in combinations(range(n), 2):
        options[(i, j)] = _options(points, i, j, kind)
    usable = [e for e, opt in options.items() if opt]
    vertices = sorted({v for e in usable for v in e})
    for size in range(n // 2, 0, -1):
        for m in _matchings(vertices, size):
            if not all(options[e] for e in m):
                continue
            reps = _realise(points, m, options, kind)
            if reps is not None:
                pairs = [Pair(i, j, h) for (i, j), h in zip(m, reps)]
                return size, StrongMatching(kind, pairs, "strict")
    return 0, StrongMatching(kind, [], "strict")


def _options(points, i, j, kind):
    p, q = points[i], points[j]
    if kind == "square":
        fam = free_offsets(points, i, j)
        return fam if fam[3] else None
    kinds = ("tri_down", "tri_up") if kind == "theta6" else (kind,)
    out = []
    for k in kinds:
        h = smallest_homothet(p, q, k)
        if _empty(h, points, i, j):
            out.append(h)
    return out


def _realise(points, m, options, kind):
    if kind != "square":
        for choice in product(*(options[e] for e in m)):
            if all(not intersects(a, b) for a, b in combinations(choice, 2)):
                return list(choice)
        return None
    return _realise_squares([options[e] for e in m])


# Square placements: every edge owns one free offset t.  Emptiness confines
# t to a union of closed segments; strict disjointness of two squares is a
# disjunction of one-variable bounds or of difference constraints
# t_f - t_e >= c.  Each choice of disjuncts and segments is a difference
# system, feasible iff its constraint graph has no negative cycle.

GAP = 2 * EPS


def _realise_squares(fams):
    k = len(fams)
    pair_choices = []
    for a, b in combinations(range(k), 2):
        opts = _pair_options(fams[a], fams[b], a, b)
        if opts is None:
            continue
        pair_choices.append(opts)
    seg_choices = [fam[3] for fam in fams]
    for segs in product(*seg_choices):
        for picks in product(*pair_choices):
            t = _solve(k, segs, picks)
            if t is not None:
                return [square_at(f[0], f[1], f[2], v) for f, v in zip(fams, t)]
    return None


def _pair_options(fa, fb, a, b):
    """Disjuncts keeping squares a and b strictly apart, or None if always apart."""
    axa, fixa, sa = fa[0], fa[1], fa[2]
    axb, fixb, sb = fb[0], fb[1], fb[2]
    if axa == axb:
        if fixa + sa + EPS < fixb or fixb + sb + EPS < fixa:
            return None
        # a below b: t_b - t_a >= sa + gap; or b below a
        return [("diff", a, b, sa + GAP), ("diff", b, a, sb + GAP)]
    # a's free axis is b's fixed axis and vice versa
    return [("upper", a, fixb - sa - GAP), ("lower", a, fixb + sb + GAP),
            ("upper", b, fixa - sb - GAP), ("lower", b, fixa + sa + GAP)]


def _solve(k, segs, picks):
    lo = [s[0] for s in segs]
    hi = [s[1] for s in segs]
    diffs = []
    for pick in picks:
        if pick[0] == "upper":
            hi[pick[1]] = min(hi[pick[1]], pick[2])
        elif pick[0] == "lower":
            lo[pick[1]] = max(lo[pick[1]], pick[2])
        else:
            diffs.append(pick[1:])
    if any(l > h for l, h in zip(lo, hi)):
        return None
    # Bellman-Ford on x_v - x_u <= w; node k is the zero reference
    INF = float("inf")
    edges = []
    for v in range(k):
        edges.append((k, v, hi[v]))
        edges.append((v, k, -lo[v]))
    for a, b, c in diffs:
        # t_b - t_a >= c  <=>  t_a - t_b <= -c
        edges.append((b, a, -c))
    dist = [INF] * k + [0.0]
    for _ in range(k + 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w < dist[v] - 1e-15:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    else:
        return None
    return [d - dist[k] for d in dist[:k]]
