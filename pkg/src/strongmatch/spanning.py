"""Minimum spanning trees of the complete area-weighted graph and the
quantities the greedy engine is analysed with: influence sets, the influence
number, edge degrees and minimal edges.

Edges are totally ordered by ``(size, i, j)`` so the tree is unique.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .geom import (Coords, all_float, intersects, intersects_many,
                   pack, pairwise_sizes, size_between, smallest_homothet)
from .graphs import empty_square


class TreeEdge(NamedTuple):
    i: int
    j: int
    weight: object
    rep: object

    @property
    def key(self):
        return (self.rep.size, self.i, self.j)

    @property
    def pair(self):
        return (self.i, self.j)


@dataclass
class SpanningTree:
    kind: str
    points: list
    edges: list  # sorted by key

    def __len__(self):
        return len(self.edges)

    def find(self, e):
        pair = (min(e[0], e[1]), max(e[0], e[1]))
        for k, t in enumerate(self.edges):
            if t.pair == pair:
                return k
        raise KeyError(f"edge {pair} is not in the tree")

    def pairs(self):
        return {t.pair for t in self.edges}


@dataclass
class InfluenceSet:
    anchor: TreeEdge
    members: list

    def __len__(self):
        return len(self.members)


def representative(points, i, j, kind):
    """S(p_i, p_j); for squares prefer a placement with an empty interior."""
    if kind == "square":
        h = empty_square(points, i, j)
        if h is not None:
            return h
    return smallest_homothet(points[i], points[j], kind)


def _prim(W):
    n = len(W)
    idx = np.arange(n)
    inside = np.zeros(n, dtype=bool)
    inside[0] = True
    best_w = W[0].copy()
    best_a = np.zeros(n, dtype=int)  # min endpoint
    best_b = idx.copy()               # max endpoint
    best_a[:] = np.minimum(0, idx)
    best_b[:] = np.maximum(0, idx)
    out = []
    for _ in range(n - 1):
        cand = np.nonzero(~inside)[0]
        w = best_w[cand]
        m = w.min()
        tied = cand[w == m]
        if len(tied) > 1:
            order = np.lexsort((best_b[tied], best_a[tied]))
            v = int(tied[order[0]])
        else:
            v = int(tied[0])
        out.append((int(best_a[v]), int(best_b[v])))
        inside[v] = True
        cw = W[v]
        ca = np.minimum(v, idx)
        cb = np.maximum(v, idx)
        better = (cw < best_w) | ((cw == best_w) & ((ca < best_a) | ((ca == best_a) & (cb < best_b))))
        better &= ~inside
        best_w[better] = cw[better]
        best_a[better] = ca[better]
        best_b[better] = cb[better]
    return out


def _kruskal(points, kind):
    n = len(points)
    keys = sorted((size_between(points[i], points[j], kind), i, j)
                  for i in range(n) for j in range(i + 1, n))
    parent = list(range(n))

    def root(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    out = []
    for _, i, j in keys:
        ri, rj = root(i), root(j)
        if ri != rj:
            parent[ri] = rj
            out.append((i, j))
    return out


def mst(points, kind):
    points = list(points)
    if len(points) < 2:
        return SpanningTree(kind, points, [])
    if all_float(points):
        pairs = _prim(pairwise_sizes(Coords(points), kind))
    else:
        pairs = _kruskal(points, kind)
    edges = []
    for i, j in pairs:
        h = representative(points, i, j, kind)
        edges.append(TreeEdge(i, j, h.scale, h))
    edges.sort(key=lambda t: t.key)
    return SpanningTree(kind, points, edges)


def _packed(T):
    cached = getattr(T, "_packed_reps", None)
    if cached is None and all_float(T.points):
        cached = pack([t.rep for t in T.edges])
        T._packed_reps = cached
    return cached


def influence_indices(T, k):
    """Indices (into T.edges) of Inf(e) for the k-th smallest tree edge."""
    anchor = T.edges[k].rep
    P = _packed(T)
    if P is not None:
        hit = intersects_many(anchor, P[k:])
        return [k + int(m) for m in np.nonzero(hit)[0]]
    return [m for m in range(k, len(T.edges)) if intersects(anchor, T.edges[m].rep)]


def influence_set(T, e):
    k = T.find(e)
    return InfluenceSet(T.edges[k], [T.edges[m] for m in influence_indices(T, k)])


def influence_number(T):
    if not T.edges:
        raise ValueError("influence number of an empty tree")
    best, arg = 0, None
    for k in range(len(T.edges)):
        size = len(influence_indices(T, k))
        if size > best:
            best, arg = size, T.edges[k]
    return best, arg


def edge_degree(T, e):
    """dg(e) = dg(u) + dg(v) - 1, counted in the subtree of edges >= e."""
    k = T.find(e)
    i, j = T.edges[k].pair
    du = dv = 0
    for t in T.edges[k:]:
        du += i in t.pair
        dv += j in t.pair
    return du + dv - 1


def minimal_edges(T):
    """Edges no larger (in the total order) than every adjacent edge."""
    by_vertex = {}
    for t in T.edges:
        for v in t.pair:
            by_vertex.setdefault(v, []).append(t.key)
    out = []
    for t in T.edges:
        neighbours = by_vertex[t.i] + by_vertex[t.j]
        if all(t.key <= key for key in neighbours):
            out.append(t)
    return out


def max_minimal_edge_degree(T):
    return max((edge_degree(T, t.pair) for t in minimal_edges(T)), default=0)


def conjecture_report(T):
    """Influence number against the largest minimal-edge degree (measured only)."""
    if not T.edges:
        return {"inf": 0, "max_minimal_degree": 0, "exceeds": False}
    inf, _ = influence_number(T)
    deg = max_minimal_edge_degree(T)
    return {"inf": inf, "max_minimal_degree": deg, "exceeds": inf > deg}


def path_in_tree(T, a, b):
    """Tree edges on the path from vertex a to vertex b."""
    adj = {}
    for t in T.edges:
        adj.setdefault(t.i, []).append((t.j, t))
        adj.setdefault(t.j, []).append((t.i, t))
    prev = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        for w, t in adj.get(v, []):
            if w not in prev:
                prev[w] = (v, t)
                stack.append(w)
    out = []
    v = b
    while prev[v] is not None:
        v, t = prev[v]
        out.append(t)
    return out


__all__ = ["TreeEdge", "SpanningTree", "InfluenceSet", "mst", "influence_set",
           "influence_number", "edge_degree", "minimal_edges", "max_minimal_edge_degree",
           "conjecture_report", "representative", "path_in_tree"]
