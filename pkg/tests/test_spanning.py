import itertools

import pytest

from strongmatch.generate import generate_points
from strongmatch.geom import Point, make_points
from strongmatch.spanning import (conjecture_report, edge_degree, influence_number,
                                  influence_set, minimal_edges, mst, path_in_tree)


def test_mst_three_collinear():
    T = mst(make_points([(0, 0), (1, 0), (3, 0)]), "disk")
    assert [t.pair for t in T.edges] == [(0, 1), (1, 2)]
    # the tree is sorted by the total order (size, i, j)
    assert [t.key for t in T.edges] == sorted(t.key for t in T.edges)


def test_influence_sets_on_a_path():
    T = mst(make_points([(0, 0), (1, 0), (3, 0)]), "disk")
    # D(0,1) touches D(1,2) at point 1
    assert len(influence_set(T, (0, 1))) == 2
    assert len(influence_set(T, (1, 2))) == 1
    assert influence_number(T)[0] == 2


def test_influence_of_empty_tree():
    with pytest.raises(ValueError):
        influence_number(mst(make_points([(0.5, 0.5)]), "disk"))
    assert conjecture_report(mst([], "disk"))["inf"] == 0


def test_unknown_edge():
    T = mst(make_points([(0, 0), (1, 0), (3, 0)]), "disk")
    with pytest.raises(KeyError):
        influence_set(T, (0, 2))


def test_edge_degree_on_a_path():
    T = mst(make_points([(0, 0), (1, 0), (3, 0)]), "disk")
    assert edge_degree(T, (0, 1)) == 2
    assert edge_degree(T, (1, 2)) == 1


def test_star_has_one_minimal_edge():
    pts = make_points([(0, 0), (1, 0.1), (-1.5, 0.2), (0.1, 2.2), (0.2, -2.9)])
    T = mst(pts, "disk")
    assert all(0 in t.pair for t in T.edges)
    assert [t.pair for t in minimal_edges(T)] == [(0, 1)]
    assert edge_degree(T, (0, 1)) == 4


def test_path_minimal_edges_are_local_minima():
    pts = make_points([(0, 0), (1, 0), (3, 0), (3.5, 0), (6, 0)])
    T = mst(pts, "disk")
    assert sorted(t.pair for t in minimal_edges(T)) == [(0, 1), (2, 3)]


@pytest.mark.parametrize("kind,mode", [("disk", "disk"), ("tri_down", "triangle"),
                                       ("square", "square")])
def test_tree_independent_of_input_order(kind, mode):
    pts = generate_points(20, 3, mode)
    perm = list(reversed(pts))
    relabel = [Point(p.x, p.y, k) for k, p in enumerate(perm)]
    back = {k: p.index for k, p in enumerate(perm)}
    T1 = mst(pts, kind)
    T2 = mst(relabel, kind)
    assert T1.pairs() == {tuple(sorted((back[t.i], back[t.j]))) for t in T2.edges}


@pytest.mark.parametrize("kind,mode", [("disk", "disk"), ("tri_down", "triangle"),
                                       ("square", "square")])
def test_mst_is_minimum_by_brute_force(kind, mode):
    from strongmatch.spanning import representative
    pts = generate_points(6, 5, mode)
    n = len(pts)
    w = {(i, j): representative(pts, i, j, kind).size
         for i, j in itertools.combinations(range(n), 2)}
    best = None
    for es in itertools.combinations(w, n - 1):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a
        ok = True
        for i, j in es:
            a, b = find(i), find(j)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            cost = sum(w[e] for e in es)
            best = cost if best is None else min(best, cost)
    T = mst(pts, kind)
    assert sum(t.rep.size for t in T.edges) == pytest.approx(best)


def test_path_in_tree():
    T = mst(make_points([(0, 0), (1, 0), (3, 0), (3.5, 0)]), "disk")
    assert [t.pair for t in path_in_tree(T, 0, 3)] == [(2, 3), (1, 2), (0, 1)]
    assert path_in_tree(T, 2, 2) == []


def test_exact_tree_matches_float_tree():
    from fractions import Fraction
    pts = generate_points(25, 6, "disk")
    ex = [Point(Fraction(p.x), Fraction(p.y), p.index) for p in pts]
    assert mst(pts, "disk").pairs() == mst(ex, "disk").pairs()
