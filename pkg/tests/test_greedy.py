import pytest

from strongmatch.generate import generate_points
from strongmatch.geom import make_points
from strongmatch.greedy import strong_match_greedy
from strongmatch.spanning import influence_number, mst
from strongmatch.verify import ceil_div, oracle_max_strong, verify_strong

KINDS = [("disk", "disk"), ("tri_down", "triangle"), ("tri_up", "triangle"),
         ("square", "square")]


def test_three_collinear():
    pts = make_points([(0, 0), (1, 0), (3, 0)])
    M = strong_match_greedy(pts, "disk")
    assert [(p.i, p.j) for p in M.pairs] == [(0, 1)]


def test_far_pairs_all_matched():
    pts = make_points([(0, 0), (1, 0.2), (10, 0), (11, 0.3), (0, 10), (1.1, 10.2),
                       (10, 10), (11.2, 10.1)])
    M = strong_match_greedy(pts, "disk")
    assert len(M) == 4 == oracle_max_strong(pts, "disk")[0]


def test_trivial_inputs():
    assert len(strong_match_greedy([], "disk")) == 0
    assert len(strong_match_greedy(make_points([(0.1, 0.2)]), "square")) == 0


@pytest.mark.parametrize("kind,mode", KINDS)
def test_greedy_invariants(kind, mode):
    for seed in range(20):
        pts = generate_points(60, seed, mode)
        T = mst(pts, kind)
        M = strong_match_greedy(pts, kind, T)
        sizes = [p.rep.size for p in M.pairs]
        assert sizes == sorted(sizes)
        assert verify_strong(pts, M, "strict").ok
        inf, _ = influence_number(T)
        assert len(M) >= ceil_div(len(pts) - 1, inf)


def test_tree_is_reused():
    pts = generate_points(30, 1, "disk")
    T = mst(pts, "disk")
    assert strong_match_greedy(pts, "disk", T).info["tree"] is T
