from collections import Counter
from fractions import Fraction

import pytest

from branch_fixtures import THETA, theta_fixture
from strongmatch.generate import generate_points
from strongmatch.geom import Point, Square, TriDown, TriUp, enclosing, make_points
from strongmatch.recursive import (ProofStepFailed, anchored_homothet, base_case_pair, bound,
                                   strong_match_square_recursive, strong_match_theta_recursive)
from strongmatch.recursive.common import Region, check_regions
from strongmatch.verify import check_bound, oracle_max_strong, verify_strong

BOX = Square(0, 0, 4)
THREE = make_points([(1, 3), (3, 1), (3.5, 0.5)])


def run(points, kind, box=None, coverage=None):
    if kind == "square":
        box = box or enclosing(points, "square")
        return strong_match_square_recursive(points, box, coverage), box
    box = box or enclosing(points, "tri_up")
    return strong_match_theta_recursive(points, box, coverage), box


def certify(points, M, box):
    return verify_strong(points, M, "interior", box, exact_occupancy=True)


def test_bound():
    assert [bound(k) for k in range(8)] == [0, 0, 1, 1, 1, 1, 2, 2]


@pytest.mark.parametrize("x,scale,members", [(0, 3.5, 3), (1, 3, 2), (3, 0, 0)])
def test_anchored_shrink(x, scale, members):
    a = anchored_homothet(THREE, BOX, 0, "shrink", x)
    assert a.scale == scale
    assert len(a.members) == members
    assert a.empty == (members == 0)


def test_anchored_grow():
    small = Square(0, 2, 2)  # top-left quadrant of BOX holds only (1, 3)
    a = anchored_homothet(THREE, small, 0, "grow", 1)
    assert {p.index for p in a.members} == {0, 1}
    assert a.scale == 3
    with pytest.raises(ValueError):
        anchored_homothet(THREE, small, 0, "grow", 5)
    with pytest.raises(ValueError):
        anchored_homothet(THREE, BOX, 0, "stretch", 1)


def test_base_case_pair():
    M = base_case_pair(make_points([(0, 0), (1, 0.3)]), Square(-1, -1, 3))
    assert [(p.i, p.j) for p in M.pairs] == [(0, 1)]
    assert M.pairs[0].rep.s == 1
    with pytest.raises(ValueError):
        base_case_pair(make_points([(0, 0)]), Square(-1, -1, 3))
    with pytest.raises(ValueError):
        base_case_pair(make_points([(0, 0), (5, 5)]), Square(-1, -1, 3))


@pytest.mark.parametrize("kind,mode", [("square", "square"), ("theta6", "triangle")])
def test_small_instances_against_oracle(kind, mode):
    for seed in range(12):
        for n in (2, 6):
            pts = generate_points(n, seed, mode)
            M, box = run(pts, kind)
            assert certify(pts, M, box).ok
            assert check_bound(n, kind) <= len(M) <= oracle_max_strong(pts, kind)[0]


@pytest.mark.parametrize("kind,mode", [("square", "square"), ("theta6", "triangle")])
def test_eighteen_points(kind, mode):
    for seed in range(10):
        pts = generate_points(18, seed, mode)
        M, box = run(pts, kind)
        assert certify(pts, M, box).ok
        assert len(M) >= 5


def test_one_quadrant_holds_everything():
    pts = make_points([(0.1 + 0.07 * k, 0.2 + 0.011 * k * k) for k in range(10)])
    M, box = run(pts, "square", Square(0, 0, 4))
    assert certify(pts, M, box).ok and len(M) >= 3


def test_tri_down_container():
    pts = generate_points(30, 2, "triangle")
    box = enclosing(pts, "tri_down")
    assert isinstance(box, TriDown)
    M, _ = run(pts, "theta6", box)
    assert certify(pts, M, box).ok and len(M) >= 8


def test_point_outside_container():
    pts = make_points([(0.5, 0.5), (9, 9), (0.2, 0.3)])
    with pytest.raises(ValueError):
        strong_match_square_recursive(pts, Square(0, 0, 1))


@pytest.mark.parametrize("label", sorted(THETA))
def test_directed_theta_fixtures(label):
    pts, box = theta_fixture(label)
    cov = Counter()
    M = strong_match_theta_recursive(pts, box, cov)
    assert label in cov
    assert certify(pts, M, box).ok
    assert len(M) >= check_bound(len(pts), "theta6")


def test_exact_mode():
    pts = [Point(Fraction(p.x).limit_denominator(10**6), Fraction(p.y).limit_denominator(10**6),
                 p.index) for p in generate_points(20, 4, "square")]
    M, box = run(pts, "square")
    assert certify(pts, M, box).ok and len(M) >= 5
    box = TriUp(Fraction(3), Fraction(3), Fraction(3))
    pts = [Point(Fraction(k, 7) - 1, Fraction(k * k % 11, 13) - 1, k) for k in range(9)]
    M = strong_match_theta_recursive(pts, box)
    assert certify(pts, M, box).ok and len(M) >= 2


def test_check_regions_catches_broken_steps():
    p = make_points([(0.1, 0.1), (0.2, 0.3), (0.7, 0.8), (0.9, 0.6)])
    a = Region("A", Square(0, 0, 0.5), p[:2])
    b = Region("B", Square(0.5, 0.5, 0.5), p[2:])
    check_regions([a, b], 5, 1, "ok")
    with pytest.raises(ProofStepFailed, match="reuses"):
        check_regions([a, Region("C", Square(0.5, 0.5, 0.5), p[1:])], 5, 1, "dup")
    with pytest.raises(ProofStepFailed, match="overlap"):
        check_regions([a, Region("D", Square(0.25, 0.25, 0.5), p[2:])], 5, 1, "overlap")
    with pytest.raises(ProofStepFailed, match="promise"):
        check_regions([a, b], 5, 2, "short")
    with pytest.raises(ProofStepFailed, match="shrink"):
        check_regions([a, b], 2, 1, "shrink")


def test_coverage_counts_base_cases():
    cov = Counter()
    run(generate_points(5, 1, "square"), "square", coverage=cov)
    assert cov["square.base"] == 1
