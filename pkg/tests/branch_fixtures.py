"""Hand-placed inputs for proof branches that random data rarely reaches.

Theta inputs are written in barycentric form (distances to the three sides
of an upward container of height 1, summing to 1).  Coordinate 0 belongs to
the top corner, 1 to the bottom-left and 2 to the bottom-right.
"""

import math

from strongmatch.geom import TriUp, make_points

THIRD = 1 / 3
CONTAINER = TriUp(THIRD, THIRD, THIRD)


def from_bary(a, b, c):
    # container {u >= -1/3, v >= -1/3, w >= -1/3}; u = y, w - v = sqrt3 x
    u, v, w = a - THIRD, b - THIRD, c - THIRD
    return ((w - v) / math.sqrt(3), u)


THETA = {
    # centre holds 3 (mod 4); L sits in the top corner and neither other
    # corner can grow, so L's left-overs and the centre share the triangle
    # beside L
    "theta.case1.center.L_r1.split": [
        (0.90, 0.05, 0.05), (0.56, 0.20, 0.24),
        (0.53, 0.22, 0.25), (0.52, 0.253, 0.227), (0.51, 0.21, 0.28),
        (0.45, 0.266, 0.284), (0.40, 0.31, 0.29), (0.35, 0.33, 0.32),
        (0.20, 0.61, 0.19), (0.21, 0.18, 0.61),
    ],
    # as above, but one left-over point of L lies beyond the line facing the
    # bottom-right corner, which grows over it; the bottom-left one cannot
    "theta.case1.center.L_r1.second": [
        (0.90, 0.05, 0.05), (0.56, 0.20, 0.24),
        (0.53, 0.22, 0.25), (0.52, 0.253, 0.227), (0.505, 0.03, 0.465),
        (0.45, 0.266, 0.284), (0.40, 0.31, 0.29), (0.35, 0.33, 0.32),
        (0.20, 0.61, 0.19), (0.21, 0.18, 0.61),
    ],
    # bottom-right corner holds 3 (mod 4); L is the top corner; the
    # bottom-left corner has nothing beyond L, the bottom-right corner
    # takes all three left-overs
    "theta.case1.corner.L_r1.grow_r3": [
        (0.90, 0.05, 0.05), (0.55, 0.25, 0.20),
        (0.51, 0.03, 0.46), (0.505, 0.025, 0.47), (0.52, 0.011, 0.469),
        (0.10, 0.10, 0.80), (0.15, 0.20, 0.65), (0.20, 0.28, 0.52),
        (0.213, 0.594, 0.193),
        (0.30, 0.35, 0.35),
    ],
}


def theta_fixture(label):
    return make_points([from_bary(*t) for t in THETA[label]]), CONTAINER


# Ten points whose smallest MST edge (0, 1) in the downward-triangle graph
# meets all nine tree triangles.  Given as integer (u, v) cone coordinates
# (w = -u - v); x = (w - v)/sqrt3 is carried exactly in Q(sqrt3).
# Tree edge (0, 2) weighs exactly as much as (0, 1): the blue triangle of
# (3, 2) then touches t(0, 1) in a single vertex.  Nudging either way
# loses one of the two, so the fixture only exists in exact arithmetic.
TIGHT_TRIANGLE = [
    (7038, -5944),
    (6956, -8398),
    (4502, -4859),
    (-1825, 314),
    (4804, -9112),
    (9992, -5117),
    (8187, -11515),
    (5650, -2972),
    (1716, -6128),
    (10620, -9333),
]


def tight_triangle_points():
    from fractions import Fraction

    from strongmatch.geom import Point
    from strongmatch.numeric import QSqrt3

    out = []
    for k, (u, v) in enumerate(TIGHT_TRIANGLE):
        w = -u - v
        out.append(Point(QSqrt3(0, Fraction(w - v, 3)), Fraction(u), k))
    return out
