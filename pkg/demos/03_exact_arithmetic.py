# %% [markdown]
# Exact arithmetic and touching triangles
#
# Triangle predicates compare the cone functionals u = y,
# v = (-sqrt3 x - y)/2 and w = (sqrt3 x - y)/2.  With rational input
# these live in Q(sqrt3), so they can be decided exactly.  That matters
# when two shapes meet in a single point: floats cannot tell
# "touching" from "just apart".

# %%
from fractions import Fraction

from strongmatch.geom import Point, intersects, interiors_intersect, smallest_homothet
from strongmatch.numeric import QSqrt3

a, b, c = (Point(Fraction(0), Fraction(0), 0), Point(Fraction(1), Fraction(0), 1),
           Point(Fraction(2), Fraction(0), 2))
t1 = smallest_homothet(a, b, "tri_down")
t2 = smallest_homothet(b, c, "tri_down")
print("t1 =", t1)
print("share a point:", intersects(t1, t2), " overlap:", interiors_intersect(t1, t2))

# %% [markdown]
# A point whose x-coordinate is itself in Q(sqrt3) lands exactly on a
# 60-degree line.

# %%
p = Point(QSqrt3(0, Fraction(1, 3)), Fraction(1), 3)   # x = sqrt3 / 3
q = Point(Fraction(0), Fraction(0), 4)
t = smallest_homothet(q, p, "tri_up")
print("tri_up through a 60-degree pair:", t, " size", t.size)
