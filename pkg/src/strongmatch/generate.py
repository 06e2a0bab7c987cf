"""Seeded random point sets in general position."""

import numpy as np

from .geom import MODES, check_general_position, make_points
from .pointio import PLACES

MAX_ROUNDS = 1000


def generate_points(n, seed, mode="disk"):
    """``n`` uniform points of the unit square, rounded to the file precision.

    Points named in a general-position violation are redrawn (one per
    violation) until the checker is satisfied.  The result depends only on
    ``(n, seed, mode)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    mode = MODES[mode]
    rng = np.random.default_rng(seed)
    xy = rng.random((n, 2)).round(PLACES)
    for _ in range(MAX_ROUNDS):
        points = make_points(xy.tolist())
        report = check_general_position(points, mode)
        if report.ok:
            return points
        redraw = sorted({idx[-1] for idx, _ in report.violations})
        xy[redraw] = rng.random((len(redraw), 2)).round(PLACES)
    raise RuntimeError(f"no general-position sample after {MAX_ROUNDS} rounds")
