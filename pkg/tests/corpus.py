"""Seeded instance corpora shared by the acceptance suite and slower tests."""

from collections import Counter
from functools import lru_cache

import numpy as np

from strongmatch.generate import generate_points
from strongmatch.geom import MODES, enclosing
from strongmatch.greedy import strong_match_greedy
from strongmatch.recursive import strong_match_square_recursive, strong_match_theta_recursive
from strongmatch.spanning import influence_number
from strongmatch.verify import check_bound, verify_strong


def draw_n(seed, lo, hi, tag):
    return int(np.random.default_rng([seed, tag]).integers(lo, hi + 1))


def instance(seed, lo, hi, kind, tag=0):
    n = draw_n(seed, lo, hi, tag)
    return generate_points(n, seed, MODES[kind])


@lru_cache(maxsize=None)
def greedy_corpus(kind, count=1000, lo=2, hi=200):
    """One record per seed: (seed, n, size, bound, verdict ok, Inf(T))."""
    rows = []
    for seed in range(count):
        P = instance(seed, lo, hi, kind, tag=1)
        M = strong_match_greedy(P, kind)
        T = M.info["tree"]
        inf = influence_number(T)[0] if T.edges else 0
        ok = verify_strong(P, M, "strict").ok
        rows.append((seed, len(P), len(M), check_bound(len(P), kind, "greedy"), ok, inf))
    return tuple(rows)


@lru_cache(maxsize=None)
def recursive_corpus(kind, count=500, lo=2, hi=100):
    """Records (seed, n, size, bound, failures) plus the branch coverage."""
    coverage = Counter()
    rows = []
    for seed in range(count):
        P = instance(seed, lo, hi, kind, tag=2)
        if kind == "square":
            box = enclosing(P, "square")
            M = strong_match_square_recursive(P, box, coverage)
        else:
            # alternate the root orientation so both frames are exercised
            box = enclosing(P, "tri_up" if seed % 2 else "tri_down")
            M = strong_match_theta_recursive(P, box, coverage)
        cert = verify_strong(P, M, "interior", box, exact_occupancy=True)
        rows.append((seed, len(P), len(M), check_bound(len(P), kind, "recursive"),
                     tuple(name for name, _ in cert.failures)))
    return tuple(rows), coverage
