"""Greedy strong matching by influence-set deletion."""

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .spanning import influence_indices, mst


class Pair(NamedTuple):
    i: int
    j: int
    rep: object


@dataclass
class StrongMatching:
    kind: str
    pairs: list
    mode: str = "strict"
    container: object = None
    info: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.pairs)


def strong_match_greedy(points, kind, tree=None):
    """Take the smallest surviving MST edge, then drop every edge of F whose
    shape meets it.  Edge order is the total order ``(size, i, j)``."""
    T = tree if tree is not None else mst(points, kind)
    alive = np.ones(len(T.edges), dtype=bool)
    pairs = []
    for k, t in enumerate(T.edges):
        if not alive[k]:
            continue
        pairs.append(Pair(t.i, t.j, t.rep))
        # influence_indices includes k itself
        alive[influence_indices(T, k)] = False
    return StrongMatching(kind, pairs, "strict", info={"tree": T})
