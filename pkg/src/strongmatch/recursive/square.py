"""Matching of size ceil((n-1)/4) inside a square container.

For n = 4m + 2 the container is cut into quadrants S1 (top-left), S2
(top-right), S3 (bottom-left) and S4 (bottom-right).  When the quadrants
alone promise only m pairs the residues n_i mod 4 are (3, 1, 1, 1) or
(1, 1, 0, 0) and the case analysis below gains the missing pair.

Every quadrant is shrunk at its outer corner so that it keeps 4m_i + 2
points (or none); L is the largest of these.  One neighbour of L's
quadrant then grows over the points L gave up.  Which neighbour is decided
by the points of L's quadrant lying beyond L's inner side towards it.
"""

from .common import Engine, ProofStepFailed, Region, anchor, bound, check_regions

SHRINK = {3: 1, 1: 3, 0: 2}
GROW = {3: 3, 1: 1, 0: 2}
NAMES = ("S1", "S2", "S3", "S4")


class SquareEngine(Engine):
    kind = "square"
    frame_kind = "square"

    def split(self, frame, pts, m):
        cells = self.quadrants(frame, pts, 4)
        quads = [Region(NAMES[q], frame.quadrant_shape(q), cells[q]) for q in range(4)]
        A = sum(bound(len(c)) for c in cells)
        if A < m:
            raise ProofStepFailed(f"quadrants promise {A} < {m}")
        if A > m:
            self.coverage["square.quadrants"] += 1
            check_regions(quads, None, m, "square.quadrants")
            return quads
        regions, label = self.cases(frame, pts, cells)
        self.coverage[label] += 1
        check_regions(regions, len(pts), m, label)
        return regions

    def cases(self, frame, pts, cells):
        res = [len(c) % 4 for c in cells]
        if sorted(res) == [1, 1, 1, 3]:
            case = "case1"
        elif sorted(res) == [0, 0, 1, 1]:
            case = "case2"
        else:
            raise ProofStepFailed(f"unexpected residues {res}")
        shrunk = [anchor(frame, q, cells[q], [], "shrink", SHRINK[res[q]]) for q in range(4)]
        i = max(range(4), key=lambda q: (shrunk[q].scale, -q))
        L = shrunk[i]
        if L.empty:
            raise ProofStepFailed("no nonempty shrunk quadrant")
        role = self._role(case, res, i)
        left_out = [p for p in cells[i] if p.index not in {t.index for t in L.members}]
        options = sorted(frame.neighbours(i), key=lambda c: GROW[res[c]])
        same = GROW[res[options[0]]] == GROW[res[options[1]]]
        for rank, c in enumerate(options):
            axis = frame.axis_towards(i, c)
            usable = [p for p in left_out if frame.along(p, i, axis) > L.scale]
            if len(usable) >= GROW[res[c]]:
                outcome = ("first", "second")[rank] if same else f"grow_r{res[c]}"
                break
        else:
            raise ProofStepFailed("neither neighbour can grow")
        others = [p for p in pts if frame.quadrant(p) != c]
        grown = anchor(frame, c, cells[c], others, "grow", GROW[res[c]])
        regions = []
        for q in range(4):
            a = grown if q == c else shrunk[q]
            name = f"{NAMES[q]}{'+' if q == c else '-'}{a.x}"
            regions.append(Region(name, a.shape, a.members))
        return regions, f"square.{case}.{role}.{outcome}"

    @staticmethod
    def _role(case, res, i):
        if case == "case1":
            r3 = res.index(3)
            if i == r3:
                return "L_r3"
            # diagonal quadrants differ in both bits of the index
            return "L_diagonal" if i ^ r3 == 3 else "L_adjacent"
        ones = [q for q in range(4) if res[q] == 1]
        pattern = "diagonal" if ones[0] ^ ones[1] == 3 else "adjacent"
        return f"{pattern}.L_r{res[i]}"


def strong_match_square_recursive(points, container, coverage=None):
    return SquareEngine(points, coverage).run(container)


SQUARE_BRANCHES = tuple(
    [f"square.case1.{r}.{o}" for r, outs in (("L_r3", ("first", "second")),
                                             ("L_adjacent", ("grow_r1", "grow_r3")),
                                             ("L_diagonal", ("first", "second")))
     for o in outs]
    + [f"square.case2.adjacent.{r}.{o}" for r in ("L_r1", "L_r0") for o in ("grow_r1", "grow_r0")]
    + [f"square.case2.diagonal.{r}.{o}" for r in ("L_r1", "L_r0") for o in ("first", "second")]
)
