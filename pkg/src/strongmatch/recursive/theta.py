"""Matching of size ceil((n-1)/4) in the theta-six graph, inside an
equilateral container of either orientation.

The container splits into three corner triangles of its own orientation
and an inverted central triangle.  In the oriented frame of
:class:`TriFrame` the container reads ``{O >= lo}``; write
``coord_k = O_k - lo_k`` (so the three coords sum to the height H).
Corner k is ``coord_k >= H/2``, the centre is everything else.

When the four parts promise only m pairs, each corner is shrunk to keep
4m_k + 2 points (or none) and L, the largest of them, sits in corner i
with height h.  For another corner c, the points outside S_c with
``coord_c > h`` lie beyond L's side facing c.  If enough of them exist,
c grows over them and the centre gives up its own points nearest to c.
If neither remaining corner can grow, the points L gave up and the
centre fit in the inverted triangle ``{coord_i <= H - h, coord_j <= h}``
next to L, which then carries the missing pair.
"""

from .common import Engine, ProofStepFailed, Region, anchor, bound, check_regions
from .frames import frame_for

SHRINK = {3: 1, 1: 3, 0: 2}
GROW = {3: 3, 1: 1, 0: 2}
NAMES = ("S1", "S2", "S4", "S3")  # corners 0..2, then the centre
CENTRE = 3


class ThetaEngine(Engine):
    kind = "theta6"
    frame_kind = "theta"

    def split(self, frame, pts, m):
        cells = self.quadrants(frame, pts, 4)
        quads = [Region(NAMES[q], frame.quadrant_shape(q), cells[q]) for q in range(4)]
        A = sum(bound(len(c)) for c in cells)
        if A < m:
            raise ProofStepFailed(f"quadrants promise {A} < {m}")
        if A > m:
            self.coverage["theta.quadrants"] += 1
            check_regions(quads, None, m, "theta.quadrants")
            return quads
        regions, label = self.cases(frame, pts, cells, quads)
        self.coverage[label] += 1
        check_regions(regions, len(pts), m, label)
        return regions

    def cases(self, frame, pts, cells, quads):
        res = [len(c) % 4 for c in cells]
        corner_res = res[:3]
        if sorted(res) == [1, 1, 1, 3]:
            case = "case1.center" if res[CENTRE] == 3 else "case1.corner"
        elif sorted(res) == [0, 0, 1, 1]:
            case = f"case2.r3{'zero' if res[CENTRE] == 0 else 'one'}"
        else:
            raise ProofStepFailed(f"unexpected residues {res}")
        centre = frame_for(quads[CENTRE].shape)
        shrunk = [anchor(frame, k, cells[k], [], "shrink", SHRINK[res[k]]) for k in range(3)]

        def grow(c):
            others = [p for p in pts if frame.quadrant(p) != c]
            g = anchor(frame, c, cells[c], others, "grow", GROW[res[c]])
            d = anchor(centre, c, cells[CENTRE], [], "shrink", GROW[res[c]])
            out = [Region(f"{NAMES[c]}+{g.x}", g.shape, g.members),
                   Region(f"{NAMES[CENTRE]}-{d.x}@{c}", d.shape, d.members)]
            return out, g

        if all(s.empty for s in shrunk):
            # every corner keeps at most one point: grow a corner holding one
            c = next(k for k in range(3) if res[k] == 1)
            regions, _ = grow(c)
            return regions, f"theta.{case}.all_zero"

        i = max(range(3), key=lambda k: (shrunk[k].scale, -k))
        L = shrunk[i]
        h = L.scale
        role = f"L_r{corner_res[i]}"
        others = sorted((k for k in range(3) if k != i), key=lambda k: (GROW[res[k]], k))
        same = GROW[res[others[0]]] == GROW[res[others[1]]]
        kept = {p.index for p in L.members}
        for rank, c in enumerate(others):
            # L's own points sit on its side of the line even when rounding
            # says otherwise (its boundary point may also touch the container)
            beyond = [p for p in pts if frame.quadrant(p) != c and p.index not in kept
                      and frame.scale(p, c) < frame.size - h]
            if len(beyond) >= GROW[res[c]]:
                outcome = ("first", "second")[rank] if same else f"grow_r{res[c]}"
                grown_regions, _ = grow(c)
                regions = list(grown_regions)
                for k in range(3):
                    if k != c:
                        s = shrunk[k]
                        regions.append(Region(f"{NAMES[k]}-{s.x}", s.shape, s.members))
                return regions, f"theta.{case}.{role}.{outcome}"

        # neither corner can grow: the inverted triangle next to L
        taken = {p.index for p in L.members}
        for k in others:
            taken |= {p.index for p in cells[k]}
        hi = [frame.lo[k] + h for k in range(3)]
        hi[i] = frame.coords(L.boundary_point)[i]
        beside = frame.opposite(hi)
        members = [p for p in pts if p.index not in taken
                   and all(o <= t for o, t in zip(frame.coords(p), hi))]
        regions = [Region(f"{NAMES[i]}-{L.x}", L.shape, L.members),
                   Region(f"{NAMES[i]}'", beside, members)]
        regions += [quads[k] for k in others]
        return regions, f"theta.{case}.{role}.split"


def strong_match_theta_recursive(points, container, coverage=None):
    return ThetaEngine(points, coverage).run(container)


def _expected():
    labels = []
    groups = {
        "case1.center": [("L_r1", ("first", "second", "split"))],
        "case1.corner": [("L_r3", ("first", "second", "split")),
                         ("L_r1", ("grow_r1", "grow_r3", "split"))],
        "case2.r3zero": [("L_r0", ("first", "second", "split")),
                         ("L_r1", ("grow_r1", "grow_r0", "split"))],
        "case2.r3one": [("L_r1", ("first", "second", "split")),
                        ("L_r0", ("grow_r1", "grow_r0", "split"))],
    }
    for case, roles in groups.items():
        for role, outs in roles:
            labels += [f"theta.{case}.{role}.{o}" for o in outs]
        if case != "case1.corner":
            labels.append(f"theta.{case}.all_zero")
    return tuple(labels)


THETA_BRANCHES = _expected()
