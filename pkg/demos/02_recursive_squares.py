# %% [markdown]
# Recursive matching with squares
#
# The recursive engine splits a square container into quadrants, uses
# anchored shrinks and grows to rebalance point counts, and recurses.
# It guarantees ceil((n-1)/4) pairs, where greedy on squares has no
# tabulated guarantee.  Matched squares may touch along their
# boundaries but never overlap.

# %%
from collections import Counter

from strongmatch import strong_match_greedy, strong_match_square_recursive, verify_strong
from strongmatch.generate import generate_points
from strongmatch.geom import enclosing
from strongmatch.recursive import SQUARE_BRANCHES
from strongmatch.verify import check_bound

for n in (6, 25, 100):
    points = generate_points(n, seed=n, mode="square")
    box = enclosing(points, "square")
    rec = strong_match_square_recursive(points, box)
    ok = verify_strong(points, rec, "interior", box, exact_occupancy=True).ok
    greedy = strong_match_greedy(points, "square")
    print(f"n={n:4d}  recursive {len(rec):3d} (bound {check_bound(n, 'square')}, "
          f"certified {ok})  greedy {len(greedy):3d}")

# %% [markdown]
# Which construction cases did a batch exercise?

# %%
coverage = Counter()
for seed in range(200):
    points = generate_points(2 + seed % 60, seed, "square")
    strong_match_square_recursive(points, enclosing(points, "square"), coverage)
for label in SQUARE_BRANCHES:
    print(f"{coverage[label]:6d}  {label}")
