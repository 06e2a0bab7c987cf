"""Strong matchings in Delaunay graphs of disks, equilateral triangles and
squares: graph builders, minimum spanning trees with influence diagnostics,
the greedy and recursive matching engines, and a certificate checker."""

from .generate import generate_points
from .geom import (Disk, Point, Square, TriDown, TriUp, check_general_position, contains,
                   enclosing, interiors_intersect, intersects, make_points,
                   smallest_homothet)
from .graphs import build
from .greedy import Pair, StrongMatching, strong_match_greedy
from .recursive import (ProofStepFailed, anchored_homothet, strong_match_square_recursive,
                        strong_match_theta_recursive)
from .spanning import influence_number, influence_set, mst
from .verify import check_bound, oracle_max_strong, verify_strong

__version__ = "0.1.0"

__all__ = [
    "Disk", "Point", "Square", "TriDown", "TriUp", "Pair", "StrongMatching",
    "ProofStepFailed", "anchored_homothet", "build", "check_bound",
    "check_general_position", "contains", "enclosing", "generate_points",
    "influence_number", "influence_set", "interiors_intersect", "intersects",
    "make_points", "mst", "oracle_max_strong", "smallest_homothet",
    "strong_match_greedy", "strong_match_square_recursive",
    "strong_match_theta_recursive", "verify_strong",
]
