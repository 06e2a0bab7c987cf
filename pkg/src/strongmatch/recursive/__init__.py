"""Recursive ceil((n-1)/4) strong matchings for theta-six and squares."""

from .common import (AnchoredShape, ProofStepFailed, anchored_homothet, base_case_pair,
                     bound)
from .square import SQUARE_BRANCHES, strong_match_square_recursive
from .theta import THETA_BRANCHES, strong_match_theta_recursive

__all__ = ["AnchoredShape", "ProofStepFailed", "anchored_homothet", "base_case_pair", "bound",
           "SQUARE_BRANCHES", "THETA_BRANCHES", "strong_match_square_recursive",
           "strong_match_theta_recursive"]
