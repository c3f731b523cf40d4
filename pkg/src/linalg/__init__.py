from src.linalg.elimination import EchelonBasis, nullspace, rank_of, solve_membership
from src.linalg.linear_map import Column, LinearMap, add_into

__all__ = [
    "Column",
    "EchelonBasis",
    "LinearMap",
    "add_into",
    "nullspace",
    "rank_of",
    "solve_membership",
]
