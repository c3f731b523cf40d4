"""Exact Gaussian elimination on sparse vectors."""

from typing import Dict, List, Optional

from src.exactnum import CycloScalar
from src.linalg.linear_map import Column, add_into


class EchelonBasis:
    """
    Incrementally maintained row-echelon basis of a span.

    Each stored vector is normalized to 1 at its pivot, and the pivot is the smallest
    index of the vector after reduction, so reducing against pivots in increasing order
    never reintroduces an earlier pivot.
    """

    def __init__(self) -> None:
        self.pivots: Dict[int, Column] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: Column) -> Column:
        """Return vector minus its projection onto the span along the pivots."""
        work = dict(vector)
        while True:
            hit = None
            for index in sorted(work):
                if index in self.pivots:
                    hit = index
                    break
            if hit is None:
                return work
            add_into(work, self.pivots[hit], -work[hit])

    def add(self, vector: Column) -> bool:
        """Insert vector; return True when it enlarged the span."""
        reduced = self.reduce(vector)
        if not reduced:
            return False
        pivot = min(reduced)
        scale = reduced[pivot].inv()
        self.pivots[pivot] = {i: v * scale for i, v in reduced.items()}
        return True

    def contains(self, vector: Column) -> bool:
        return not self.reduce(vector)


def rank_of(vectors: List[Column]) -> int:
    basis = EchelonBasis()
    for vector in vectors:
        basis.add(vector)
    return len(basis)


def nullspace(rows: List[Column], size: int) -> List[Column]:
    """
    Basis of {x : r . x = 0 for every row r} in dimension size.

    Args:
        rows: Sparse equation rows, indexed by unknown.
        size: Number of unknowns.

    Returns:
        List[Column]: One basis vector per free unknown.
    """
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    reduced = _fully_reduce(basis.pivots)
    free = [k for k in range(size) if k not in reduced]
    out: List[Column] = []
    for f in free:
        vector: Column = {f: CycloScalar.of(1)}
        for pivot, row in reduced.items():
            value = row.get(f)
            if value is not None:
                vector[pivot] = -value
        out.append(vector)
    return out


def _fully_reduce(pivots: Dict[int, Column]) -> Dict[int, Column]:
    """Back-substitute so each pivot column is zero in every other row."""
    reduced = {p: dict(row) for p, row in pivots.items()}
    for pivot in sorted(reduced, reverse=True):
        pivot_row = reduced[pivot]
        for other, row in reduced.items():
            if other == pivot:
                continue
            value = row.get(pivot)
            if value is not None:
                add_into(row, pivot_row, -value)
    return reduced


def solve_membership(basis: List[Column], vector: Column) -> Optional[List[CycloScalar]]:
    """Coefficients expressing vector in terms of basis, or None when outside the span."""
    tagged = EchelonBasis()
    width = 1 + max([max(v) for v in basis if v] + [max(vector) if vector else 0] + [0])
    # append an identity block to track combinations
    for k, b in enumerate(basis):
        row = dict(b)
        row[width + k] = CycloScalar.of(1)
        tagged.add(row)
    reduced = tagged.reduce(dict(vector))
    if any(index < width for index in reduced):
        return None
    return [-reduced.get(width + k, CycloScalar.of(0)) for k in range(len(basis))]
