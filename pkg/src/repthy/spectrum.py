"""Isotypic decompositions and commutant dimensions of tensor words."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from src.clifford import (
    ModuleWord,
    Weight,
    casimir_value,
    is_dominant,
    p_word,
    quadratic_ops,
    simple_root_vectors,
    so_act,
    so_basis,
    to_adapted,
    weight_spaces,
    weyl_dimension,
)
from src.exactnum import CycloScalar
from src.linalg import Column, LinearMap, add_into, nullspace, rank_of
from src.utils.constants import DIRECT_COMMUTANT_MAX_DIMENSION, MAX_WORD_DIMENSION
from src.utils.errors import TooLarge

logger = logging.getLogger(__name__)


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class IsotypicEntry:
    """
    One isotypic piece: a simple module of the group, repeated ``multiplicity`` times.

    For even N a highest weight with nonzero last coordinate stands for the Pin-simple
    module L(λ) ⊕ L(λ̃) and has no P eigenvalue.
    """

    casimir: Fraction
    p_eigenvalue: Optional[int]
    multiplicity: int
    block_dimension: int
    highest_weight: Weight

    def to_dict(self) -> Dict[str, Any]:
        return {
            "casimir": _fraction_text(self.casimir),
            "p_eigenvalue": self.p_eigenvalue,
            "multiplicity": self.multiplicity,
            "block_dimension": self.block_dimension,
            "highest_weight": [_fraction_text(c) for c in self.highest_weight],
        }


@dataclass
class IsotypicSummary:
    word: str
    N: int
    dimension: int
    entries: List[IsotypicEntry] = field(default_factory=list)
    eigenspace_dimensions: Dict[Fraction, int] = field(default_factory=dict)

    def casimir_dimensions(self) -> Dict[Fraction, int]:
        """Total dimension carried by each Casimir eigenvalue."""
        totals: Dict[Fraction, int] = {}
        for entry in self.entries:
            totals[entry.casimir] = totals.get(entry.casimir, 0) + entry.multiplicity * entry.block_dimension
        return totals

    @property
    def consistent(self) -> bool:
        """Block dimensions add up to the word and match the Casimir eigenspaces."""
        total = sum(e.multiplicity * e.block_dimension for e in self.entries)
        return total == self.dimension and self.casimir_dimensions() == self.eigenspace_dimensions

    @property
    def commutant_dimension(self) -> int:
        return sum(entry.multiplicity**2 for entry in self.entries)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "word": self.word,
            "N": self.N,
            "dimension": self.dimension,
            "entries": [entry.to_dict() for entry in self.entries],
            "casimir_dimensions": {
                _fraction_text(c): k for c, k in sorted(self.casimir_dimensions().items())
            },
            "consistent": self.consistent,
        }


def _guard(word: ModuleWord, limit: int = MAX_WORD_DIMENSION) -> None:
    if word.dimension > limit:
        raise TooLarge(f"word {word} has dimension {word.dimension} > {limit}")


def highest_weight_vectors(word: ModuleWord) -> Dict[Weight, List[Column]]:
    """
    Bases of the highest-weight vectors of each dominant weight, in weight coordinates.

    A vector of weight λ is highest when every simple positive root vector kills it.
    """
    raising = [rv.word_op(word) for rv in simple_root_vectors(word.N)]
    result: Dict[Weight, List[Column]] = {}
    for weight, indices in sorted(weight_spaces(word).items(), reverse=True):
        if not is_dominant(weight, word.N):
            continue
        rows: Dict[Tuple[int, int], Column] = {}
        for op_index, op in enumerate(raising):
            for k, flat in enumerate(indices):
                for row, value in op.column(flat).items():
                    rows.setdefault((op_index, row), {})[k] = value
        local = nullspace(list(rows.values()), len(indices))
        if local:
            result[weight] = [{indices[k]: v for k, v in vector.items()} for vector in local]
    return result


def _p_split(word: ModuleWord, vectors: List[Column]) -> Dict[int, int]:
    """Multiplicities of the P̂ eigenvalues +1 and -1 on a P̂-stable span."""
    p_hat = to_adapted(p_word(word), word)
    moved = []
    for h in vectors:
        image = dict(p_hat.apply(h))
        add_into(image, h, CycloScalar.of(-1))
        moved.append(image)
    minus = rank_of(moved)
    return {1: len(vectors) - minus, -1: minus}


def casimir_eigenspace_dimensions(
    word: ModuleWord, eigenvalues: List[Fraction]
) -> Dict[Fraction, int]:
    """Exact kernel dimensions of C - c for the given candidate eigenvalues."""
    casimir = quadratic_ops("casimir", word)
    size = word.dimension
    dims: Dict[Fraction, int] = {}
    for c in eigenvalues:
        shifted = casimir - LinearMap.identity(size).scale(c)
        kernel = size - rank_of(list(shifted.columns.values()))
        if kernel:
            dims[c] = kernel
    return dims


def isotypic_spectrum(word: ModuleWord) -> IsotypicSummary:
    """
    Decompose a tensor word into isotypic pieces of Spin(V), or Pin(V) for even N.

    Raises:
        TooLarge: When the word exceeds the desk-scale dimension guard.
    """
    _guard(word)
    N = word.N
    pin = N % 2 == 0 and N >= 2
    summary = IsotypicSummary(word.letters, N, word.dimension)
    for weight, vectors in highest_weight_vectors(word).items():
        casimir = casimir_value(weight, N)
        dim = weyl_dimension(weight, N)
        if not pin:
            summary.entries.append(IsotypicEntry(casimir, None, len(vectors), dim, weight))
        elif weight[-1] > 0:
            summary.entries.append(IsotypicEntry(casimir, None, len(vectors), 2 * dim, weight))
        elif weight[-1] == 0:
            for sign, count in _p_split(word, vectors).items():
                if count:
                    summary.entries.append(IsotypicEntry(casimir, sign, count, dim, weight))
    candidates = sorted({entry.casimir for entry in summary.entries})
    summary.eigenspace_dimensions = casimir_eigenspace_dimensions(word, candidates)
    if not summary.consistent:
        logger.error(f"isotypic blocks of {word} (N={N}) disagree with the Casimir eigenspaces")
    return summary


def commutant_dim(word: ModuleWord) -> int:
    """
    Dimension of the endomorphisms of the word commuting with the group.

    Sum of squared multiplicities of the simple pieces.

    Raises:
        TooLarge: Above the dimension guard.
    """
    return isotypic_spectrum(word).commutant_dimension


def commutant_dim_direct(word: ModuleWord) -> int:
    """
    Same dimension from the linear system [M, ρ(X)] = 0, plus [M, P] = 0 for even N.

    Raises:
        TooLarge: Above the smaller guard of the direct solve.
    """
    _guard(word, DIRECT_COMMUTANT_MAX_DIMENSION)
    size = word.dimension
    actions: List[LinearMap] = []
    if word.N >= 2:
        actions = [so_act(X, word) for X in so_basis(word.N)]
        if word.N % 2 == 0:
            actions.append(p_word(word))
    rows: List[Column] = []
    for A in actions:
        # (M A - A M)_{ij}; unknown M_ik sits at i * size + k
        equations: Dict[int, Column] = {}
        A_rows = A.transpose()
        for i in range(size):
            for j in range(size):
                row: Column = {}
                for k, value in A.column(j).items():
                    add_into(row, {i * size + k: value})
                for k, value in A_rows.column(i).items():
                    add_into(row, {k * size + j: -value})
                if row:
                    equations[i * size + j] = row
        rows.extend(equations.values())
    return len(nullspace(rows, size * size))
