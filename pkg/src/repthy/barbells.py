"""Algebras generated by barbells and the spectrum of the two-strand barbell."""

import logging
from typing import Dict, List

from src.diagram import barbell
from src.exactnum import CycloScalar
from src.incarnation import IncarnationParams, incarnate
from src.linalg import Column, EchelonBasis, LinearMap, rank_of
from src.utils.constants import MAX_WORD_DIMENSION
from src.utils.errors import InvalidArgument, TooLarge

logger = logging.getLogger(__name__)


def _flatten(op: LinearMap) -> Column:
    return {j * op.rows + i: v for i, j, v in op.entries()}


def barbell_generators(r: int, params: IncarnationParams) -> List[LinearMap]:
    return [incarnate(barbell(r, t), params) for t in range(1, r)]


def barbell_algebra_dim(r: int, params: IncarnationParams) -> int:
    """
    Dimension of the unital algebra generated by the barbells on S^{⊗r}.

    The span of products is closed under left multiplication by the generators
    until nothing new appears.

    Raises:
        InvalidArgument: If r < 1.
        TooLarge: Above the dimension guard.
    """
    if r < 1:
        raise InvalidArgument(f"barbell algebra needs r >= 1, got {r}")
    size = params.word("S" * r).dimension
    if size > MAX_WORD_DIMENSION:
        raise TooLarge(f"S^{r} has dimension {size} > {MAX_WORD_DIMENSION}")
    generators = barbell_generators(r, params) if r >= 2 else []
    span = EchelonBasis()
    identity = LinearMap.identity(size)
    span.add(_flatten(identity))
    frontier = [identity]
    while frontier:
        fresh = []
        for element in frontier:
            for g in generators:
                product = element.then(g)
                if span.add(_flatten(product)):
                    fresh.append(product)
        frontier = fresh
    logger.debug(f"barbell algebra on S^{r} at {params.label()} has dimension {len(span)}")
    return len(span)


def barbell_square_spectrum(params: IncarnationParams) -> Dict[int, int]:
    """
    Eigenspace dimensions of β² for the barbell β on S⊗S.

    The candidate eigenvalues are (N - 2k)² for 0 <= k <= N; the dimensions add up to
    the dimension of S⊗S exactly when these exhaust the spectrum.
    """
    beta = incarnate(barbell(2, 1), params)
    square = beta.then(beta)
    size = square.rows
    dims: Dict[int, int] = {}
    for value in sorted({(params.N - 2 * k) ** 2 for k in range(params.N + 1)}):
        shifted = square - LinearMap.identity(size).scale(CycloScalar.of(value))
        kernel = size - rank_of(list(shifted.columns.values()))
        if kernel:
            dims[value] = kernel
    if sum(dims.values()) != size:
        logger.warning(f"β² at {params.label()} has eigenvalues outside (N - 2k)^2")
    return dims
