"""Central elements z_r acting on module words."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional

from src.clifford import ModuleWord, parse_word, so_act, so_basis
from src.diagram import Diagram, bubble
from src.exactnum import CycloScalar
from src.incarnation import IncarnationParams, affine_incarnate
from src.linalg import LinearMap
from src.utils.constants import MAX_WORD_DIMENSION
from src.utils.errors import InvalidArgument, TooLarge

logger = logging.getLogger(__name__)


def central_diagram(r: int) -> Diagram:
    """Spin bubble with r dots on its right strand."""
    return bubble("S", r, right=True)


@dataclass
class CentralOperator:
    """
    The element z_r as a family of operators, one per module word.

    Attributes:
        r: Number of dots.
        components: Operator on each module word, keyed by its letters ("" is the
            trivial word).
    """

    r: int
    N: int
    epsilon: int
    components: Dict[str, LinearMap] = field(default_factory=dict)

    def word(self, letters: str) -> ModuleWord:
        return ModuleWord(letters, self.N, self.epsilon)

    def is_central(self) -> bool:
        """True when every component commutes exactly with the so(V) action."""
        basis = so_basis(self.N)
        for letters, op in self.components.items():
            word = self.word(letters)
            for X in basis:
                if not op.commutator(so_act(X, word)).is_zero():
                    logger.debug(f"z_{self.r} fails to commute on {word or 'empty'}")
                    return False
        return True

    def scalar_on(self, letters: str) -> Optional[CycloScalar]:
        """The scalar z_r acts by on a component, or None if it is not a scalar."""
        op = self.components[letters]
        value = op.get(0, 0)
        if op == LinearMap.identity(op.rows).scale(value):
            return value
        return None

    def to_dict(self) -> Dict[str, Any]:
        components = {}
        for letters in sorted(self.components):
            scalar = self.scalar_on(letters)
            components[letters or "empty"] = {
                "dimension": self.components[letters].rows,
                "scalar": None if scalar is None else str(scalar),
            }
        return {"r": self.r, "N": self.N, "epsilon": self.epsilon, "components": components}


def central_element(r: int, params: IncarnationParams, module: ModuleWord) -> CentralOperator:
    """
    Compute z_r on the module word M.

    Args:
        r: Number of dots, r >= 0.
        params: N and epsilon, N >= 2.
        module: The module word M.

    Returns:
        CentralOperator: Single-component operator on M.

    Raises:
        InvalidArgument: If r < 0 or N < 2.
        TooLarge: If S⊗S⊗M exceeds the dimension guard.
    """
    if r < 0:
        raise InvalidArgument(f"dot count must be >= 0, got {r}")
    if params.N < 2:
        raise InvalidArgument(f"central elements need N >= 2, got {params.N}")
    size = params.word("SS").dimension * module.dimension
    if size > MAX_WORD_DIMENSION:
        raise TooLarge(f"S⊗S⊗{module} has dimension {size} > {MAX_WORD_DIMENSION}")
    op = affine_incarnate(central_diagram(r), params, module)
    return CentralOperator(r, params.N, params.epsilon, {module.letters: op})


def central_elements(
    r: int, params: IncarnationParams, modules: Iterable[str]
) -> CentralOperator:
    """z_r on several module words at once, given as letter strings."""
    result = CentralOperator(r, params.N, params.epsilon)
    for text in modules:
        letters = parse_word(text)
        single = central_element(r, params, params.word(letters))
        result.components.update(single.components)
    return result
