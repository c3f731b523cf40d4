"""Parameters of the incarnation functor."""

from dataclasses import dataclass
from typing import Optional

from src.clifford import ModuleWord, kappa, sigma, spin_rank, super_dimension
from src.exactnum import CycloScalar, ParamScalar
from src.utils.errors import InvalidArgument


@dataclass(frozen=True)
class IncarnationParams:
    """
    Dimension N of V, spin choice epsilon and the derived d, D and kappa.

    ``D_offset`` shifts the value substituted for D in coefficients. It exists to
    check that a wrong categorical dimension is caught; box images never use it.
    """

    N: int
    epsilon: int = 1
    D_offset: int = 0

    def __post_init__(self) -> None:
        if self.N < 0:
            raise InvalidArgument(f"N must be non-negative, got {self.N}")
        if self.epsilon not in (1, -1):
            raise InvalidArgument(f"epsilon must be +1 or -1, got {self.epsilon}")

    @property
    def n(self) -> int:
        return spin_rank(self.N)

    @property
    def d(self) -> int:
        return self.N

    @property
    def D(self) -> int:
        return super_dimension(self.N) + self.D_offset

    @property
    def sigma(self) -> int:
        return sigma(self.N)

    @property
    def kappa(self) -> int:
        return kappa(self.N)

    def word(self, letters: str) -> ModuleWord:
        return ModuleWord(letters, self.N, self.epsilon)

    def evaluate(self, coeff: ParamScalar) -> CycloScalar:
        """Specialize a coefficient at d = N and D = sigma_N 2^n (+ offset)."""
        return coeff.evaluate(self.d, self.D)

    def with_offset(self, offset: Optional[int]) -> "IncarnationParams":
        return IncarnationParams(self.N, self.epsilon, offset or 0)

    def label(self) -> str:
        text = f"N={self.N}, epsilon={self.epsilon:+d}"
        if self.D_offset:
            text += f", D offset {self.D_offset:+d}"
        return text
