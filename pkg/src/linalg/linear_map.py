"""Sparse exact matrices over Q(zeta_8)."""

from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from src.exactnum import CycloScalar, Scalar
from src.utils.errors import ShapeError

Column = Dict[int, CycloScalar]
Entry = Tuple[int, int, CycloScalar]


def add_into(target: Column, source: Column, scale: Optional[Scalar] = None) -> None:
    """target += scale * source, dropping cancelled entries."""
    for row, value in source.items():
        if scale is not None:
            value = value * scale
        total = target.get(row)
        total = value if total is None else total + value
        if total.is_zero():
            target.pop(row, None)
        else:
            target[row] = total


class LinearMap:
    """
    Sparse matrix stored by columns, with optional domain/codomain labels.

    Column j holds the image of the j-th domain basis vector. Labels are the module
    words the map goes between; arithmetic only checks the dimensions.
    """

    __slots__ = ("rows", "cols", "columns", "domain", "codomain")

    def __init__(
        self,
        rows: int,
        cols: int,
        columns: Optional[Dict[int, Column]] = None,
        domain: Any = None,
        codomain: Any = None,
    ) -> None:
        self.rows: int = rows
        self.cols: int = cols
        self.columns: Dict[int, Column] = {}
        for j, column in (columns or {}).items():
            kept = {i: v for i, v in column.items() if not v.is_zero()}
            if kept:
                self.columns[j] = kept
        self.domain = domain
        self.codomain = codomain

    @classmethod
    def identity(cls, size: int, word: Any = None) -> "LinearMap":
        one = CycloScalar.of(1)
        return cls(size, size, {j: {j: one} for j in range(size)}, word, word)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "LinearMap":
        return cls(rows, cols)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Entry]) -> "LinearMap":
        columns: Dict[int, Column] = {}
        for i, j, value in entries:
            add_into(columns.setdefault(j, {}), {i: CycloScalar.of(value)})
        return cls(rows, cols, columns)

    @classmethod
    def from_rows(cls, data: List[List[Scalar]]) -> "LinearMap":
        """Build from a dense row list, mostly for tests."""
        rows = len(data)
        cols = len(data[0]) if data else 0
        return cls.from_entries(
            rows,
            cols,
            ((i, j, CycloScalar.of(v)) for i, row in enumerate(data) for j, v in enumerate(row)),
        )

    def with_words(self, domain: Any, codomain: Any) -> "LinearMap":
        return LinearMap(self.rows, self.cols, self.columns, domain, codomain)

    def entries(self) -> Iterator[Entry]:
        """Nonzero entries in (row, col) order."""
        triples = [
            (i, j, value) for j, column in self.columns.items() for i, value in column.items()
        ]
        triples.sort(key=lambda t: (t[0], t[1]))
        return iter(triples)

    def get(self, row: int, col: int) -> CycloScalar:
        return self.columns.get(col, {}).get(row, CycloScalar.of(0))

    def column(self, col: int) -> Column:
        return self.columns.get(col, {})

    def apply(self, vector: Column) -> Column:
        """Matrix-vector product on a sparse column."""
        out: Column = {}
        for j, value in vector.items():
            column = self.columns.get(j)
            if column:
                add_into(out, column, value)
        return out

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Ordinary product: self after other."""
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = {j: self.apply(column) for j, column in other.columns.items()}
        return LinearMap(self.rows, other.cols, columns, other.domain, self.codomain)

    def then(self, other: "LinearMap") -> "LinearMap":
        """Apply self first, then other."""
        return other @ self

    def _check_same_shape(self, other: "LinearMap") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check_same_shape(other)
        columns = {j: dict(column) for j, column in self.columns.items()}
        for j, column in other.columns.items():
            add_into(columns.setdefault(j, {}), column)
        return LinearMap(self.rows, self.cols, columns, self.domain, self.codomain)

    def __neg__(self) -> "LinearMap":
        return self.scale(-1)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + (-other)

    def scale(self, factor: Scalar) -> "LinearMap":
        factor = CycloScalar.of(factor)
        if factor.is_zero():
            return LinearMap(self.rows, self.cols, None, self.domain, self.codomain)
        columns = {
            j: {i: v * factor for i, v in column.items()} for j, column in self.columns.items()
        }
        return LinearMap(self.rows, self.cols, columns, self.domain, self.codomain)

    def kron(self, other: "LinearMap") -> "LinearMap":
        """Kronecker product in row-major order: (a, b) -> a * dim_b + b."""
        columns: Dict[int, Column] = {}
        for ja, col_a in self.columns.items():
            for jb, col_b in other.columns.items():
                columns[ja * other.cols + jb] = {
                    ia * other.rows + ib: va * vb
                    for ia, va in col_a.items()
                    for ib, vb in col_b.items()
                }
        return LinearMap(self.rows * other.rows, self.cols * other.cols, columns)

    def transpose(self) -> "LinearMap":
        return LinearMap.from_entries(self.cols, self.rows, ((j, i, v) for i, j, v in self.entries()))

    def trace(self) -> CycloScalar:
        if self.rows != self.cols:
            raise ShapeError(f"trace of non-square {self.rows}x{self.cols} map")
        total = CycloScalar.of(0)
        for j, column in self.columns.items():
            if j in column:
                total = total + column[j]
        return total

    def commutator(self, other: "LinearMap") -> "LinearMap":
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return not self.columns

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self) -> int:
        from src.linalg.elimination import rank_of

        return rank_of(list(self.columns.values()))

    def first_difference(
        self, other: "LinearMap"
    ) -> Optional[Tuple[int, int, CycloScalar, CycloScalar]]:
        """Smallest (row, col) where the maps differ, with both values."""
        self._check_same_shape(other)
        diff = self - other
        for i, j, _ in diff.entries():
            return i, j, self.get(i, j), other.get(i, j)
        return None

    def scalar(self) -> CycloScalar:
        """The single entry of a 1x1 map."""
        if (self.rows, self.cols) != (1, 1):
            raise ShapeError(f"expected a 1x1 map, got {self.rows}x{self.cols}")
        return self.get(0, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return self.columns == other.columns

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self.entries())))

    def to_triplets(self) -> Dict[str, Any]:
        """JSON sparse triplet form: {"dims": [r, c], "entries": [[i, j, text], ...]}."""
        return {
            "dims": [self.rows, self.cols],
            "entries": [[i, j, str(v)] for i, j, v in self.entries()],
        }

    @classmethod
    def from_triplets(cls, data: Dict[str, Any]) -> "LinearMap":
        rows, cols = data["dims"]
        return cls.from_entries(
            rows, cols, ((i, j, CycloScalar.parse(text)) for i, j, text in data["entries"])
        )

    def __repr__(self) -> str:
        return f"LinearMap({self.rows}x{self.cols}, nnz={sum(len(c) for c in self.columns.values())})"
