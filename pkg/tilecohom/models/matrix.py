from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from tilecohom.exceptions import ShapeError


@dataclass(frozen=True)
class IntMatrix:
    """Matriz entera exacta (enteros de Python, sin desbordamiento)"""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(detail=f"Invalid shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                detail=f"Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix, got {len(self.entries)}"
            )

    # ---------- Constructores ----------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        """Construir una matriz a partir de sus filas"""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeError(detail=f"Row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        """Construir una matriz a partir de sus columnas"""
        columns = [list(c) for c in columns]
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise ShapeError(detail=f"Column {j} has {len(c)} entries, expected {rows}")
        return cls(rows, len(columns), tuple(int(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(int(values[i]) if i == j else 0 for i in range(n) for j in range(n)))

    # ---------- Acceso ----------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> List[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> List[List[int]]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> List[List[int]]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # ---------- Aritmética ----------

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeError(detail=f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        left = self.to_rows()
        right = other.columns()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(sum(a * b for a, b in zip(r, c)) for r in left for c in right),
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ShapeError(detail=f"Cannot add {self.shape} and {other.shape}")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scaled(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(factor * a for a in self.entries))

    def power(self, exponent: int) -> "IntMatrix":
        if not self.is_square():
            raise ShapeError(detail=f"Power of non-square {self.rows}x{self.cols} matrix")
        result = IntMatrix.identity(self.rows)
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def apply(self, vector: Sequence[int]) -> List[int]:
        """Multiplicar la matriz por un vector columna"""
        if len(vector) != self.cols:
            raise ShapeError(detail=f"Vector of length {len(vector)} does not fit a {self.rows}x{self.cols} matrix")
        return [sum(self.entries[i * self.cols + j] * vector[j] for j in range(self.cols)) for i in range(self.rows)]

    # ---------- Bloques ----------

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ShapeError(detail=f"Cannot stack {self.shape} beside {other.shape}")
        return IntMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)], self.cols + other.cols)

    def select_rows(self, indices: Iterable[int]) -> "IntMatrix":
        indices = list(indices)
        return IntMatrix.from_rows([self.row(i) for i in indices], self.cols)

    def select_columns(self, indices: Iterable[int]) -> "IntMatrix":
        indices = list(indices)
        return IntMatrix.from_columns([self.column(j) for j in indices], self.rows)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.to_rows()) + "]"


@dataclass(frozen=True)
class SnfResult:
    """Forma normal de Smith con matrices de cambio de base: U·A·V = S"""
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> List[int]:
        """Entradas diagonales no nulas de S"""
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols)) if self.S[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)
