"""Dense immutable matrices over Python integers or Fractions."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence


class ExactMatrix:
    """Row-major dense matrix with exact entries.

    Entries are stored as given (``int`` or ``Fraction``); arithmetic never
    leaves the rationals.  Instances are immutable and hashable.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Rational]):
        entries = tuple(entries)
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> ExactMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ExactMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Rational]) -> ExactMatrix:
        n = len(values)
        return cls(n, n, (values[i] if i == j else 0 for i in range(n) for j in range(n)))

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self) -> Iterator[tuple]:
        for i in range(self.rows):
            yield self.row(i)

    def diag(self) -> list:
        return [self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols))]

    def trace(self):
        return sum(self.diag())

    # algebra

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix(
            self.cols, self.rows,
            (self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def transpose(self) -> ExactMatrix:
        return self.T

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        other_cols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in other_cols:
                out.append(sum(a * b for a, b in zip(r, c) if a and b))
        return ExactMatrix(self.rows, other.cols, out)

    def matvec(self, v: Sequence[Rational]) -> list:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not match {self.cols} columns")
        return [sum(a * b for a, b in zip(self.row(i), v) if a and b) for i in range(self.rows)]

    def _check_same_shape(self, other: ExactMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, (-a for a in self.entries))

    def scale(self, c: Rational) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, (c * a for a in self.entries))

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def exact_div(self, d: int) -> ExactMatrix:
        """Divide every entry by ``d``, keeping integers where the division is exact."""
        out = []
        for a in self.entries:
            q = Fraction(a) / d
            out.append(q.numerator if q.denominator == 1 else q)
        return ExactMatrix(self.rows, self.cols, out)

    def __pow__(self, k: int) -> ExactMatrix:
        if not self.is_square or k < 0:
            raise ValueError("matrix powers need a square matrix and k >= 0")
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # comparison / display

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i * self.cols + j] == 0
            for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ExactMatrix.from_rows({self.to_rows()!r})"

    def pretty(self) -> str:
        """Bracketed, right-aligned layout."""
        if not self.rows:
            return "[]"
        cells = [[str(x) for x in r] for r in self]
        width = max((len(c) for r in cells for c in r), default=1)
        lines = ["[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells]
        return "\n".join(lines)


# Exact rational matrices share the same container.
RationalMatrix = ExactMatrix


def as_matrix(a) -> ExactMatrix:
    """Coerce nested sequences (or an ExactMatrix) into an ExactMatrix."""
    if isinstance(a, ExactMatrix):
        return a
    return ExactMatrix.from_rows(a)
