"""Dense GF(2) vectors and matrices packed into Python ints.

Coordinate ``i`` (0-based) of a vector lives in bit ``i`` of its integer, so
the leftmost character of a bit string ("coordinate 1") is the least
significant bit.  Matrix rows are packed the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import FormatError, ShapeError


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_to_int(bits: Iterable[int]) -> int:
    value = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit {i + 1} is {b!r}, expected 0 or 1")
        if b:
            value |= 1 << i
    return value


def int_to_str(value: int, length: int) -> str:
    return "".join("1" if (value >> i) & 1 else "0" for i in range(length))


def str_to_int(text: str) -> int:
    value = 0
    for i, ch in enumerate(text):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise FormatError(f"invalid bit character {ch!r}", position=i + 1)
    return value


@dataclass(frozen=True)
class BitVector:
    length: int
    value: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ShapeError("vector length must be nonnegative")
        if self.value < 0 or self.value >> self.length:
            raise ShapeError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> BitVector:
        return cls(len(text), str_to_int(text))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BitVector:
        return cls(len(bits), bits_to_int(int(b) for b in bits))

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return int_to_str(self.value, self.length)

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return (self.value >> (i % self.length)) & 1

    def __iter__(self):
        return (self[i] for i in range(self.length))

    def __xor__(self, other: BitVector) -> BitVector:
        _same_length(self, other)
        return BitVector(self.length, self.value ^ other.value)

    def __and__(self, other: BitVector) -> BitVector:
        _same_length(self, other)
        return BitVector(self.length, self.value & other.value)

    def dot(self, other: BitVector) -> int:
        _same_length(self, other)
        return parity(self.value & other.value)

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def support(self) -> list[int]:
        """Coordinates (0-based) where the vector is 1."""
        return [i for i in range(self.length) if (self.value >> i) & 1]

    def to_array(self) -> np.ndarray:
        return np.array(list(self), dtype=np.uint8)


def _same_length(u: BitVector, v: BitVector) -> None:
    if u.length != v.length:
        raise ShapeError(f"length mismatch: {u.length} vs {v.length}")


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; ``rows[i]`` is row ``i`` packed as an int."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 1 or self.ncols < 1:
            raise ShapeError("matrix must have at least one row and one column")
        if len(self.rows) != self.nrows:
            raise ShapeError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for row in self.rows:
            if row < 0 or row >> self.ncols:
                raise ShapeError(f"row value {row} does not fit in {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        if not rows:
            raise ShapeError("matrix must have at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(bits_to_int(int(b) for b in r) for r in rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        if not rows:
            raise ShapeError("matrix must have at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(str_to_int(r) for r in rows))

    @classmethod
    def from_array(cls, array) -> BitMatrix:
        a = np.asarray(array)
        if a.ndim != 2:
            raise ShapeError("expected a 2-d array")
        return cls.from_rows((a % 2).astype(int).tolist())

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> BitMatrix:
        """Build from packed columns (bit ``i`` of a column is row ``i``)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in range(nrows):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(index)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column(self, j: int) -> BitVector:
        return BitVector(self.nrows, self.column_int(j))

    def column_int(self, j: int) -> int:
        col = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                col |= 1 << i
        return col

    def transpose(self) -> BitMatrix:
        return BitMatrix(self.ncols, self.nrows, tuple(self.column_int(j) for j in range(self.ncols)))

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            for j in range(self.ncols):
                out[i, j] = (row >> j) & 1
        return out

    def to_strings(self) -> list[str]:
        return [int_to_str(row, self.ncols) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def mat_vec(M: BitMatrix, v: BitVector) -> BitVector:
    if v.length != M.ncols:
        raise ShapeError(f"matrix has {M.ncols} columns but vector has length {v.length}")
    return BitVector(M.nrows, mat_vec_int(M.rows, v.value))


def mat_vec_int(rows: Sequence[int], x: int) -> int:
    out = 0
    for i, row in enumerate(rows):
        if (row & x).bit_count() & 1:
            out |= 1 << i
    return out


def rref(M: BitMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns ``(rows, pivots)``: the nonzero reduced rows and, for each, the
    column index of its pivot.  Pivot columns are increasing.
    """
    work = list(M.rows)
    pivots: list[int] = []
    top = 0
    for col in range(M.ncols):
        bit = 1 << col
        pivot = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(M: BitMatrix) -> int:
    return len(rref(M)[1])


def solve(M: BitMatrix, b: BitVector) -> BitVector | None:
    """A solution of ``M x = b``, or ``None`` if the system is inconsistent.

    Free variables are set to 0, so the answer is deterministic.
    """
    if b.length != M.nrows:
        raise ShapeError(f"matrix has {M.nrows} rows but right-hand side has length {b.length}")
    # Row-reduce the augmented matrix [M | b]; the rhs sits in bit ncols.
    aug = BitMatrix(M.nrows, M.ncols + 1, tuple(row | (((b.value >> i) & 1) << M.ncols) for i, row in enumerate(M.rows)))
    reduced, pivots = rref(aug)
    x = 0
    for row, col in zip(reduced, pivots):
        if col == M.ncols:
            return None
        if (row >> M.ncols) & 1:
            x |= 1 << col
    return BitVector(M.ncols, x)


def nullspace_basis(M: BitMatrix) -> list[BitVector]:
    """Basis of ``{x : M x = 0}``, one vector per free column in increasing order."""
    reduced, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        x = 1 << free
        for row, col in zip(reduced, pivots):
            if (row >> free) & 1:
                x |= 1 << col
        basis.append(BitVector(M.ncols, x))
    return basis


def span(generators: Sequence[int]) -> list[int]:
    """All XOR combinations of packed generators, in counter order.

    Entry ``j`` is the combination selecting generator ``i`` iff bit ``i`` of
    ``j`` is set.  Duplicates appear when the generators are dependent.
    """
    out = [0]
    for g in generators:
        out += [v ^ g for v in out]
    return out
