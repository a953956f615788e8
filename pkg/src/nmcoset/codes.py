"""Binary linear codes described by a full-row-rank parity-check matrix."""

from __future__ import annotations

import os
import re
from typing import Sequence

import numpy as np

from .errors import BadParamsError, FormatError, RedundantRowsError
from .gf2 import BitMatrix, BitVector, mat_vec_int, nullspace_basis, rank, rref


class LinearCode:
    """An ``[n, n - r]`` code ``C = ker H`` with ``H`` an ``r x n`` matrix of rank ``r``.

    The dual code is the row span of ``H``.  Column syndromes and a kernel
    basis are precomputed for the enumeration routines.
    """

    def __init__(self, H: BitMatrix, name: str | None = None):
        rk = rank(H)
        if rk < H.nrows:
            raise RedundantRowsError(rk, H.nrows)
        self.H = H
        self.name = name or f"custom[{H.nrows}x{H.ncols}]"
        self.kernel_basis: tuple[BitVector, ...] = tuple(nullspace_basis(H))
        self.columns: tuple[int, ...] = tuple(H.column_int(j) for j in range(H.ncols))

    @property
    def n(self) -> int:
        return self.H.ncols

    @property
    def r(self) -> int:
        return self.H.nrows

    @property
    def k(self) -> int:
        return self.n - self.r

    def syndrome_int(self, x: int) -> int:
        return mat_vec_int(self.H.rows, x)

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.H == other.H

    def __hash__(self):
        return hash(self.H)

    def __repr__(self):
        return f"LinearCode({self.name!r}, n={self.n}, k={self.k}, r={self.r})"


def code_from_parity_check(H: BitMatrix, name: str | None = None) -> LinearCode:
    return LinearCode(H, name)


def reduce_parity_check(H: BitMatrix) -> BitMatrix:
    """Drop dependent rows of H (returned in reduced echelon form).

    This changes r, and with it the message space of the coset code.
    """
    reduced, _ = rref(H)
    if not reduced:
        raise BadParamsError("matrix has rank 0; no parity checks remain")
    return BitMatrix(len(reduced), H.ncols, tuple(reduced))


# -- built-in families -------------------------------------------------------

def hamming(m: int) -> LinearCode:
    """Hamming code; column j (1-based) of H is j written in binary, row 1 most significant."""
    if m < 2:
        raise BadParamsError("hamming requires m >= 2")
    n = (1 << m) - 1
    columns = []
    for j in range(1, n + 1):
        col = 0
        for i in range(m):
            if (j >> (m - 1 - i)) & 1:
                col |= 1 << i
        columns.append(col)
    return LinearCode(BitMatrix.from_columns(m, columns), f"hamming:{m}")


def repetition(n: int) -> LinearCode:
    """Repetition code; row i of H checks coordinate 1 against coordinate i + 1."""
    if n < 2:
        raise BadParamsError("repetition requires n >= 2")
    rows = tuple(1 | (1 << (i + 1)) for i in range(n - 1))
    return LinearCode(BitMatrix(n - 1, n, rows), f"repetition:{n}")


def parity(n: int) -> LinearCode:
    if n < 1:
        raise BadParamsError("parity requires n >= 1")
    return LinearCode(BitMatrix(1, n, ((1 << n) - 1,)), f"parity:{n}")


def random_code(n: int, r: int, seed: int) -> LinearCode:
    """Uniformly random full-rank ``r x n`` parity-check matrix (rejection sampling)."""
    if not 1 <= r <= n:
        raise BadParamsError("random requires 1 <= r <= n")
    rng = np.random.default_rng(seed)
    while True:
        H = BitMatrix.from_array(rng.integers(0, 2, size=(r, n)))
        if rank(H) == r:
            return LinearCode(H, f"random:{n}x{r}@{seed}")


BUILTINS = ("hamming", "repetition", "parity", "random")


def builtin_code(name: str, params: Sequence[int] | int | str, seed: int | None = None) -> LinearCode:
    """Construct a built-in code.

    ``params`` is an int, a sequence of ints, or the textual form used on the
    command line (``"3"`` or ``"8x3"`` for random codes).
    """
    if isinstance(params, str):
        try:
            params = [int(p) for p in re.split(r"[x,]", params)]
        except ValueError:
            raise BadParamsError(f"cannot parse parameters {params!r}") from None
    elif isinstance(params, int):
        params = [params]
    params = list(params)

    if name == "random":
        if len(params) != 2 or seed is None:
            raise BadParamsError("random requires (n, r) and a seed")
        return random_code(params[0], params[1], seed)
    if name not in BUILTINS:
        raise BadParamsError(f"unknown builtin code {name!r}; choose from {', '.join(BUILTINS)}")
    if len(params) != 1:
        raise BadParamsError(f"{name} takes exactly one parameter")
    return {"hamming": hamming, "repetition": repetition, "parity": parity}[name](params[0])


# -- file formats ------------------------------------------------------------

def parse_dense(text: str, name: str | None = None) -> LinearCode:
    """Parse the dense format: a header ``"r n"`` then r lines of n bits."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file", line=1)
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise FormatError("header must be 'r n'", line=1)
    r, n = int(header[0]), int(header[1])
    if r < 1 or n < 1:
        raise FormatError("r and n must be positive", line=1)
    if len(lines) != r + 1:
        raise FormatError(f"expected {r} matrix rows, found {len(lines) - 1}", line=min(len(lines), r + 1) + 1)
    rows = []
    for lineno, row in enumerate(lines[1:], start=2):
        if len(row) != n or set(row) - {"0", "1"}:
            raise FormatError(f"expected {n} characters from {{0,1}}", line=lineno)
        rows.append(row)
    return LinearCode(BitMatrix.from_strings(rows), name)


def format_dense(H: BitMatrix) -> str:
    return f"{H.nrows} {H.ncols}\n" + "".join(row + "\n" for row in H.to_strings())


def load_dense(path: str | os.PathLike) -> LinearCode:
    with open(path) as fh:
        return parse_dense(fh.read(), name=str(path))


def write_dense(H: BitMatrix, path: str | os.PathLike) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_dense(H))


def _int_line(lines, idx, count=None):
    lineno, text = lines[idx]
    try:
        values = [int(t) for t in text.split()]
    except ValueError:
        raise FormatError("expected integers", line=lineno) from None
    if count is not None and len(values) != count:
        raise FormatError(f"expected {count} integers, found {len(values)}", line=lineno)
    return lineno, values


def parse_alist(text: str, name: str | None = None) -> LinearCode:
    """Parse MacKay's alist format (``n r`` header, column then row lists).

    Zero entries in the index lists are padding and are ignored.  The row
    lists, when present, must agree with the column lists.
    """
    lines = [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if len(lines) < 4:
        raise FormatError("truncated alist header", line=len(lines) + 1)
    lineno, header = _int_line(lines, 0, 2)
    n, r = header
    if n < 1 or r < 1:
        raise FormatError("n and r must be positive", line=lineno)
    _int_line(lines, 1, 2)
    col_lineno, col_degrees = _int_line(lines, 2, n)
    _, row_degrees = _int_line(lines, 3, r)

    rows = [0] * r
    for j in range(n):
        if 4 + j >= len(lines):
            raise FormatError(f"missing index list for column {j + 1}", line=lines[-1][0] + 1)
        lineno, idxs = _int_line(lines, 4 + j)
        idxs = [i for i in idxs if i != 0]
        if len(idxs) != col_degrees[j]:
            raise FormatError(f"column {j + 1} lists {len(idxs)} entries, degree says {col_degrees[j]}", line=lineno)
        for i in idxs:
            if not 1 <= i <= r:
                raise FormatError(f"row index {i} out of range 1..{r}", line=lineno)
            rows[i - 1] |= 1 << j

    if len(lines) >= 4 + n + r:
        for i in range(r):
            lineno, idxs = _int_line(lines, 4 + n + i)
            idxs = [j for j in idxs if j != 0]
            if len(idxs) != row_degrees[i]:
                raise FormatError(f"row {i + 1} lists {len(idxs)} entries, degree says {row_degrees[i]}", line=lineno)
            packed = 0
            for j in idxs:
                if not 1 <= j <= n:
                    raise FormatError(f"column index {j} out of range 1..{n}", line=lineno)
                packed |= 1 << (j - 1)
            if packed != rows[i]:
                raise FormatError(f"row {i + 1} disagrees with the column lists", line=lineno)
    elif len(lines) > 4 + n:
        raise FormatError("incomplete row index lists", line=lines[-1][0])
    return LinearCode(BitMatrix(r, n, tuple(rows)), name)


def format_alist(H: BitMatrix) -> str:
    cols = [[i + 1 for i in range(H.nrows) if H[i, j]] for j in range(H.ncols)]
    rows = [[j + 1 for j in range(H.ncols) if H[i, j]] for i in range(H.nrows)]
    max_col = max(len(c) for c in cols)
    max_row = max(len(r) for r in rows)
    out = [f"{H.ncols} {H.nrows}", f"{max_col} {max_row}"]
    out.append(" ".join(str(len(c)) for c in cols))
    out.append(" ".join(str(len(r)) for r in rows))
    out += [" ".join(str(i) for i in c + [0] * (max_col - len(c))) for c in cols]
    out += [" ".join(str(j) for j in r + [0] * (max_row - len(r))) for r in rows]
    return "\n".join(out) + "\n"


def load_alist(path: str | os.PathLike) -> LinearCode:
    with open(path) as fh:
        return parse_alist(fh.read(), name=str(path))


def write_alist(H: BitMatrix, path: str | os.PathLike) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_alist(H))
