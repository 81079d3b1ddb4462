"""Grid-diagram based omnimosaic construction.

A grid diagram assigns each cell of a k-by-k grid an orientation, H or V.
With r_i = number of H cells in row i and c_j = number of V cells in column
j, the construction produces a (sum_i a^r_i)-by-(sum_j a^c_j) matrix that
contains every k-by-k target, together with a region map that lets any
target be located in O(k^2) time without search.

The index-to-word bijection used for region rows/columns is fixed to base-a
encoding, most significant letter first, and H columns are enumerated in
ascending order; outputs are therefore byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from omnikit.core import MosaicError, MosaicMatrix

H = "H"
V = "V"

# Keeps constructed matrices comfortably addressable in memory.
MAX_DIMENSION = 2**26


@dataclass(frozen=True)
class GridDiagram:
    k: int
    cells: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise MosaicError("grid side must be >= 1")
        if len(self.cells) != self.k or any(len(r) != self.k for r in self.cells):
            raise MosaicError("grid must be k x k")
        for row in self.cells:
            for c in row:
                if c not in (H, V):
                    raise MosaicError(f"grid cell must be 'H' or 'V', got {c!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str]]) -> "GridDiagram":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    def row_counts(self) -> tuple[int, ...]:
        return tuple(sum(1 for c in row if c == H) for row in self.cells)

    def col_counts(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for i in range(self.k) if self.cells[i][j] == V) for j in range(self.k)
        )


@dataclass(frozen=True)
class RegionMap:
    """Prefix-sum geometry of the constructed matrix plus the H/V bijections.

    h_columns[i] lists, ascending, the columns of grid row i holding an H;
    v_rows[j] lists the rows of grid column j holding a V.
    """

    a: int
    row_offsets: tuple[int, ...]
    col_offsets: tuple[int, ...]
    h_columns: tuple[tuple[int, ...], ...]
    v_rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Placement:
    """Strictly increasing row and column indices selecting a submatrix."""

    row_idx: tuple[int, ...]
    col_idx: tuple[int, ...]

    def __post_init__(self):
        for idx in (self.row_idx, self.col_idx):
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise MosaicError("placement indices must be strictly increasing")
            if idx and idx[0] < 0:
                raise MosaicError("placement indices must be non-negative")


def canonical_grid(k: int) -> GridDiagram:
    """The balanced diagram: H where (i <= floor(k/2)) == (j <= ceil(k/2)), 1-based."""
    if k < 1:
        raise MosaicError("k must be >= 1")
    half_lo = k // 2
    half_hi = k - half_lo
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            top = i <= half_lo
            left = j <= half_hi
            row.append(H if top == left else V)
        rows.append(tuple(row))
    return GridDiagram(k, tuple(rows))


def _offsets(counts: Sequence[int], a: int) -> tuple[int, ...]:
    off = [0]
    for r in counts:
        off.append(off[-1] + a**r)
    return tuple(off)


def build_mosaic(grid: GridDiagram, a: int) -> tuple[MosaicMatrix, RegionMap]:
    """Fill the region matrix of a grid diagram.

    Region (i, j) with an H cell repeats, across all its columns, letter t of
    the base-a word indexing the local row, where j is the t-th H column of
    grid row i; V cells are filled symmetrically by local column.
    """
    if a < 2:
        raise MosaicError(f"alphabet size must be >= 2, got {a}")
    k = grid.k
    r_counts = grid.row_counts()
    c_counts = grid.col_counts()
    row_off = _offsets(r_counts, a)
    col_off = _offsets(c_counts, a)
    n_rows, n_cols = row_off[-1], col_off[-1]
    if n_rows > MAX_DIMENSION or n_cols > MAX_DIMENSION:
        raise MosaicError("constructed dimensions too large")

    h_columns = tuple(
        tuple(j for j in range(k) if grid.cells[i][j] == H) for i in range(k)
    )
    v_rows = tuple(
        tuple(i for i in range(k) if grid.cells[i][j] == V) for j in range(k)
    )

    out = np.zeros((n_rows, n_cols), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            r0, r1 = row_off[i], row_off[i + 1]
            c0, c1 = col_off[j], col_off[j + 1]
            if grid.cells[i][j] == H:
                t = h_columns[i].index(j)
                digits = (np.arange(r1 - r0) // a ** (r_counts[i] - 1 - t)) % a
                out[r0:r1, c0:c1] = digits[:, None]
            else:
                t = v_rows[j].index(i)
                digits = (np.arange(c1 - c0) // a ** (c_counts[j] - 1 - t)) % a
                out[r0:r1, c0:c1] = digits[None, :]

    rm = RegionMap(a, row_off, col_off, h_columns, v_rows)
    return MosaicMatrix.from_numpy(out, a), rm


def thin_strip(k: int, a: int) -> MosaicMatrix:
    """(k * a^k) x k matrix: all length-k words in code order, listed k times."""
    if a < 2:
        raise MosaicError(f"alphabet size must be >= 2, got {a}")
    if k < 1:
        raise MosaicError("k must be >= 1")
    words = a**k
    if k * words > MAX_DIMENSION:
        raise MosaicError("strip too large")
    codes = np.arange(words)
    block = np.stack(
        [(codes // a ** (k - 1 - t)) % a for t in range(k)], axis=1
    )
    return MosaicMatrix.from_numpy(np.tile(block, (k, 1)), a)


def square_side(k: int, a: int) -> int:
    lo, hi = k // 2, k - k // 2
    return hi * a**hi + lo * a**lo


def square_omnimosaic(k: int, a: int) -> MosaicMatrix:
    """Canonical-grid mosaic padded with duplicate last rows up to square shape."""
    m, _ = build_mosaic(canonical_grid(k), a)
    n = square_side(k, a)
    if m.cols != n:
        raise AssertionError("canonical grid column total disagrees with formula")
    if m.rows == n:
        return m
    arr = m.to_numpy()
    pad = np.tile(arr[-1], (n - m.rows, 1))
    return MosaicMatrix.from_numpy(np.vstack([arr, pad]), a)


def locate(rm: RegionMap, grid: GridDiagram, target: MosaicMatrix) -> Placement:
    """Constructively place a k-by-k target inside the mosaic built from grid.

    The row chosen in row-region i is the base-a value of the target entries
    at the H positions of grid row i; columns are symmetric.
    """
    k = grid.k
    if target.rows != k or target.cols != k:
        raise MosaicError(f"target must be {k}x{k}")
    if target.a != rm.a:
        raise MosaicError("alphabet mismatch between target and region map")
    rows = []
    for i in range(k):
        code = 0
        for j in rm.h_columns[i]:
            code = code * rm.a + target.at(i, j)
        rows.append(rm.row_offsets[i] + code)
    cols = []
    for j in range(k):
        code = 0
        for i in rm.v_rows[j]:
            code = code * rm.a + target.at(i, j)
        cols.append(rm.col_offsets[j] + code)
    return Placement(tuple(rows), tuple(cols))


def higher_dim_side_estimate(k: int, a: int, d: int) -> float:
    """Approximate side length k * a^(k^(d-1)/d) of the d-dimensional analog.

    Non-constructive: an estimate only, no d >= 3 builder is provided.
    """
    if d < 2:
        raise MosaicError("d must be >= 2")
    return k * a ** (k ** (d - 1) / d)
