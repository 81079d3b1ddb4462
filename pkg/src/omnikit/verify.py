"""Deciding the omnimosaic property and locating targets by search.

coverage() enumerates every k-subset of rows crossed with every k-subset of
columns, encodes each induced submatrix and marks it in a bitset over the
a^(k*k) target codes.  The enumeration is exact; the only approximation
anywhere is the guard that refuses target spaces too large to bitset.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from omnikit.core import MosaicError, MosaicMatrix, target_space
from omnikit.construct import Placement

DEFAULT_COVERAGE_GUARD = 2**32
DEFAULT_MISSING_CAP = 32


@dataclass
class CoverageSet:
    """Bitset over target codes; bit c is set iff target c occurs as a submatrix."""

    k: int
    a: int
    bits: np.ndarray

    @property
    def popcount(self) -> int:
        return int(np.count_nonzero(self.bits))

    def covered(self, code: int) -> bool:
        return bool(self.bits[code])

    def missing_codes(self, limit: int = DEFAULT_MISSING_CAP) -> list[int]:
        missing = np.flatnonzero(~self.bits)
        return [int(c) for c in missing[:limit]]


@dataclass
class VerifyReport:
    is_omni: bool
    covered: int
    total_targets: int
    missing_sample: list[int] = field(default_factory=list)
    submatrices_enumerated: int = 0
    elapsed: float = 0.0


def _column_words(arr: np.ndarray, row_subset, rowpow: np.ndarray) -> np.ndarray:
    return rowpow @ arr[list(row_subset), :]


def _powers(k: int, a: int) -> tuple[np.ndarray, np.ndarray]:
    rowpow = np.array([a ** (k * (k - 1 - i)) for i in range(k)], dtype=np.int64)
    colpow = np.array([a ** (k - 1 - j) for j in range(k)], dtype=np.int64)
    return rowpow, colpow


def coverage(
    m: MosaicMatrix, k: int, guard: int = DEFAULT_COVERAGE_GUARD
) -> CoverageSet:
    if k < 1:
        raise MosaicError("k must be >= 1")
    size = target_space(k, m.a)
    if size > guard:
        raise MosaicError(
            f"target space {size} exceeds coverage guard {guard}; "
            "check individual targets with contains_target instead"
        )
    bits = np.zeros(size, dtype=bool)
    if k > m.rows or k > m.cols:
        return CoverageSet(k, m.a, bits)
    arr = m.to_numpy()
    rowpow, colpow = _powers(k, m.a)
    colsubs = np.array(list(combinations(range(m.cols), k)), dtype=np.int64)
    for rows in combinations(range(m.rows), k):
        words = _column_words(arr, rows, rowpow)
        codes = words[colsubs] @ colpow
        bits[codes] = True
    return CoverageSet(k, m.a, bits)


def is_omnimosaic(
    m: MosaicMatrix,
    k: int,
    guard: int = DEFAULT_COVERAGE_GUARD,
    missing_cap: int = DEFAULT_MISSING_CAP,
) -> VerifyReport:
    start = time.perf_counter()
    cov = coverage(m, k, guard=guard)
    total = len(cov.bits)
    covered = cov.popcount
    n_rows = 0 if k > m.rows else math.comb(m.rows, k)
    n_cols = 0 if k > m.cols else math.comb(m.cols, k)
    return VerifyReport(
        is_omni=(covered == total),
        covered=covered,
        total_targets=total,
        missing_sample=[] if covered == total else cov.missing_codes(missing_cap),
        submatrices_enumerated=n_rows * n_cols,
        elapsed=time.perf_counter() - start,
    )


def contains_target(m: MosaicMatrix, t: MosaicMatrix) -> Placement | None:
    """Lexicographically least placement of target t in m, or None.

    For each row k-subset in lexicographic order, the target's column words
    are matched greedily left to right against m's column words restricted to
    those rows; for fixed rows greedy leftmost matching is exact, since the
    column choices are order-constrained but otherwise independent.
    """
    if t.rows != t.cols:
        raise MosaicError("target must be square")
    if t.a != m.a:
        raise MosaicError("alphabet mismatch")
    k = t.rows
    if k > m.rows or k > m.cols:
        raise MosaicError("target larger than host matrix")
    arr = m.to_numpy()
    rowpow, colpow = _powers(k, m.a)
    tarr = t.to_numpy()
    twords = rowpow @ tarr
    for rows in combinations(range(m.rows), k):
        words = _column_words(arr, rows, rowpow)
        cols = []
        pos = 0
        for j in range(k):
            hits = np.flatnonzero(words[pos:] == twords[j])
            if hits.size == 0:
                break
            pos += int(hits[0])
            cols.append(pos)
            pos += 1
        if len(cols) == k:
            return Placement(tuple(rows), tuple(cols))
    return None


def verify_placement(m: MosaicMatrix, p: Placement, t: MosaicMatrix) -> bool:
    if len(p.row_idx) != t.rows or len(p.col_idx) != t.cols:
        return False
    if p.row_idx[-1] >= m.rows or p.col_idx[-1] >= m.cols:
        raise MosaicError("placement out of bounds")
    for i, ri in enumerate(p.row_idx):
        for j, cj in enumerate(p.col_idx):
            if m.at(ri, cj) != t.at(i, j):
                return False
    return True
