"""Exact existence/nonexistence search for small omnimosaics.

The depth-first search fills the n-by-n matrix cell by cell in row-major
order and visits canonical representatives only:

* letter canonicalization: the first occurrences of letters in reading
  order are 0, 1, 2, ...;
* rows are constrained to be nondecreasing lexicographically.

Both constraints are sound for existence: iterating "relabel letters by
first occurrence, then sort rows" strictly decreases the row-major reading
value until a fixpoint, so every row-permutation/letter-permutation orbit
contains a representative satisfying both.  An exhausted search at size n
is therefore a proof of nonexistence.

Pruning: placements lying entirely inside the filled rows are final, so a
branch dies as soon as the codes covered so far plus the number of
placements touching an unfilled row cannot reach a^(k*k).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations, permutations

from omnikit.core import MosaicError, MosaicMatrix
from omnikit.verify import is_omnimosaic
from omnikit import bounds

FOUND = "found"
EXHAUSTED_NONE = "exhausted_none"
BUDGET_EXCEEDED = "budget_exceeded"

_BUDGET_CHECK_MASK = 0xFFF


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise MosaicError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise MosaicError("max_seconds must be positive")


@dataclass
class SearchResult:
    status: str
    witness: MosaicMatrix | None
    nodes: int
    elapsed: float


class _Budget(Exception):
    pass


def row_letter_necessity(n: int, k: int, a: int) -> bool:
    """Counting argument: must every row of an O(n,k,a) contain all letters?

    True iff the targets using a given letter outnumber the submatrix
    capacity of the matrix minus one row:
    a^(k*k) - (a-1)^(k*k) > C(n-1,k) * C(n,k).
    The argument is exact for k=2; for larger k it is the same arithmetic
    and remains a valid sufficient condition.
    """
    lhs = a ** (k * k) - (a - 1) ** (k * k)
    rhs = math.comb(n - 1, k) * math.comb(n, k)
    return lhs > rhs


class _Searcher:
    def __init__(self, n, k, a, budget, require_all_letters):
        self.n, self.k, self.a = n, k, a
        self.budget = budget or SearchBudget()
        self.require_all_letters = require_all_letters
        self.nodes = 0
        self.start = time.perf_counter()
        self.total_targets = a ** (k * k)
        self.col_subs = list(combinations(range(n), k))
        self.n_colsubs = len(self.col_subs)
        self.total_placements = math.comb(n, k) ** 2
        # placements fully inside the first m rows, by m
        self.inside = [math.comb(m, k) * self.n_colsubs for m in range(n + 1)]
        self.colpow = [a ** (k - 1 - j) for j in range(k)]
        self.rowpow = [a ** (k * (k - 1 - i)) for i in range(k)]
        self.grid = [[0] * n for _ in range(n)]
        self.witness = None

    def _tick(self):
        self.nodes += 1
        if self.nodes & _BUDGET_CHECK_MASK:
            return
        b = self.budget
        if b.max_nodes is not None and self.nodes >= b.max_nodes:
            raise _Budget()
        if b.max_seconds is not None and time.perf_counter() - self.start >= b.max_seconds:
            raise _Budget()

    def _new_codes(self, top_row: int) -> set[int]:
        """Codes of placements whose maximal row is top_row."""
        k, n, a = self.k, self.n, self.a
        if top_row < k - 1:
            return set()
        grid = self.grid
        out = set()
        for rest in combinations(range(top_row), k - 1):
            rows = rest + (top_row,)
            words = [
                sum(self.rowpow[i] * grid[rows[i]][c] for i in range(k))
                for c in range(n)
            ]
            for cols in self.col_subs:
                out.add(sum(self.colpow[j] * words[cols[j]] for j in range(k)))
        return out

    def search(self) -> bool:
        return self._fill(0, 0, 0, False, set())

    def _fill(self, i, j, used, tie, covered) -> bool:
        n, a = self.n, self.a
        if j == n:
            if self.require_all_letters and len(set(self.grid[i])) != a:
                return False
            covered = covered | self._new_codes(i)
            if len(covered) + (self.total_placements - self.inside[i + 1]) < self.total_targets:
                return False
            if i == n - 1:
                if len(covered) == self.total_targets:
                    self.witness = MosaicMatrix.from_rows(self.grid, a)
                    return True
                return False
            return self._fill(i + 1, 0, used, True, covered)
        lo = self.grid[i - 1][j] if (tie and i > 0) else 0
        hi = min(used, a - 1)
        row = self.grid[i]
        for letter in range(lo, hi + 1):
            self._tick()
            row[j] = letter
            new_tie = tie and i > 0 and letter == self.grid[i - 1][j]
            if self._fill(i, j + 1, max(used, letter + 1), new_tie, covered):
                return True
        row[j] = 0
        return False


def exists_omnimosaic(
    n: int,
    k: int,
    a: int,
    budget: SearchBudget | None = None,
    require_all_letters: bool | None = None,
) -> SearchResult:
    """Decide whether an O(n,k,a) omnimosaic exists, by canonical DFS.

    require_all_letters defaults to row_letter_necessity(n,k,a), i.e. the
    per-row constraint is applied only when the counting argument proves it.
    """
    if n < k:
        raise MosaicError("n must be >= k")
    if a < 2:
        raise MosaicError(f"alphabet size must be >= 2, got {a}")
    if require_all_letters is None:
        require_all_letters = row_letter_necessity(n, k, a)
    s = _Searcher(n, k, a, budget, require_all_letters)
    try:
        found = s.search()
    except _Budget:
        return SearchResult(BUDGET_EXCEEDED, None, s.nodes, time.perf_counter() - s.start)
    elapsed = time.perf_counter() - s.start
    if found:
        report = is_omnimosaic(s.witness, k)
        if not report.is_omni:
            raise AssertionError("search produced a non-omni witness")
        return SearchResult(FOUND, s.witness, s.nodes, elapsed)
    return SearchResult(EXHAUSTED_NONE, None, s.nodes, elapsed)


def min_omnimosaic_n(
    k: int, a: int, budget: SearchBudget | None = None, max_n: int | None = None
) -> list[tuple[int, SearchResult]]:
    """Trace of exists_omnimosaic from the pigeonhole bound upward.

    Stops at the first found size (that size is omega(k,a) when every
    earlier verdict is exhausted_none), on budget exhaustion, or at max_n.
    """
    trace: list[tuple[int, SearchResult]] = []
    n = bounds.pigeonhole_min_n(k, a)
    while True:
        result = exists_omnimosaic(n, k, a, budget=budget)
        trace.append((n, result))
        if result.status != EXHAUSTED_NONE:
            return trace
        if max_n is not None and n >= max_n:
            return trace
        n += 1


_CANONICALIZE_MAX_A = 8


def canonicalize(m: MosaicMatrix) -> MosaicMatrix:
    """Orbit representative under row permutations and letter permutations.

    Returns the minimum, over all letter permutations, of the row-sorted
    relabeled matrix; minimum is taken in row-major reading order.  This is
    idempotent and constant on orbits.  Guarded to a <= 8 (a! candidates).
    """
    if m.a > _CANONICALIZE_MAX_A:
        raise MosaicError(f"canonicalize supports a <= {_CANONICALIZE_MAX_A}")
    best: tuple[tuple[int, ...], ...] | None = None
    rows = m.to_rows()
    for perm in permutations(range(m.a)):
        relabeled = sorted(tuple(perm[e] for e in row) for row in rows)
        candidate = tuple(relabeled)
        if best is None or candidate < best:
            best = candidate
    return MosaicMatrix.from_rows(best, m.a)
