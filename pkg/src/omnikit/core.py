"""Domain types shared by every module: alphabets, matrices, target codes,
symmetry operations and the on-disk v1 matrix format.

Letters are 0-based internally ({0, ..., a-1}); any 1-based display is a
presentation concern only.  All types are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_TARGET_SPACE = 2**63


class MosaicError(ValueError):
    """Invalid matrix, alphabet or operation arguments."""


class ParseError(MosaicError):
    """Malformed matrix file; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if self.size < 2:
            raise MosaicError(f"alphabet size must be >= 2, got {self.size}")


@dataclass(frozen=True)
class MosaicMatrix:
    """Dense rectangular matrix over letters [0, a)."""

    rows: int
    cols: int
    a: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise MosaicError("matrix dimensions must be positive")
        if self.a < 2:
            raise MosaicError(f"alphabet size must be >= 2, got {self.a}")
        if len(self.entries) != self.rows * self.cols:
            raise MosaicError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not 0 <= e < self.a:
                raise MosaicError(f"entry {e} outside alphabet [0, {self.a})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], a: int) -> "MosaicMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise MosaicError("ragged rows")
            flat.extend(int(x) for x in row)
        return cls(r, c, a, tuple(flat))

    @classmethod
    def from_numpy(cls, arr: np.ndarray, a: int) -> "MosaicMatrix":
        arr = np.asarray(arr)
        return cls(arr.shape[0], arr.shape[1], a, tuple(int(x) for x in arr.ravel()))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "MosaicMatrix":
        ri = list(row_idx)
        ci = list(col_idx)
        flat = tuple(self.at(i, j) for i in ri for j in ci)
        return MosaicMatrix(len(ri), len(ci), self.a, flat)

    def transpose(self) -> "MosaicMatrix":
        flat = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return MosaicMatrix(self.cols, self.rows, self.a, flat)


def target_space(k: int, a: int) -> int:
    """Number of k-by-k targets, a**(k*k); rejects spaces beyond 2**63 codes."""
    size = a ** (k * k)
    if size > MAX_TARGET_SPACE:
        raise MosaicError("target space too large")
    return size


def encode_target(t: MosaicMatrix) -> int:
    """Row-major base-a code of a square target, most significant entry first."""
    if t.rows != t.cols:
        raise MosaicError("target must be square")
    target_space(t.rows, t.a)
    code = 0
    for e in t.entries:
        code = code * t.a + e
    return code


def decode_target(code: int, k: int, a: int) -> MosaicMatrix:
    size = target_space(k, a)
    if not 0 <= code < size:
        raise MosaicError(f"target code {code} out of range [0, {size})")
    digits = []
    for _ in range(k * k):
        digits.append(code % a)
        code //= a
    return MosaicMatrix(k, k, a, tuple(reversed(digits)))


def _is_permutation(perm: tuple[int, ...]) -> bool:
    return sorted(perm) == list(range(len(perm)))


@dataclass(frozen=True)
class SymmetryOp:
    """A bijection on fixed-shape matrices: row/column/letter permutation or transpose.

    For permutation kinds, ``perm[i]`` gives the source index of output slot i.
    """

    kind: str  # "rows" | "cols" | "letters" | "transpose"
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("rows", "cols", "letters", "transpose"):
            raise MosaicError(f"unknown symmetry kind {self.kind!r}")
        if self.kind == "transpose":
            if self.perm is not None:
                raise MosaicError("transpose takes no permutation")
        else:
            if self.perm is None or not _is_permutation(self.perm):
                raise MosaicError("permutation data required and must be a bijection")

    def inverse(self) -> "SymmetryOp":
        if self.kind == "transpose":
            return self
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return SymmetryOp(self.kind, tuple(inv))


def apply_symmetry(m: MosaicMatrix, op: SymmetryOp) -> MosaicMatrix:
    if op.kind == "transpose":
        return m.transpose()
    if op.kind == "rows":
        if len(op.perm) != m.rows:
            raise MosaicError("row permutation length mismatch")
        return MosaicMatrix.from_rows([list(m.row(p)) for p in op.perm], m.a)
    if op.kind == "cols":
        if len(op.perm) != m.cols:
            raise MosaicError("column permutation length mismatch")
        rows = [[m.at(i, p) for p in op.perm] for i in range(m.rows)]
        return MosaicMatrix.from_rows(rows, m.a)
    # letters
    if len(op.perm) != m.a:
        raise MosaicError("letter permutation must act on [0, a)")
    inv = op.inverse().perm
    return MosaicMatrix(m.rows, m.cols, m.a, tuple(inv[e] for e in m.entries))


MAGIC = "omnimosaic v1"


def serialize_matrix(m: MosaicMatrix) -> str:
    lines = [MAGIC, f"{m.rows} {m.cols} {m.a}"]
    for i in range(m.rows):
        lines.append(" ".join(str(e) for e in m.row(i)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> MosaicMatrix:
    lines = text.split("\n")
    if not lines or lines[0] != MAGIC:
        raise ParseError(f"expected header {MAGIC!r}", 1)
    if len(lines) < 2:
        raise ParseError("missing dimension line", 2)
    parts = lines[1].split()
    if len(parts) != 3:
        raise ParseError("dimension line must be '<rows> <cols> <a>'", 2)
    try:
        rows, cols, a = (int(p) for p in parts)
    except ValueError:
        raise ParseError("dimensions must be decimal integers", 2) from None
    if rows < 1 or cols < 1:
        raise ParseError("dimensions must be positive", 2)
    if a < 2:
        raise ParseError(f"alphabet size must be >= 2, got {a}", 2)
    entries: list[int] = []
    for i in range(rows):
        lineno = 3 + i
        if lineno - 1 >= len(lines):
            raise ParseError(f"missing row {i + 1}", lineno)
        fields = lines[lineno - 1].split()
        if len(fields) != cols:
            raise ParseError(f"expected {cols} entries, got {len(fields)}", lineno)
        for f in fields:
            try:
                e = int(f)
            except ValueError:
                raise ParseError(f"bad entry {f!r}", lineno) from None
            if not 0 <= e < a:
                raise ParseError(f"entry {e} outside alphabet [0, {a})", lineno)
            entries.append(e)
    tail = lines[2 + rows :]
    if tail != [""]:
        raise ParseError("expected single trailing newline after last row", 3 + rows)
    return MosaicMatrix(rows, cols, a, tuple(entries))
