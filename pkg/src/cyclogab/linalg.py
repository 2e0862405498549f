"""Dense exact linear algebra over Q(zeta_p).

Determinants use division-free cofactor expansion up to 4x4 and fraction-free
(Bareiss) elimination above that, which keeps intermediate entries equal to
minors of the input and so bounds coefficient blowup.  Zero tests compare
canonical coefficient vectors, so they are exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclotomic import CycloElement, GaloisContext


class ExactMatrix:
    """Immutable dense matrix over Q(zeta_p), entries stored row-major."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: GaloisContext, rows: int, cols: int,
                 entries: Iterable[CycloElement]) -> None:
        es = tuple(entries)
        if len(es) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(es)}")
        for e in es:
            if not isinstance(e, CycloElement) or e.ctx.p != ctx.p:
                raise ValueError("all entries must share the matrix context")
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.entries = es

    @classmethod
    def from_rows(cls, ctx: GaloisContext, rows: Sequence[Sequence[CycloElement]]) -> ExactMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(ctx, r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, ctx: GaloisContext, n: int) -> ExactMatrix:
        one, zero = ctx.one(), ctx.zero()
        return cls(ctx, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ctx: GaloisContext, rows: int, cols: int) -> ExactMatrix:
        zero = ctx.zero()
        return cls(ctx, rows, cols, [zero] * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> CycloElement:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[CycloElement, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[CycloElement, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[CycloElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.ctx, self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> ExactMatrix:
        return ExactMatrix(self.ctx, len(row_idx), len(col_idx),
                           [self[i, j] for i in row_idx for j in col_idx])

    def column_subset(self, col_idx: Sequence[int]) -> ExactMatrix:
        return self.submatrix(range(self.rows), col_idx)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ctx.p != other.ctx.p:
            raise ValueError("context mismatch")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.ctx.zero()
        out = []
        for i in range(self.rows):
            lhs_row = self.row(i)
            for j in range(other.cols):
                acc = zero
                for t, a in enumerate(lhs_row):
                    if a:
                        b = other[t, j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return ExactMatrix(self.ctx, self.rows, other.cols, out)

    def det(self) -> CycloElement:
        """Exact determinant of a square matrix."""
        if self.rows != self.cols:
            raise ValueError(f"determinant needs a square matrix, got {self.rows}x{self.cols}")
        if self.rows <= 4:
            return _det_cofactor(self.ctx, self.row_lists())
        return _det_bareiss(self.ctx, self.row_lists())

    def rank(self) -> int:
        """Exact rank via elimination with exact pivot-zero tests."""
        work = self.row_lists()
        nr, nc = self.rows, self.cols
        r = 0
        for c in range(nc):
            piv = next((i for i in range(r, nr) if work[i][c]), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            inv = work[r][c].inverse()
            for i in range(r + 1, nr):
                if work[i][c]:
                    f = work[i][c] * inv
                    for j in range(c, nc):
                        work[i][j] = work[i][j] - f * work[r][j]
            r += 1
            if r == nr:
                break
        return r

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.ctx.p == other.ctx.p and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ExactMatrix(p={self.ctx.p}, {self.rows}x{self.cols})"

    def to_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [e.to_strings() for e in self.entries],
        }

    @classmethod
    def from_obj(cls, ctx: GaloisContext, obj: dict) -> ExactMatrix:
        entries = [CycloElement.from_strings(ctx, item) for item in obj["entries"]]
        return cls(ctx, int(obj["rows"]), int(obj["cols"]), entries)


def _det_cofactor(ctx: GaloisContext, m: list[list[CycloElement]]) -> CycloElement:
    n = len(m)
    if n == 0:
        return ctx.one()
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ctx.zero()
    for j, head in enumerate(m[0]):
        if not head:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = head * _det_cofactor(ctx, minor)
        total = total - term if j % 2 else total + term
    return total


def _det_bareiss(ctx: GaloisContext, m: list[list[CycloElement]]) -> CycloElement:
    # Fraction-free elimination: every division below is exact (the running
    # entries are minors of the original matrix).
    n = len(m)
    sign = 1
    prev_inv: CycloElement | None = None  # inverse of the previous pivot
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return ctx.zero()
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            lead = m[r][col]
            for c in range(col + 1, n):
                val = pivot * m[r][c] - lead * m[col][c]
                m[r][c] = val * prev_inv if prev_inv is not None else val
        if col < n - 2:
            prev_inv = pivot.inverse()
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def bordered_minor_row(block: ExactMatrix) -> tuple[CycloElement, ...]:
    """The k determinants det[e_j | block] for a k x (k-1) block, j = 1..k.

    Entry j is the signed maximal minor of the block with row j removed; the
    resulting vector v annihilates the block exactly: v . block = 0.
    """
    k = block.rows
    if block.cols != k - 1:
        raise ValueError(f"expected a {k}x{k - 1} block, got {block.rows}x{block.cols}")
    rows = block.row_lists()
    out = []
    for j in range(k):
        minor = rows[:j] + rows[j + 1:]
        d = _det_cofactor(block.ctx, minor) if k - 1 <= 4 else \
            ExactMatrix.from_rows(block.ctx, minor).det()
        out.append(d if j % 2 == 0 else -d)
    return tuple(out)
