"""Dense exact linear algebra over a finite-field context.

Matrices store row-major integer element codes and are immutable values;
all operations are pure.  Elimination uses first-nonzero pivoting with
lowest-row-index tie-breaking, so echelon forms (and therefore text output)
are reproducible.

Text format: first line ``"rows cols"``, then one line of space-separated
codes per row.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import CtxMismatch, FieldCtx, FieldElem


class MatrixError(Exception):
    pass


class NotSquare(MatrixError):
    pass


class DimMismatch(MatrixError):
    pass


class ZeroScale(MatrixError):
    pass


class DuplicateNodes(MatrixError):
    pass


class FieldMatrix:
    """A rows-by-cols matrix of element codes over a fixed FieldCtx."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, rows: Iterable[Iterable[int]], *, cols: int | None = None):
        row_tuples = [tuple(int(c) for c in r) for r in rows]
        if row_tuples:
            cols = len(row_tuples[0])
            if any(len(r) != cols for r in row_tuples):
                raise DimMismatch("ragged rows")
        elif cols is None:
            raise DimMismatch("empty matrix needs an explicit column count")
        flat = tuple(c for r in row_tuples for c in r)
        for c in flat:
            if not 0 <= c < ctx.q:
                raise ValueError(f"entry {c} outside [0, {ctx.q})")
        self.ctx = ctx
        self.rows = len(row_tuples)
        self.cols = cols
        self.data = flat

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "FieldMatrix":
        return cls(ctx, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "FieldMatrix":
        return cls(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, ctx: FieldCtx, rows: int, cols: int, data: Sequence[int]) -> "FieldMatrix":
        if len(data) != rows * cols:
            raise DimMismatch(f"need {rows * cols} entries, got {len(data)}")
        return cls(ctx, [data[i * cols : (i + 1) * cols] for i in range(rows)], cols=cols)

    # -- access ----------------------------------------------------------------

    def at(self, i: int, j: int) -> int:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.ctx == other.ctx
            and (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols} over GF({self.ctx.q}))"

    # -- structural operations ---------------------------------------------------

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.ctx,
            [[self.at(i, j) for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def matmul(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.ctx != other.ctx:
            raise CtxMismatch("matrix product across different contexts")
        if self.cols != other.rows:
            raise DimMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        add, mul = self.ctx.add, self.ctx.mul
        out = []
        bt = [other.row(i) for i in range(other.rows)]
        for i in range(self.rows):
            arow = self.row(i)
            orow = [0] * other.cols
            for k, a in enumerate(arow):
                if a:
                    brow = bt[k]
                    for j in range(other.cols):
                        if brow[j]:
                            orow[j] = add(orow[j], mul(a, brow[j]))
            out.append(orow)
        return FieldMatrix(self.ctx, out, cols=other.cols)

    __matmul__ = matmul

    def scale_columns(self, scalars: Sequence[int]) -> "FieldMatrix":
        """Multiply column j by scalars[j]; every scalar must be nonzero."""
        if len(scalars) != self.cols:
            raise DimMismatch(f"need {self.cols} column scalars, got {len(scalars)}")
        if any(d == 0 for d in scalars):
            raise ZeroScale("column scalars must be nonzero")
        mul = self.ctx.mul
        return FieldMatrix(
            self.ctx,
            [[mul(self.at(i, j), scalars[j]) for j in range(self.cols)] for i in range(self.rows)],
            cols=self.cols,
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.data)

    # -- elimination ---------------------------------------------------------------

    def _rref_pivots(self) -> tuple[list[list[int]], list[int]]:
        ctx = self.ctx
        work = self.to_lists()
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = None
            for i in range(r, self.rows):
                if work[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            inv = ctx.inv(work[r][c])
            if inv != 1:
                work[r] = [ctx.mul(inv, x) for x in work[r]]
            for i in range(self.rows):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return work, pivots

    def rref(self) -> "FieldMatrix":
        work, _ = self._rref_pivots()
        return FieldMatrix(self.ctx, work, cols=self.cols)

    def rank(self) -> int:
        return len(self._rref_pivots()[1])

    def null_space(self) -> "FieldMatrix":
        """Basis of the right kernel, one row per free column (ascending)."""
        work, pivots = self._rref_pivots()
        ctx = self.ctx
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [0] * self.cols
            vec[f] = 1
            for r, c in enumerate(pivots):
                vec[c] = ctx.neg(work[r][f])
            basis.append(vec)
        return FieldMatrix(ctx, basis, cols=self.cols)

    def det(self) -> FieldElem:
        if self.rows != self.cols:
            raise NotSquare(f"determinant of {self.rows}x{self.cols} matrix")
        ctx = self.ctx
        n = self.rows
        work = self.to_lists()
        det = 1
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if work[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return ctx.elem(0)
            if pivot_row != c:
                work[c], work[pivot_row] = work[pivot_row], work[c]
                det = ctx.neg(det)
            piv = work[c][c]
            det = ctx.mul(det, piv)
            inv = ctx.inv(piv)
            for i in range(c + 1, n):
                if work[i][c]:
                    f = ctx.mul(work[i][c], inv)
                    work[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(work[i], work[c])]
        return ctx.elem(det)

    def inverse(self) -> "FieldMatrix":
        if self.rows != self.cols:
            raise NotSquare(f"inverse of {self.rows}x{self.cols} matrix")
        n = self.rows
        aug = FieldMatrix(
            self.ctx,
            [list(self.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)],
        )
        red, pivots = aug._rref_pivots()
        if pivots != list(range(n)):
            raise MatrixError("matrix is singular")
        return FieldMatrix(self.ctx, [r[n:] for r in red], cols=n)

    # -- text format ------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(map(str, self.row(i))) for i in range(self.rows)]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, ctx: FieldCtx, text: str) -> "FieldMatrix":
        lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
        rows, cols = map(int, lines[0].split())
        if len(lines) != rows + 1:
            raise DimMismatch(f"expected {rows} rows, got {len(lines) - 1}")
        data = [[int(t) for t in ln.split()] for ln in lines[1:]]
        if any(len(r) != cols for r in data):
            raise DimMismatch("row length differs from header")
        return cls(ctx, data, cols=cols)


def vandermonde_skip_det(ctx: FieldCtx, xs: Sequence[int]) -> FieldElem:
    """(sum xs) * prod_{i<j} (xs[j] - xs[i]) for pairwise-distinct nodes.

    Equals the determinant of the modified Vandermonde matrix whose rows are
    the power rows 1, x, ..., x**(n-2) followed by x**n (the x**(n-1) row is
    skipped).
    """
    nodes = [ctx._check(int(x)) for x in xs]
    if len(nodes) < 2:
        raise ValueError("need at least two nodes")
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodes(f"nodes must be pairwise distinct: {nodes}")
    total = 0
    for x in nodes:
        total = ctx.add(total, x)
    prod = 1
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            prod = ctx.mul(prod, ctx.sub(nodes[j], nodes[i]))
    return ctx.elem(ctx.mul(total, prod))
