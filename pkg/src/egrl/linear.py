"""Generic linear-code machinery: duals, exhaustive weight enumerators,
Singleton-defect classification, the MacWilliams transform, and the
closed-form weight distributions of NMDS codes.

Exhaustive enumeration walks all q**k messages in lexicographic order
(first generator row = most significant symbol).  Work is split into
contiguous lexicographic blocks -- the leading message symbols index the
blocks -- and per-block weight counts are merged by addition, so results
do not depend on the blocking.  Blocks are materialized as numpy arrays of
element codes whenever the context supports operation tables (q <= 512);
a plain-Python block builder covers larger fields, where the message
budget keeps instances tiny anyway.

All counts are exact Python integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .field import FieldCtx
from .matrix import FieldMatrix

DEFAULT_BUDGET = 1 << 26  # messages; overridable per call
_BLOCK_LIMIT = 1 << 20

MDS = "MDS"
AMDS = "AMDS"
NMDS = "NMDS"
AMDS_NOT_NMDS = "AMDS-not-NMDS"
OTHER = "other"


class CodeError(Exception):
    pass


class ZeroCode(CodeError):
    """The generator has rank zero (or the dual would)."""


class BudgetExceeded(CodeError):
    """Exhaustive enumeration would need more messages than allowed."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} messages, budget is {budget}")
        self.required = required
        self.budget = budget


class InconsistentInput(CodeError):
    """A distribution failed an exactness check (sum, sign, divisibility)."""


class NegativeCount(CodeError):
    """The NMDS closed forms produced a negative entry (infeasible A_min)."""


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts A_0..A_n per Hamming weight."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise InconsistentInput(f"need {self.n + 1} counts, got {len(self.counts)}")
        if self.counts[0] != 1:
            raise InconsistentInput("A_0 must be 1")
        if any(c < 0 for c in self.counts):
            raise InconsistentInput("negative codeword count")

    def total(self) -> int:
        return sum(self.counts)

    def min_weight(self) -> int:
        """Least positive weight with a nonzero count."""
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        raise InconsistentInput("distribution has no nonzero-weight codewords")

    def as_strings(self) -> list[str]:
        """Counts as decimal strings (JSON-safe at any magnitude)."""
        return [str(c) for c in self.counts]

    def poly_str(self) -> str:
        """Enumerator polynomial, e.g. '1+224x^6+1520x^7'."""
        terms = []
        for i, c in enumerate(self.counts):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                xpow = "x" if i == 1 else f"x^{i}"
                terms.append(f"{coeff}{xpow}")
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class CodeClass:
    """Singleton-defect classification of a code and its dual.

    label is MDS for defect 0, NMDS for defect 1 on both sides,
    AMDS-not-NMDS for defect 1 with a different dual defect, else other.
    """

    label: str
    singleton_defect: int
    dual_defect: int


class LinearCode:
    """A linear code held by a full-row-rank generator in reduced echelon form.

    Construction row-reduces the supplied generator and drops zero rows, so
    equal codes (same row space) compare equal.
    """

    __slots__ = ("ctx", "gen", "n", "k")

    def __init__(self, gen: FieldMatrix):
        reduced, pivots = gen._rref_pivots()
        if not pivots:
            raise ZeroCode("generator has rank 0")
        self.ctx = gen.ctx
        self.gen = FieldMatrix(gen.ctx, reduced[: len(pivots)], cols=gen.cols)
        self.n = gen.cols
        self.k = len(pivots)

    @classmethod
    def from_generator(cls, gen: FieldMatrix) -> "LinearCode":
        return cls(gen)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.ctx.q}))"

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def dual(self) -> "LinearCode":
        if self.k == self.n:
            raise ZeroCode(f"dual of the full [{self.n},{self.n}] code is trivial")
        return LinearCode(self.gen.null_space())

    # -- exhaustive enumeration -------------------------------------------------

    def codeword_blocks(
        self, budget: int = DEFAULT_BUDGET, *, _tables: bool = True
    ) -> Iterator[np.ndarray]:
        """Yield numpy blocks of codeword rows covering all q**k messages once."""
        ctx, q, k, n = self.ctx, self.ctx.q, self.k, self.n
        total = q**k
        if total > budget:
            raise BudgetExceeded(total, budget)
        rows = [self.gen.row(i) for i in range(k)]
        if _tables and q <= 512:
            add_t = ctx.add_table()
            mul_t = ctx.mul_table()
            arange = np.arange(q, dtype=np.uint16)
            scaled = [mul_t[arange[:, None], np.array(r, dtype=np.uint16)[None, :]] for r in rows]
            tail_len = 1
            while tail_len < k and q ** (tail_len + 1) <= _BLOCK_LIMIT:
                tail_len += 1
            block = scaled[k - 1]
            for i in range(k - 2, k - 1 - tail_len, -1):
                block = add_t[scaled[i][:, None, :], block[None, :, :]].reshape(-1, n)
            head = k - tail_len
            if head == 0:
                yield block
                return
            for syms in itertools.product(range(q), repeat=head):
                offset = np.zeros(n, dtype=np.uint16)
                for i, f in enumerate(syms):
                    offset = add_t[offset, scaled[i][f]]
                yield add_t[block, offset]
            return
        # Plain-Python fallback for contexts without operation tables.
        add, mul = ctx.add, ctx.mul
        buf: list[list[int]] = []
        for msg in itertools.product(range(q), repeat=k):
            cw = [0] * n
            for f, row in zip(msg, rows):
                if f:
                    cw = [add(c, mul(f, g)) for c, g in zip(cw, row)]
            buf.append(cw)
            if len(buf) >= _BLOCK_LIMIT:
                yield np.array(buf, dtype=np.int64)
                buf = []
        if buf:
            yield np.array(buf, dtype=np.int64)

    def weight_distribution(
        self, budget: int = DEFAULT_BUDGET, *, _tables: bool = True
    ) -> WeightDistribution:
        """Exact weight counts by exhausting all q**k messages."""
        counts = [0] * (self.n + 1)
        for block in self.codeword_blocks(budget, _tables=_tables):
            w = np.count_nonzero(block, axis=1)
            for i, c in enumerate(np.bincount(w, minlength=self.n + 1)):
                counts[i] += int(c)
        dist = WeightDistribution(self.n, tuple(counts))
        if dist.total() != self.ctx.q**self.k:
            raise InconsistentInput("enumeration lost codewords")  # pragma: no cover
        return dist

    def _both_distributions(
        self, budget: int = DEFAULT_BUDGET
    ) -> tuple[WeightDistribution, WeightDistribution]:
        # Enumerate whichever side is smaller; transform for the other.
        if self.k <= self.n - self.k:
            primal = self.weight_distribution(budget)
            return primal, macwilliams(primal, self.k, self.ctx)
        dual_dist = self.dual().weight_distribution(budget)
        return macwilliams(dual_dist, self.n - self.k, self.ctx), dual_dist

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        return self._both_distributions(budget)[0].min_weight()

    def classify(self, budget: int = DEFAULT_BUDGET) -> CodeClass:
        """Singleton defects of the code and its dual, with the class label."""
        primal, dual_dist = self._both_distributions(budget)
        defect = self.n - self.k + 1 - primal.min_weight()
        dual_defect = self.k + 1 - dual_dist.min_weight()
        if defect == 0:
            label = MDS
        elif defect == 1 and dual_defect == 1:
            label = NMDS
        elif defect == 1:
            label = AMDS_NOT_NMDS
        else:
            label = OTHER
        return CodeClass(label, defect, dual_defect)


def macwilliams(dist: WeightDistribution, k: int, ctx: FieldCtx) -> WeightDistribution:
    """Dual weight distribution via the Krawtchouk-sum identity (exact)."""
    q, n = ctx.q, dist.n
    size = q**k
    if dist.total() != size:
        raise InconsistentInput(f"distribution sums to {dist.total()}, expected q^k = {size}")
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a_i in enumerate(dist.counts):
            if a_i == 0:
                continue
            kraw = sum(
                (-1) ** l * comb(i, l) * comb(n - i, j - l) * (q - 1) ** (j - l)
                for l in range(0, min(i, j) + 1)
            )
            acc += a_i * kraw
        val, rem = divmod(acc, size)
        if rem or val < 0:
            raise InconsistentInput(f"transform produced a non-count at weight {j}")
        out.append(val)
    return WeightDistribution(n, tuple(out))


def nmds_distribution(
    n: int, k: int, ctx: FieldCtx, a_min: int
) -> tuple[WeightDistribution, WeightDistribution]:
    """Weight distributions of an [n, k, n-k] NMDS code with A_{n-k} = a_min.

    Both the code and its dual have a_min minimum-weight codewords; the
    remaining counts follow from

        A_{n-k+s} = C(n, k-s) * sum_{j=0}^{s-1} (-1)**j C(n-k+s, j) (q**(s-j) - 1)
                    + (-1)**s C(k, s) A_{n-k}          for 1 <= s <= k,

    and the mirrored formula with k and n-k swapped for the dual.  Raises
    NegativeCount when a_min is infeasible for these parameters.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if a_min < 0:
        raise NegativeCount(f"A_min must be nonnegative, got {a_min}")
    q = ctx.q

    def side(dim: int, codim: int) -> WeightDistribution:
        counts = [0] * (n + 1)
        counts[0] = 1
        counts[codim] = a_min
        for s in range(1, dim + 1):
            val = comb(n, dim - s) * sum(
                (-1) ** j * comb(codim + s, j) * (q ** (s - j) - 1) for j in range(s)
            ) + (-1) ** s * comb(dim, s) * a_min
            if val < 0:
                raise NegativeCount(
                    f"A_min={a_min} infeasible: weight {codim + s} count is {val}"
                )
            counts[codim + s] = val
        dist = WeightDistribution(n, tuple(counts))
        if dist.total() != q**dim:
            raise InconsistentInput("closed-form distribution does not sum to q^dim")
        return dist

    return side(k, n - k), side(n - k, k)
