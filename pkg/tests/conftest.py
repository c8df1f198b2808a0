"""Shared fixtures and independent test oracles.

The oracles here deliberately avoid the library's own code paths: subset
counting enumerates combinations, determinants expand by cofactors, and
polynomial arithmetic is re-derived from digit vectors.  They exist to
cross-check the production implementations, so keep them dumb.
"""

from __future__ import annotations

import itertools

import pytest

from egrl.field import FieldCtx
from egrl.matrix import FieldMatrix


@pytest.fixture(scope="session")
def gf2():
    return FieldCtx(2)


@pytest.fixture(scope="session")
def gf3():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def gf5():
    return FieldCtx(5)


@pytest.fixture(scope="session")
def gf7():
    return FieldCtx(7)


@pytest.fixture(scope="session")
def gf4():
    return FieldCtx(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return FieldCtx(2, 3)


@pytest.fixture(scope="session")
def gf9():
    return FieldCtx(3, 2)


@pytest.fixture(scope="session")
def gf13():
    return FieldCtx(13)


def brute_subset_count(ctx: FieldCtx, codes, m: int, b: int) -> int:
    """Count m-subsets summing to b by enumerating all combinations."""
    total = 0
    for combo in itertools.combinations(codes, m):
        acc = 0
        for x in combo:
            acc = ctx.add(acc, x)
        if acc == b:
            total += 1
    return total


def cofactor_det(ctx: FieldCtx, rows) -> int:
    """Determinant by Laplace expansion along the first row (oracle)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = 0
    sign = 1
    for j in range(n):
        if rows[0][j]:
            minor = [[rows[i][jj] for jj in range(n) if jj != j] for i in range(1, n)]
            term = ctx.mul(rows[0][j], cofactor_det(ctx, minor))
            acc = ctx.add(acc, term if sign > 0 else ctx.neg(term))
        sign = -sign
    return acc


def modified_vandermonde(ctx: FieldCtx, xs) -> FieldMatrix:
    """Rows 1, x, ..., x**(n-2), then x**n (the x**(n-1) row skipped)."""
    n = len(xs)
    rows = [[ctx.pow(x, e) for x in xs] for e in range(n - 1)]
    rows.append([ctx.pow(x, n) for x in xs])
    return FieldMatrix(ctx, rows)


def brute_weights(ctx: FieldCtx, gen_rows) -> list[int]:
    """Weight counts by plain message enumeration (oracle for q**k small)."""
    k = len(gen_rows)
    n = len(gen_rows[0])
    counts = [0] * (n + 1)
    for msg in itertools.product(range(ctx.q), repeat=k):
        cw = [0] * n
        for f, row in zip(msg, gen_rows):
            if f:
                cw = [ctx.add(c, ctx.mul(f, g)) for c, g in zip(cw, row)]
        counts[sum(1 for c in cw if c)] += 1
    return counts


def random_nonsingular_2x2(ctx: FieldCtx, rng) -> FieldMatrix:
    while True:
        vals = [rng.randrange(ctx.q) for _ in range(4)]
        m = FieldMatrix.from_flat(ctx, 2, 2, vals)
        if int(m.det()) != 0:
            return m
