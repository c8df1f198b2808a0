import random

import pytest

from conftest import cofactor_det, modified_vandermonde
from egrl.field import CtxMismatch, FieldCtx
from egrl.matrix import (
    DimMismatch,
    DuplicateNodes,
    FieldMatrix,
    NotSquare,
    ZeroScale,
    vandermonde_skip_det,
)


def test_identity_det(gf5):
    assert int(FieldMatrix.identity(gf5, 3).det()) == 1


def test_det_2x2_golden(gf5):
    # 1*4 - 2*3 = -2 = 3 (mod 5), cofactor expansion by hand
    m = FieldMatrix(gf5, [[1, 2], [3, 4]])
    assert int(m.det()) == 3


def test_det_vandermonde_golden(gf7):
    # product formula: (2-1)(3-1)(3-2) = 2
    m = FieldMatrix(gf7, [[1, 1, 1], [1, 2, 3], [1, 4, 2]])
    assert int(m.det()) == 2


def test_det_not_square(gf5):
    with pytest.raises(NotSquare):
        FieldMatrix(gf5, [[1, 2, 3], [4, 0, 1]]).det()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9, 16])
def test_det_matches_cofactor_oracle(q):
    ctx = FieldCtx.from_order(q)
    rng = random.Random(q * 31)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
        assert int(FieldMatrix(ctx, rows).det()) == cofactor_det(ctx, rows)


@pytest.mark.parametrize("q", [3, 5, 8, 9, 16])
def test_det_multiplicative(q):
    ctx = FieldCtx.from_order(q)
    rng = random.Random(q)
    for _ in range(40):
        n = rng.randint(1, 6)
        a = FieldMatrix(ctx, [[rng.randrange(q) for _ in range(n)] for _ in range(n)])
        b = FieldMatrix(ctx, [[rng.randrange(q) for _ in range(n)] for _ in range(n)])
        assert int(a.matmul(b).det()) == ctx.mul(int(a.det()), int(b.det()))


def test_rref_rank_nullspace_properties():
    rng = random.Random(1234)
    for q in (2, 3, 5, 9):
        ctx = FieldCtx.from_order(q)
        for _ in range(30):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 6)
            m = FieldMatrix(ctx, [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)])
            r = m.rref()
            rank = m.rank()
            assert r.rank() == rank
            assert sum(1 for i in range(r.rows) if any(r.row(i))) == rank
            ns = m.null_space()
            assert ns.rows == cols - rank
            assert m.matmul(ns.transpose()).is_zero()
            assert r.rref() == r


def test_nullspace_repetition_parity(gf2):
    ns = FieldMatrix(gf2, [[1, 1, 1]]).null_space()
    assert ns.rows == 2
    for i in range(2):
        assert sum(ns.row(i)) % 2 == 0


def test_nullspace_orthogonal_gf8(gf8):
    rng = random.Random(8)
    g = FieldMatrix(gf8, [[rng.randrange(8) for _ in range(6)] for _ in range(3)])
    assert g.matmul(g.null_space().transpose()).is_zero()


def test_matmul_shapes_and_ctx(gf5, gf7):
    a = FieldMatrix(gf5, [[1, 2], [3, 4]])
    with pytest.raises(DimMismatch):
        a.matmul(FieldMatrix(gf5, [[1, 2]]))
    with pytest.raises(CtxMismatch):
        a.matmul(FieldMatrix(gf7, [[1], [2]]))


def test_scale_columns(gf5):
    m = FieldMatrix(gf5, [[1, 2, 3], [4, 0, 1]])
    assert m.scale_columns([1, 1, 1]) == m
    scaled = m.scale_columns([2, 3, 4])
    assert scaled.row(0) == (2, 1, 2)
    with pytest.raises(ZeroScale):
        m.scale_columns([1, 0, 1])
    with pytest.raises(DimMismatch):
        m.scale_columns([1, 1])


def test_inverse_roundtrip(gf9):
    rng = random.Random(99)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = FieldMatrix(gf9, [[rng.randrange(9) for _ in range(n)] for _ in range(n)])
        if int(m.det()) == 0:
            continue
        assert m.matmul(m.inverse()) == FieldMatrix.identity(gf9, n)


def test_transpose_involution(gf4):
    m = FieldMatrix(gf4, [[1, 2, 3], [0, 1, 2]])
    assert m.transpose().transpose() == m
    assert m.transpose().at(2, 1) == 2


# -- the skip-one-row Vandermonde determinant -------------------------------------


def test_vandermonde_skip_trivial(gf5):
    assert int(vandermonde_skip_det(gf5, (0, 1))) == 1


def test_vandermonde_skip_2x2(gf5):
    # rows (1, 1) and (1, 4): det = 3 = (1+2)(2-1)
    assert int(vandermonde_skip_det(gf5, (1, 2))) == 3
    explicit = FieldMatrix(gf5, [[1, 1], [1, 4]])
    assert int(explicit.det()) == 3


def test_vandermonde_skip_3x3(gf7):
    # (1+2+3) * (2-1)(3-1)(3-2) = 6*2 = 12 = 5 (mod 7)
    val = vandermonde_skip_det(gf7, (1, 2, 3))
    assert int(val) == 5
    assert int(modified_vandermonde(gf7, (1, 2, 3)).det()) == 5


def test_vandermonde_skip_duplicates(gf7):
    with pytest.raises(DuplicateNodes):
        vandermonde_skip_det(gf7, (1, 1, 2))


def test_vandermonde_skip_matches_explicit_random():
    rng = random.Random(2024)
    trials = 0
    while trials < 500:
        q = rng.choice([4, 5, 7, 8, 9, 11, 13, 16])
        ctx = FieldCtx.from_order(q)
        n = rng.randint(2, min(7, q))
        xs = tuple(rng.sample(range(q), n))
        expect = int(modified_vandermonde(ctx, xs).det())
        assert int(vandermonde_skip_det(ctx, xs)) == expect
        trials += 1


# -- text format --------------------------------------------------------------------


def test_text_roundtrip(gf13):
    m = FieldMatrix(gf13, [[1, 2, 3], [4, 5, 6]])
    assert FieldMatrix.from_text(gf13, m.to_text()) == m
    assert m.to_text().splitlines()[0] == "2 3"


def test_from_text_validates(gf5):
    with pytest.raises(DimMismatch):
        FieldMatrix.from_text(gf5, "2 2\n1 2\n3")
