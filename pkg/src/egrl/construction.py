"""Extended generalized Roth-Lempel (EGRL) codes.

An instance over GF(q) is defined by evaluation points ``alpha`` (n
pairwise-distinct elements), nonzero column multipliers ``v``, a nonzero
scalar ``b``, an exponent ``t`` with 0 <= t <= k-3, and a nonsingular
``ell x ell`` coefficient-mixing matrix.  Codewords are

    ( v_1 f(a_1), ..., v_n f(a_n),  (f_{k-ell}, ..., f_{k-1}) * MIX,  b * f_t )

over all polynomials f of degree < k, giving a [n + ell + 1, k] code.

The ell = 2, t = 0 family carries the closed theory implemented here: an
explicit parity-check matrix, MDS / dual-AMDS criteria decided by
subset-sum counting (no subset enumeration), and -- for the special
instances evaluated on all of F_q^* with unit multipliers -- exact
minimum-weight counts and full NMDS weight distributions.  Other (ell, t)
shapes are constructible and brute-force classifiable, but the criterion
operations refuse them rather than extrapolate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .field import FieldCtx
from .matrix import FieldMatrix
from .linear import DEFAULT_BUDGET, LinearCode, WeightDistribution, nmds_distribution
from .subsetsum import STAR, count_dp, count_li_wan, find_subset


class ConstructionError(Exception):
    pass


class InvalidParams(ConstructionError):
    """Instance parameters violate an invariant; subclasses name which."""


class DuplicateAlpha(InvalidParams):
    pass


class ZeroV(InvalidParams):
    pass


class ZeroB(InvalidParams):
    pass


class SingularM(InvalidParams):
    pass


class RangeViolation(InvalidParams):
    pass


class UnsupportedShape(ConstructionError):
    """The operation has closed formulas only for ell = 2, t = 0."""


@dataclass(frozen=True)
class EgrlParams:
    """One EGRL instance: (ctx, n, k, ell, t, alpha, v, b, mix).

    ``mix`` is the ell-by-ell nonsingular matrix applied to the top ell
    message coefficients; its entry (r, c) multiplies f_{k-ell+r} in
    appended column c.
    """

    ctx: FieldCtx
    n: int
    k: int
    ell: int
    t: int
    alpha: tuple[int, ...]
    v: tuple[int, ...]
    b: int
    mix: FieldMatrix

    def __post_init__(self):
        ctx = self.ctx
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        for a in self.alpha:
            ctx._check(a)
        if len(set(self.alpha)) != len(self.alpha):
            raise DuplicateAlpha(f"evaluation points must be pairwise distinct: {self.alpha}")
        for x in self.v:
            ctx._check(x)
        if any(x == 0 for x in self.v):
            raise ZeroV("column multipliers must be nonzero")
        if not 1 <= self.b < ctx.q:
            raise ZeroB(f"b must be a nonzero element code, got {self.b}")
        if not 1 <= self.ell <= self.k:
            raise RangeViolation(f"need 1 <= ell <= k, got ell={self.ell}, k={self.k}")
        if not self.k <= self.n <= ctx.q:
            raise RangeViolation(f"need k <= n <= q, got k={self.k}, n={self.n}, q={ctx.q}")
        if not 0 <= self.t <= self.k - 3:
            raise RangeViolation(f"need 0 <= t <= k-3, got t={self.t}, k={self.k}")
        if len(self.alpha) != self.n or len(self.v) != self.n:
            raise RangeViolation(
                f"alpha and v must have length n={self.n}, "
                f"got {len(self.alpha)} and {len(self.v)}"
            )
        if self.mix.ctx != ctx or (self.mix.rows, self.mix.cols) != (self.ell, self.ell):
            raise RangeViolation(
                f"mixing matrix must be {self.ell}x{self.ell} over the instance field"
            )
        if int(self.mix.det()) == 0:
            raise SingularM("mixing matrix must be nonsingular")

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def length(self) -> int:
        """Code length n + ell + 1."""
        return self.n + self.ell + 1

    # -- canonical serialization ----------------------------------------------

    def to_dict(self) -> dict:
        return {
            "field": str(self.ctx),
            "n": self.n,
            "k": self.k,
            "ell": self.ell,
            "t": self.t,
            "alpha": list(self.alpha),
            "v": list(self.v),
            "b": self.b,
            "M": [self.mix.at(i, j) for i in range(self.ell) for j in range(self.ell)],
        }

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"field: {d['field']}",
            f"n: {d['n']}",
            f"k: {d['k']}",
            f"ell: {d['ell']}",
            f"t: {d['t']}",
            f"alpha: {','.join(map(str, d['alpha']))}",
            f"v: {','.join(map(str, d['v']))}",
            f"b: {d['b']}",
            f"M: {','.join(map(str, d['M']))}",
        ]
        return "\n".join(lines)


def params_from_dict(d: dict) -> EgrlParams:
    ctx = FieldCtx.from_text(d["field"])
    ell = int(d.get("ell", 2))
    mix = FieldMatrix.from_flat(ctx, ell, ell, [int(x) for x in d["M"]])
    return EgrlParams(
        ctx=ctx,
        n=int(d["n"]),
        k=int(d["k"]),
        ell=ell,
        t=int(d.get("t", 0)),
        alpha=tuple(int(a) for a in d["alpha"]),
        v=tuple(int(x) for x in d["v"]),
        b=int(d["b"]),
        mix=mix,
    )


def params_from_text(text: str) -> EgrlParams:
    """Parse the canonical instance document (text or JSON form)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return params_from_dict(json.loads(stripped))
    d: dict = {}
    for line in stripped.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        d[key.strip()] = value.strip()
    for key in ("alpha", "v", "M"):
        d[key] = [int(x) for x in d[key].split(",")]
    return params_from_dict(d)


@dataclass(frozen=True)
class MdsReport:
    """Outcome of the MDS criterion.

    ``alpha_zero_index`` points at a zero evaluation point (condition (1)
    failure); ``witness`` is (m, j, subset) with the j-th mixing column and
    a size-(k-m) subset of evaluation points whose sum attains
    mix[1][j-1] / mix[0][j-1] (condition (2) failure).  The code is MDS
    exactly when both fields are empty.
    """

    is_mds: bool
    alpha_zero_index: Optional[int] = None
    witness: Optional[tuple[int, int, tuple[int, ...]]] = None


def generator_matrix(params: EgrlParams) -> FieldMatrix:
    """The k x (n + ell + 1) generator in the standard evaluation form.

    Row i holds v_j * alpha_j**i on the evaluation block; rows k-ell..k-1
    carry the mixing matrix in the next ell columns; the last column is b
    at row t.
    """
    ctx = params.ctx
    n, k, ell, t = params.n, params.k, params.ell, params.t
    rows = []
    for i in range(k):
        row = [ctx.mul(params.v[j], ctx.pow(params.alpha[j], i)) for j in range(n)]
        block = [0] * ell
        if i >= k - ell:
            r = i - (k - ell)
            block = [params.mix.at(r, c) for c in range(ell)]
        row.extend(block)
        row.append(params.b if i == t else 0)
        rows.append(row)
    return FieldMatrix(ctx, rows)


def egrl_code(params: EgrlParams) -> LinearCode:
    """The instance as a LinearCode (generator row-reduced internally)."""
    return LinearCode(generator_matrix(params))


def compute_u(ctx: FieldCtx, alpha: Sequence[int]) -> tuple[int, ...]:
    """Inverse products u_i = prod_{j != i} (alpha_i - alpha_j)**(-1).

    These satisfy the power-sum identities sum_i u_i alpha_i**j = 0 for
    0 <= j <= n-2, = 1 for j = n-1, and = sum_i alpha_i for j = n; they are
    the row scalars of the parity-check construction.
    """
    nodes = [ctx._check(int(a)) for a in alpha]
    n = len(nodes)
    if n < 3:
        raise RangeViolation(f"need at least 3 evaluation points, got {n}")
    if len(set(nodes)) != n:
        raise DuplicateAlpha(f"evaluation points must be pairwise distinct: {nodes}")
    out = []
    for i, a in enumerate(nodes):
        prod = 1
        for j, c in enumerate(nodes):
            if j != i:
                prod = ctx.mul(prod, ctx.sub(a, c))
        out.append(ctx.inv(prod))
    return tuple(out)


def _require_shape(params: EgrlParams):
    if params.ell != 2 or params.t != 0:
        raise UnsupportedShape(
            f"closed formulas cover ell=2, t=0 only; got ell={params.ell}, t={params.t} "
            "(general shapes remain brute-force classifiable)"
        )


def _completion_row(params: EgrlParams, u: tuple[int, ...]) -> list[int]:
    # A parity row independent of the u-power rows, valid for any distinct
    # alpha and nonzero v.  Take c_s = u_s * w(alpha_s) with
    # w = x**(n-1) - sum_i g_i x**(n-1-i) (i = 1..k-3), where the g_i are
    # fixed by requiring sum_s c_s alpha_s**i = 0 for those i via
    # g_i = h_i - sum_{j<i} g_j h_{i-j}, h_i = sum_s u_s alpha_s**(n-1+i).
    # Then sum(c) = 1 and the mixing/tail entries balance the remaining
    # message coefficients.
    ctx, n, k = params.ctx, params.n, params.k
    powers = [[1] * n]
    for _ in range(n + k - 2):
        powers.append([ctx.mul(x, a) for x, a in zip(powers[-1], params.alpha)])

    def weighted_sum(coeffs: Sequence[int], exp: int) -> int:
        acc = 0
        for c, x in zip(coeffs, powers[exp]):
            acc = ctx.add(acc, ctx.mul(c, x))
        return acc

    h = {i: weighted_sum(u, n - 1 + i) for i in range(1, k - 2)}
    g: dict[int, int] = {}
    for i in range(1, k - 2):
        acc = h[i]
        for j in range(1, i):
            acc = ctx.sub(acc, ctx.mul(g[j], h[i - j]))
        g[i] = acc
    c = []
    for s in range(n):
        w = powers[n - 1][s]
        for i in range(1, k - 2):
            w = ctx.sub(w, ctx.mul(g[i], powers[n - 1 - i][s]))
        c.append(ctx.mul(u[s], w))
    y = FieldMatrix(
        ctx, [[ctx.neg(weighted_sum(c, k - 2)), ctx.neg(weighted_sum(c, k - 1))]]
    ).matmul(params.mix.transpose().inverse())
    row = [ctx.div(c[s], params.v[s]) for s in range(n)]
    row.extend([y.at(0, 0), y.at(0, 1), ctx.neg(ctx.inv(params.b))])
    return row


def parity_check_matrix(params: EgrlParams) -> FieldMatrix:
    """The (n-k+3) x (n+3) parity-check matrix for ell = 2, t = 0, 4 <= k <= n-1.

    The last n-k+2 rows are (u_i/v_i) * alpha_i**j for j = 0..n-k+1, with

        R = [[0, -1], [-1, -sum(alpha)]] * (MIX^T)**(-1)

    filling the two mixing columns of the final two of them.  The top row
    is the classical (1, ..., 1, 0, 0, -sum(v)/b) whenever that is actually
    a parity row -- i.e. the weighted power sums sum_s v_s alpha_s**i
    vanish for 1 <= i <= k-1 and sum(v) != 0, which covers the all-units
    special construction -- and otherwise a completion row built from the
    u coefficients, since the classical row annihilates no general
    instance.  Either way G H^T = 0 and rank(H) = n+3-k.
    """
    _require_shape(params)
    ctx = params.ctx
    n, k = params.n, params.k
    if not 4 <= k <= n - 1:
        raise RangeViolation(f"parity-check form needs 4 <= k <= n-1, got k={k}, n={n}")
    u = compute_u(ctx, params.alpha)
    sum_v = 0
    for x in params.v:
        sum_v = ctx.add(sum_v, x)
    sum_alpha = 0
    for a in params.alpha:
        sum_alpha = ctx.add(sum_alpha, a)
    minus_one = ctx.neg(1)
    s_mat = FieldMatrix(ctx, [[0, minus_one], [minus_one, ctx.neg(sum_alpha)]])
    r_mat = s_mat.matmul(params.mix.transpose().inverse())

    def classical_row_valid() -> bool:
        if sum_v == 0:
            return False
        for i in range(1, k):
            acc = 0
            for vs, a in zip(params.v, params.alpha):
                acc = ctx.add(acc, ctx.mul(vs, ctx.pow(a, i)))
            if acc != 0:
                return False
        return True

    if classical_row_valid():
        first = [1] * n + [0, 0, ctx.neg(ctx.div(sum_v, params.b))]
    else:
        first = _completion_row(params, u)
    base = [ctx.div(u[i], params.v[i]) for i in range(n)]
    rows = [first]
    for j in range(n - k + 2):
        row = [ctx.mul(base[i], ctx.pow(params.alpha[i], j)) for i in range(n)]
        if j == n - k:
            row.extend([r_mat.at(0, 0), r_mat.at(0, 1)])
        elif j == n - k + 1:
            row.extend([r_mat.at(1, 0), r_mat.at(1, 1)])
        else:
            row.extend([0, 0])
        row.append(0)
        rows.append(row)
    return FieldMatrix(ctx, rows)


def check_mds(params: EgrlParams) -> MdsReport:
    """Decide the MDS criterion for ell = 2, t = 0 without subset enumeration.

    The code is MDS iff (1) no evaluation point is zero and (2) for each
    mixing column j with top entry a_1j != 0, no subset of the evaluation
    points of size k-1 or k-2 sums to a_2j / a_1j.  Columns with a_1j = 0
    pass (2) automatically (a_2j != 0 by nonsingularity).  Subset existence
    is decided by counting; a witness subset is recovered by backtracking
    only when violated.
    """
    _require_shape(params)
    ctx = params.ctx
    for idx, a in enumerate(params.alpha):
        if a == 0:
            return MdsReport(False, alpha_zero_index=idx)
    for m in (1, 2):
        size = params.k - m
        for j in (0, 1):
            a1 = params.mix.at(0, j)
            if a1 == 0:
                continue
            target = ctx.div(params.mix.at(1, j), a1)
            if count_dp(ctx, params.alpha, size, target) > 0:
                subset = find_subset(ctx, params.alpha, size, target)
                return MdsReport(False, witness=(m, j + 1, subset))
    return MdsReport(True)


def check_dual_amds(params: EgrlParams) -> bool:
    """Dual-AMDS criterion for ell = 2, t = 0.

    True iff every evaluation point is nonzero and some size-(k-1) or
    size-(k-2) subset attains a mixing-column ratio -- that is, among
    all-nonzero instances the dual is AMDS exactly when the code is not MDS.
    """
    _require_shape(params)
    if any(a == 0 for a in params.alpha):
        return False
    return not check_mds(params).is_mds


# -- the special construction on all of F_q^* ---------------------------------


def special_k_range(ctx: FieldCtx) -> range:
    """Dimensions covered by the closed weight theory for this field."""
    if ctx.p == 2:
        return range(5, ctx.q - 1)
    return range(4, ctx.q)


def special_construction(
    ctx: FieldCtx, k: int, b: int, mix: FieldMatrix, order: str = "ascending"
) -> EgrlParams:
    """The instance evaluated on all of F_q^* with unit multipliers.

    Needs 5 <= k <= q-2 in characteristic 2, else 4 <= k <= q-1.  The
    evaluation points default to ascending element code; order="generator"
    lists them as consecutive powers of the smallest primitive element.
    Weight data does not depend on the ordering.
    """
    kr = special_k_range(ctx)
    if k not in kr:
        clause = (
            f"characteristic 2 requires 5 <= k <= {ctx.q - 2}"
            if ctx.p == 2
            else f"odd characteristic requires 4 <= k <= {ctx.q - 1}"
        )
        raise RangeViolation(f"k={k} outside the supported range for GF({ctx.q}): {clause}")
    if order == "ascending":
        alpha = ctx.units()
    elif order == "generator":
        alpha = ctx.generator_powers()
    else:
        raise ValueError(f"order must be 'ascending' or 'generator', got {order!r}")
    return EgrlParams(
        ctx=ctx,
        n=ctx.q - 1,
        k=k,
        ell=2,
        t=0,
        alpha=tuple(alpha),
        v=(1,) * (ctx.q - 1),
        b=b,
        mix=mix,
    )


def is_special_instance(params: EgrlParams) -> bool:
    """Whether the closed weight formulas apply to this instance."""
    return (
        params.ell == 2
        and params.t == 0
        and params.n == params.q - 1
        and all(x == 1 for x in params.v)
        and set(params.alpha) == set(params.ctx.units())
        and params.k in special_k_range(params.ctx)
    )


def _require_special(params: EgrlParams):
    if not is_special_instance(params):
        raise InvalidParams(
            "closed weight formulas need the special construction: ell=2, t=0, "
            "alpha = all of F_q^*, unit multipliers, k in the supported range"
        )


def dual_min_weight_count(params: EgrlParams) -> int:
    """Number of minimum-weight (weight-k) codewords of the dual code.

    Census over the two mixing columns: a column with top entry a_1s != 0
    contributes (q-1) * [ N(k-1, a_2s/a_1s) + N(k-2, a_2s/a_1s) ] subsets
    of F_q^* (each supporting q-1 scalar multiples); columns with
    a_1s = 0 contribute nothing.
    """
    _require_special(params)
    ctx = params.ctx
    q, k = params.q, params.k
    total = 0
    for s in range(2):
        a1 = params.mix.at(0, s)
        if a1 == 0:
            continue
        ratio = ctx.div(params.mix.at(1, s), a1)
        total += (q - 1) * (
            count_li_wan(ctx, STAR, k - 1, ratio) + count_li_wan(ctx, STAR, k - 2, ratio)
        )
    return total


def special_nmds_distribution(
    params: EgrlParams,
) -> tuple[WeightDistribution, WeightDistribution]:
    """Full primal and dual weight distributions of a special instance.

    The code is NMDS with parameters [q+2, k, q+2-k]; its minimum-weight
    count equals the dual's, so the closed NMDS expansion seeded with
    dual_min_weight_count determines everything.
    """
    _require_special(params)
    return nmds_distribution(
        params.length, params.k, params.ctx, dual_min_weight_count(params)
    )


_TAIL_PATTERNS = [
    (False, False, False),
    (False, False, True),
    (False, True, False),
    (False, True, True),
    (True, False, False),
    (True, False, True),
    (True, True, False),
    (True, True, True),
]


def dual_support_pattern_census(
    params: EgrlParams, budget: int = DEFAULT_BUDGET
) -> dict[tuple[bool, bool, bool], int]:
    """Census of weight-k dual codewords by the zero pattern of their tail.

    Keys are (c_n != 0, c_{n+1} != 0, c_{n+2} != 0) over the three appended
    coordinates (the two mixing columns and the b column).  For special
    instances, patterns with both mixing coordinates nonzero, with only the
    b coordinate nonzero, or with an all-zero tail carry no codewords, and
    each surviving pattern matches a (q-1) * N(...) term of the
    minimum-weight census.
    """
    _require_shape(params)
    dual = egrl_code(params).dual()
    n = params.n
    k = params.k
    counts = {pat: 0 for pat in _TAIL_PATTERNS}
    for block in dual.codeword_blocks(budget):
        w = np.count_nonzero(block, axis=1)
        sel = block[w == k]
        if sel.shape[0] == 0:
            continue
        tails = sel[:, n : n + 3] != 0
        idx = tails[:, 0] * 4 + tails[:, 1] * 2 + tails[:, 2]
        for i, c in enumerate(np.bincount(idx, minlength=8)):
            if c:
                pat = (bool(i & 4), bool(i & 2), bool(i & 1))
                counts[pat] += int(c)
    return counts
