"""Counting m-element subsets of a field domain with a prescribed sum.

Three routes are provided and kept deliberately independent:

* :func:`count_dp` -- dynamic programming over (elements, subset size,
  partial field sum); works for the full field, the units, or any explicit
  duplicate-free element list.  This is the oracle.
* :func:`count_li_wan` -- the closed forms for the full field and the unit
  domain.  Always equals ``count_dp`` on those domains.
* :func:`vanishes` -- closed characterizations of when the count is zero,
  valid on restricted parameter windows; raises
  :class:`OutOfStatedRange` outside them so callers can fall back to
  ``count_li_wan``.

Counts are plain Python integers (arbitrary precision); the division by q
inside the closed forms is always exact and is checked.

Size-0 convention: N(0, 0) = 1 and N(0, b) = 0 for b != 0, consistent with
the closed forms evaluated at m = 0.
"""

from __future__ import annotations

from math import comb
from typing import Sequence, Union

from .field import FieldCtx

FULL = "full"  # the whole field F_q
STAR = "star"  # the nonzero elements F_q^*

Domain = Union[str, Sequence[int]]


class SubsetSumError(Exception):
    pass


class DomainSize(SubsetSumError):
    """Subset size outside [0, |domain|]."""


class OutOfStatedRange(SubsetSumError):
    """Parameters outside the window where the vanishing rules are valid."""


def _domain_codes(ctx: FieldCtx, domain: Domain) -> list[int]:
    if isinstance(domain, str):
        if domain == FULL:
            return ctx.elements()
        if domain == STAR:
            return ctx.units()
        raise ValueError(f"unknown domain {domain!r} (use 'full', 'star', or a code list)")
    codes = [ctx._check(int(x)) for x in domain]
    if len(set(codes)) != len(codes):
        raise ValueError(f"explicit domain must be duplicate-free: {codes}")
    return codes


def count_dp(ctx: FieldCtx, domain: Domain, m: int, b: int) -> int:
    """Number of m-element subsets of the domain whose field sum is b."""
    codes = _domain_codes(ctx, domain)
    ctx._check(b)
    if not 0 <= m <= len(codes):
        raise DomainSize(f"subset size {m} outside [0, {len(codes)}]")
    q = ctx.q
    add = ctx.add
    table = [[0] * q for _ in range(m + 1)]
    table[0][0] = 1
    seen = 0
    for x in codes:
        seen += 1
        for j in range(min(seen, m), 0, -1):
            prev = table[j - 1]
            cur = table[j]
            for t in range(q):
                c = prev[t]
                if c:
                    cur[add(t, x)] += c
    return table[m][b]


def find_subset(ctx: FieldCtx, domain: Domain, m: int, b: int) -> tuple[int, ...] | None:
    """First m-subset (greedy in domain order) summing to b, or None.

    Deterministic: walks the domain left to right and includes an element
    whenever a completion still exists, so for a sorted domain the result
    is the lexicographically smallest witness.
    """
    codes = _domain_codes(ctx, domain)
    ctx._check(b)
    if not 0 <= m <= len(codes):
        raise DomainSize(f"subset size {m} outside [0, {len(codes)}]")
    q = ctx.q
    n = len(codes)
    # suffix[i][j][t] = number of j-subsets of codes[i:] summing to t
    suffix = [[[0] * q for _ in range(m + 1)] for _ in range(n + 1)]
    suffix[n][0][0] = 1
    for i in range(n - 1, -1, -1):
        x = codes[i]
        for j in range(m + 1):
            skip = suffix[i + 1][j]
            take = suffix[i + 1][j - 1] if j else None
            out = suffix[i][j]
            for t in range(q):
                v = skip[t]
                if take is not None:
                    v += take[ctx.sub(t, x)]
                out[t] = v
    if suffix[0][m][b] == 0:
        return None
    picked = []
    need_j, need_t = m, b
    for i in range(n):
        if need_j == 0:
            break
        rest = ctx.sub(need_t, codes[i])
        if suffix[i + 1][need_j - 1][rest] > 0:
            picked.append(codes[i])
            need_j -= 1
            need_t = rest
    return tuple(picked)


def count_li_wan(ctx: FieldCtx, domain: str, m: int, b: int) -> int:
    """Closed-form subset-sum count for the 'full' or 'star' domain.

    For the unit domain:
        N(m, b) = (1/q) * [ C(q-1, m) + (-1)**(m + m//p) * v(b) * C(q/p - 1, m//p) ]
    and for the full field:
        N(m, b) = (1/q) * C(q, m)                                  if p does not divide m
        N(m, b) = (1/q) * [ C(q, m) + (-1)**(m + m/p) * v(b) * C(q/p, m/p) ]   otherwise
    with v(b) = q-1 if b == 0 else -1.  The division by q is exact.
    """
    if domain not in (FULL, STAR):
        raise ValueError("closed forms exist for the 'full' and 'star' domains only")
    q, p = ctx.q, ctx.p
    ctx._check(b)
    size = q if domain == FULL else q - 1
    if not 0 <= m <= size:
        raise DomainSize(f"subset size {m} outside [0, {size}]")
    v = q - 1 if b == 0 else -1
    if domain == STAR:
        num = comb(q - 1, m) + (-1) ** (m + m // p) * v * comb(q // p - 1, m // p)
    elif m % p:
        num = comb(q, m)
    else:
        num = comb(q, m) + (-1) ** (m + m // p) * v * comb(q // p, m // p)
    count, rem = divmod(num, q)
    if rem or count < 0:
        raise SubsetSumError(f"closed form broke down at q={q}, domain={domain}, m={m}, b={b}")
    return count


def vanishes(ctx: FieldCtx, domain: str, m: int, b: int) -> bool:
    """Decide N(m, b, domain) == 0 from the closed vanishing rules.

    Valid windows (outside them :class:`OutOfStatedRange` is raised and the
    caller should test ``count_li_wan(...) == 0`` instead):

    * full field, 2 <= m <= q-1, any b: zero iff p = 2, b = 0 and
      m in {2, q-2};
    * units, b = 0: zero iff m in {1, q-2} for odd p (1 <= m <= q-1), or
      m in {2, q-3, q-2} for p = 2 (2 <= m <= q-1); needs q >= 3;
    * units, b != 0, 2 <= m <= q-2: never zero.

    The windows are deliberately narrower than a naive reading of the
    source rules: edge sizes (m <= 1 on the full field, m = 1 in
    characteristic 2 on the units, m >= q-1 on the units with b != 0, and
    everything at q = 2) fall outside and must use the counting route.
    """
    q, p = ctx.q, ctx.p
    ctx._check(b)
    if m < 0:
        raise DomainSize(f"subset size {m} is negative")
    if domain == FULL:
        if 2 <= m <= q - 1:
            return p == 2 and b == 0 and m in (2, q - 2)
        raise OutOfStatedRange(f"full-field rule stated for 2 <= m <= q-1, got m={m}")
    if domain == STAR:
        if b == 0:
            if q >= 3 and p != 2 and 1 <= m <= q - 1:
                return m in (1, q - 2)
            if q >= 3 and p == 2 and 2 <= m <= q - 1:
                return m in (2, q - 3, q - 2)
            raise OutOfStatedRange(f"unit-domain zero-sum rule does not cover q={q}, m={m}")
        if 2 <= m <= q - 2:
            return False
        raise OutOfStatedRange(f"unit-domain rule stated for 2 <= m <= q-2, got m={m}")
    raise ValueError(f"unknown domain {domain!r}")
