"""Exact arithmetic for prime fields GF(p) and extension fields GF(p**s).

Field elements are integer codes in ``[0, q)``: the element
``c_0 + c_1*x + ... + c_{s-1}*x**(s-1)`` of GF(p**s) is encoded as
``c_0 + c_1*p + ... + c_{s-1}*p**(s-1)``.  Code 0 is the additive identity
and code 1 the multiplicative identity; for prime fields the code is the
residue itself.  Every public API speaks this encoding, which keeps text
and JSON output byte-stable.

A :class:`FieldCtx` owns the modulus polynomial and, for q <= 2**16,
log/antilog tables for multiplication.  Contexts are immutable after
construction and safe to share across threads; elements are plain codes
(or :class:`FieldElem` wrappers at the API surface).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

_TABLE_LIMIT = 1 << 16
_NP_TABLE_LIMIT = 512


class FieldError(Exception):
    """Base class for field construction and arithmetic failures."""


class CompositeCharacteristic(FieldError):
    """The requested characteristic is not prime (or q is not a prime power)."""


class NonMonic(FieldError):
    """A supplied modulus polynomial is not monic of the stated degree."""


class ReducibleModulus(FieldError):
    """A supplied modulus polynomial factors over GF(p)."""


class ZeroInverse(FieldError):
    """Multiplicative inversion of the zero element."""


class CtxMismatch(FieldError):
    """Operands belong to different field contexts."""


class NoPrimitive(FieldError):
    """No primitive element exists (only for q = 2)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Coefficient tuples are little-endian with
# no trailing zeros; the zero polynomial is ().  Only used at construction
# time (modulus validation and default-modulus selection).

def _ptrim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _psub(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _ptrim(tuple((x - y) % p for x, y in zip(a, b)))


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(tuple(out))


def _pmod(a: tuple[int, ...], f: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = (a[-1] * lead_inv) % p
        if c:
            shift = len(a) - 1 - df
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - c * fj) % p
        a.pop()
    return _ptrim(tuple(a))


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(a: tuple[int, ...], e: int, f: tuple[int, ...], p: int) -> tuple[int, ...]:
    result = (1,)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    # Rabin test: monic f of degree s is irreducible over GF(p) iff
    # x**(p**s) == x (mod f) and gcd(x**(p**(s//r)) - x, f) = 1 for every
    # prime r dividing s.
    s = len(f) - 1
    if s == 1:
        return True
    x = (0, 1)
    if _ppowmod(x, p**s, f, p) != x:
        return False
    for r in _prime_factors(s):
        h = _psub(_ppowmod(x, p ** (s // r), f, p), x, p)
        if len(_pgcd(h, f, p)) != 1:
            return False
    return True


def _x_is_primitive(f: tuple[int, ...], p: int) -> bool:
    # f must already be irreducible; checks that x generates the unit group.
    q = p ** (len(f) - 1)
    x = (0, 1)
    for r in _prime_factors(q - 1):
        if _ppowmod(x, (q - 1) // r, f, p) == (1,):
            return False
    return True


def _default_modulus(p: int, s: int) -> tuple[int, ...]:
    # Smallest primitive monic degree-s polynomial, coefficients compared
    # low-degree-first, so the generator-power enumeration starts at x.
    for coeffs in itertools.product(range(p), repeat=s):
        f = coeffs + (1,)
        if _is_irreducible(f, p) and _x_is_primitive(f, p):
            return f
    raise FieldError(f"no primitive polynomial of degree {s} over GF({p})")


class FieldCtx:
    """Arithmetic context for GF(p**s).

    Attributes:
        p: prime characteristic.
        s: extension degree (>= 1).
        q: field cardinality p**s.
        modulus: monic degree-s modulus as s+1 coefficients (c_0, ..., c_s);
            the placeholder (0, 1) for prime fields.

    Scalar operations (``add``, ``mul``, ``inv``, ...) take and return
    integer element codes.  ``elem`` wraps a code as a :class:`FieldElem`
    supporting operator syntax.
    """

    __slots__ = ("p", "s", "q", "modulus", "_exp", "_log", "_np_add", "_np_mul")

    def __init__(self, p: int, s: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise CompositeCharacteristic(f"characteristic {p} is not prime")
        if s < 1:
            raise ValueError(f"extension degree must be >= 1, got {s}")
        self.p = p
        self.s = s
        self.q = p**s
        if s == 1:
            if modulus is not None and tuple(modulus) != (0, 1):
                raise ValueError("prime fields take the placeholder modulus (0, 1)")
            self.modulus = (0, 1)
        else:
            if modulus is None:
                self.modulus = _default_modulus(p, s)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != s + 1 or mod[-1] != 1:
                    raise NonMonic(f"modulus must be monic of degree {s}: {tuple(modulus)}")
                if not _is_irreducible(mod, p):
                    raise ReducibleModulus(f"modulus {mod} factors over GF({p})")
                self.modulus = mod
        self._exp = None
        self._log = None
        self._np_add = None
        self._np_mul = None
        if 3 <= self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_order(cls, q: int, modulus: Sequence[int] | None = None) -> "FieldCtx":
        """Build GF(q) from a prime-power order, factoring q = p**s."""
        if q < 2:
            raise CompositeCharacteristic(f"field order must be >= 2, got {q}")
        p = 2
        while q % p:
            p += 1
        s, m = 0, q
        while m % p == 0:
            m //= p
            s += 1
        if m != 1:
            raise CompositeCharacteristic(f"{q} is not a prime power")
        return cls(p, s, modulus)

    @classmethod
    def from_text(cls, text: str) -> "FieldCtx":
        """Parse the canonical header form "p=<p> s=<s> mod=<c_0,...,c_s>"."""
        fields = dict(tok.split("=", 1) for tok in text.split())
        p = int(fields["p"])
        s = int(fields["s"])
        mod = tuple(int(c) for c in fields["mod"].split(","))
        return cls(p, s, None if s == 1 else mod)

    def __str__(self) -> str:
        return f"p={self.p} s={self.s} mod={','.join(map(str, self.modulus))}"

    def __repr__(self) -> str:
        return f"FieldCtx(GF({self.q}), {self})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    # -- digit encoding ------------------------------------------------------

    def digits(self, code: int) -> tuple[int, ...]:
        """Base-p digit vector (c_0, ..., c_{s-1}) of an element code."""
        if self.s == 1:
            return (code,)
        out = []
        for _ in range(self.s):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _undigits(self, digits: Sequence[int]) -> int:
        code = 0
        for c in reversed(digits):
            code = code * self.p + c
        return code

    def _check(self, code: int) -> int:
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} outside [0, {self.q})")
        return code

    # -- scalar arithmetic on codes -------------------------------------------
    # Codes are trusted to lie in [0, q); FieldElem and the parsers validate.

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.s):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.s == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.s):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_direct(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_direct(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroInverse("0 has no multiplicative inverse")
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_direct(a, e % (self.q - 1))

    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self._check(int(code)), self)

    def _mul_direct(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a * b) % self.p
        p, s = self.p, self.s
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        f = self.modulus
        for i in range(2 * s - 2, s - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(s):
                    prod[i - s + j] = (prod[i - s + j] - c * f[j]) % p
        return self._undigits(prod[:s])

    def _pow_direct(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_direct(result, base)
            base = self._mul_direct(base, base)
            e >>= 1
        return result

    def _mult_order(self, a: int) -> int:
        # Order of a nonzero element, via the prime factorization of q-1.
        order = self.q - 1
        for r in _prime_factors(self.q - 1):
            while order % r == 0 and self._pow_direct(a, order // r) == 1:
                order //= r
        return order

    def _build_tables(self):
        q = self.q
        gen = None
        for cand in range(2, q):
            if self._mult_order(cand) == q - 1:
                gen = cand
                break
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(1, q - 1):
            acc = self._mul_direct(acc, gen)
            exp[i] = acc
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    # -- enumeration -----------------------------------------------------------

    def elements(self) -> list[int]:
        """Codes of all q elements, ascending."""
        return list(range(self.q))

    def units(self) -> list[int]:
        """Codes of the q-1 nonzero elements, ascending."""
        return list(range(1, self.q))

    def primitive_element(self) -> int:
        """Smallest-code element of multiplicative order q-1."""
        if self.q == 2:
            raise NoPrimitive("GF(2) has a trivial unit group")
        if self._exp is not None:
            return self._exp[1]
        for cand in range(2, self.q):
            if self._mult_order(cand) == self.q - 1:
                return cand
        raise NoPrimitive(f"no primitive element in GF({self.q})")  # unreachable

    def generator_powers(self) -> list[int]:
        """[w**0, w**1, ..., w**(q-2)] for the smallest-code primitive w."""
        if self.q == 2:
            return [1]
        g = self.primitive_element()
        out = [1]
        for _ in range(self.q - 2):
            out.append(self.mul(out[-1], g))
        return out

    # -- vectorized operation tables (internal; used by code enumeration) ------

    def add_table(self) -> np.ndarray:
        """q-by-q numpy table with ADD[a, b] = a + b (q <= 512)."""
        if self._np_add is None:
            if self.q > _NP_TABLE_LIMIT:
                raise FieldError(f"operation tables limited to q <= {_NP_TABLE_LIMIT}")
            if self.s == 1:
                r = np.arange(self.q, dtype=np.int64)
                self._np_add = ((r[:, None] + r[None, :]) % self.p).astype(np.uint16)
            else:
                self._np_add = np.array(
                    [[self.add(a, b) for b in range(self.q)] for a in range(self.q)],
                    dtype=np.uint16,
                )
        return self._np_add

    def mul_table(self) -> np.ndarray:
        """q-by-q numpy table with MUL[a, b] = a * b (q <= 512)."""
        if self._np_mul is None:
            if self.q > _NP_TABLE_LIMIT:
                raise FieldError(f"operation tables limited to q <= {_NP_TABLE_LIMIT}")
            if self.s == 1:
                r = np.arange(self.q, dtype=np.int64)
                self._np_mul = ((r[:, None] * r[None, :]) % self.p).astype(np.uint16)
            else:
                self._np_mul = np.array(
                    [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)],
                    dtype=np.uint16,
                )
        return self._np_mul


@dataclass(frozen=True)
class FieldElem:
    """A field element bound to its context: a thin wrapper over the code."""

    code: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.code < self.ctx.q:
            raise ValueError(f"element code {self.code} outside [0, {self.ctx.q})")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise CtxMismatch(f"mixed contexts {self.ctx} and {other.ctx}")
            return other.code
        if isinstance(other, int):
            return self.ctx._check(other)
        return NotImplemented  # pragma: no cover

    def __add__(self, other):
        return FieldElem(self.ctx.add(self.code, self._coerce(other)), self.ctx)

    def __sub__(self, other):
        return FieldElem(self.ctx.sub(self.code, self._coerce(other)), self.ctx)

    def __mul__(self, other):
        return FieldElem(self.ctx.mul(self.code, self._coerce(other)), self.ctx)

    def __truediv__(self, other):
        return FieldElem(self.ctx.div(self.code, self._coerce(other)), self.ctx)

    def __neg__(self):
        return FieldElem(self.ctx.neg(self.code), self.ctx)

    def __pow__(self, e: int):
        return FieldElem(self.ctx.pow(self.code, e), self.ctx)

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx.inv(self.code), self.ctx)

    def __int__(self) -> int:
        return self.code

    def __str__(self) -> str:
        return str(self.code)

    def __repr__(self) -> str:
        return f"FieldElem({self.code}, GF({self.ctx.q}))"
