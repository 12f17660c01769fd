"""Arithmetic in GF(q) for prime powers q, polynomial basis.

An element is stored as an integer index in ``[0, q)``: the base-p digits of
the index are the coefficients of its polynomial representative, lowest
degree first.  For prime fields the index is simply the residue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from c4free.errors import DivisionByZero, NotPrimePower

MAX_ORDER = 1 << 16
TABLE_LIMIT = 256


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, d)`` with ``q == p**d``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    d = 0
    r = q
    while r % p == 0:
        r //= p
        d += 1
    if r != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return p, d


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotPrimePower:
        return False
    return True


def is_prime(q: int) -> bool:
    return q >= 2 and is_prime_power(q) and factor_prime_power(q)[1] == 1


# Polynomials over GF(p) are coefficient tuples, lowest degree first.

def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm] + [0] * (dm - len(a[:dm]))


def _monic_polys(p: int, deg: int):
    # Lexicographic order on coefficient vectors read low-degree first.
    for lower in product(range(p), repeat=deg):
        yield tuple(lower) + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for dd in range(1, deg // 2 + 1):
        for div in _monic_polys(p, dd):
            if not any(_poly_mod(list(poly), div, p)):
                return False
    return True


def smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, d):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("irreducible polynomials exist in every degree")


@dataclass(frozen=True)
class Field:
    q: int
    p: int
    d: int
    modulus: tuple[int, ...] | None = None
    _add: tuple = field(default=(), repr=False, compare=False)
    _mul: tuple = field(default=(), repr=False, compare=False)
    _inv: tuple = field(default=(), repr=False, compare=False)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self._add:
            return self._add[a][b]
        if self.d == 1:
            return (a + b) % self.p
        da, db = _digits(a, self.p, self.d), _digits(b, self.p, self.d)
        return _from_digits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        self._check(a)
        if self.d == 1:
            return -a % self.p
        return _from_digits([-c % self.p for c in _digits(a, self.p, self.d)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self._mul:
            return self._mul[a][b]
        if self.d == 1:
            return a * b % self.p
        return _poly_mul(a, b, self.p, self.d, self.modulus)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        if self._inv:
            return self._inv[a]
        if self.d == 1:
            return pow(a, self.p - 2, self.p)
        # a^(q-2) by square-and-multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def arith(self, op: str, a: int, b: int | None = None) -> int:
        if op in ("inv", "neg"):
            return getattr(self, op)(a)
        if op not in ("add", "sub", "mul"):
            raise ValueError(f"unknown field operation {op!r}")
        if b is None:
            raise ValueError(f"{op} needs two operands")
        return getattr(self, op)(a, b)


def _digits(a: int, p: int, d: int) -> list[int]:
    out = []
    for _ in range(d):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _poly_mul(a: int, b: int, p: int, d: int, mod) -> int:
    da, db = _digits(a, p, d), _digits(b, p, d)
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _from_digits(_poly_mod(prod, mod, p), p)


def _from_digits(cs, p: int) -> int:
    v = 0
    for c in reversed(list(cs)):
        v = v * p + c
    return v


@lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    """Construct GF(q).

    Extension fields use the lexicographically smallest monic irreducible
    modulus; small ones (q <= 256) carry precomputed operation tables.
    """
    p, d = factor_prime_power(q)
    if q > MAX_ORDER:
        raise ValueError(f"field order {q} exceeds supported maximum {MAX_ORDER}")
    if d == 1:
        return Field(q=q, p=p, d=1)
    mod = smallest_irreducible(p, d)
    if q > TABLE_LIMIT:
        return Field(q=q, p=p, d=d, modulus=mod)
    digs = [_digits(a, p, d) for a in range(q)]
    add = tuple(
        tuple(_from_digits([(x + y) % p for x, y in zip(digs[a], digs[b])], p) for b in range(q))
        for a in range(q)
    )
    mul = tuple(tuple(_poly_mul(a, b, p, d, mod) for b in range(q)) for a in range(q))
    inv = [0] * q
    for a in range(1, q):
        inv[a] = mul[a].index(1)
    return Field(q=q, p=p, d=d, modulus=mod, _add=add, _mul=mul, _inv=tuple(inv))
