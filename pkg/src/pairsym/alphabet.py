"""Finite symbol sets with exact arithmetic: Z_q, GF(p^m) and direct products.

Every symbol is a canonical integer in ``[0, q)``.  Field elements encode the
polynomial ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` as ``sum(c_i * p**i)``;
elements of a direct product encode in mixed radix with the first factor most
significant, so ``(s1, s2)`` over ``A1 x A2`` is ``s1 * |A2| + s2``.
"""

from __future__ import annotations

import functools
import itertools
from math import prod
from typing import Sequence

import numpy as np

from .errors import InvalidParameter, NonInvertible

# Arithmetic tables are materialised only up to this order.
TABLE_LIMIT = 1 << 12


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` or None when q is not a prime power."""
    if q < 2:
        return None
    p = next(f for f in itertools.count(2) if q % f == 0)
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


# -- polynomials over Z_p, coefficient lists low degree first -----------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        f = a[-1] * inv_lead % p
        for i, c in enumerate(mod):
            a[i + shift] = (a[i + shift] - f * c) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


@functools.cache
def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over Z_p.

    Coefficient tuples are compared low degree first.
    """
    for low in itertools.product(range(p), repeat=m):
        poly = list(low) + [1]
        if m == 1 or is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- alphabets -----------------------------------------------------------------


class Alphabet:
    """A finite commutative ring on the symbols ``0..q-1``.

    ``kind`` is ``"ring"`` (Z_q), ``"field"`` (GF(p^m)) or ``"product"``
    (direct product of other alphabets, componentwise arithmetic).
    Instances are immutable and compare by value.
    """

    def __init__(self, kind, q, p=None, m=None, modulus=None, factors=()):
        self.kind = kind
        self.q = q
        self.p = p
        self.m = m
        self.modulus = tuple(modulus) if modulus is not None else None
        self.factors = tuple(factors)

    # identity ---------------------------------------------------------------

    def _key(self):
        return (self.kind, self.q, self.p, self.m, self.modulus, self.factors)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind == "ring":
            return f"Z{self.q}"
        if self.kind == "field":
            return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"
        return " x ".join(repr(f) for f in self.factors)

    @property
    def order(self) -> int:
        return self.q

    @property
    def is_field(self) -> bool:
        return self.kind == "field"

    # encoding ---------------------------------------------------------------

    def decode(self, s: int):
        """Structured form of a symbol: int, coefficient tuple, or component tuple."""
        self._check(s)
        if self.kind == "ring":
            return s
        if self.kind == "field":
            return tuple((s // self.p**i) % self.p for i in range(self.m))
        out = []
        for f in reversed(self.factors):
            s, r = divmod(s, f.q)
            out.append(f.decode(r))
        return tuple(reversed(out))

    def encode(self, value) -> int:
        if self.kind == "ring":
            s = int(value)
        elif self.kind == "field":
            coeffs = list(value)
            if len(coeffs) != self.m or any(not 0 <= c < self.p for c in coeffs):
                raise InvalidParameter(f"bad coefficient vector {value!r} for {self!r}")
            s = sum(c * self.p**i for i, c in enumerate(coeffs))
        else:
            if len(value) != len(self.factors):
                raise InvalidParameter(f"bad component tuple {value!r} for {self!r}")
            s = 0
            for f, v in zip(self.factors, value):
                s = s * f.q + f.encode(v)
        self._check(s)
        return s

    def _check(self, s):
        if not 0 <= s < self.q:
            raise InvalidParameter(f"symbol {s} outside [0, {self.q})")

    def _split(self, s: int) -> list[int]:
        out = []
        for f in reversed(self.factors):
            s, r = divmod(s, f.q)
            out.append(r)
        return out[::-1]

    def _join(self, parts: Sequence[int]) -> int:
        s = 0
        for f, v in zip(self.factors, parts):
            s = s * f.q + v
        return s

    # scalar arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.kind == "ring":
            return (a + b) % self.q
        if self.kind == "field":
            return int(self.add_table[a, b])
        return self._join([f.add(x, y) for f, x, y in zip(self.factors, self._split(a), self._split(b))])

    def neg(self, a: int) -> int:
        if self.kind == "ring":
            return -a % self.q
        if self.kind == "field":
            return int(self.neg_table[a])
        return self._join([f.neg(x) for f, x in zip(self.factors, self._split(a))])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.kind == "ring":
            return a * b % self.q
        if self.kind == "field":
            return int(self.mul_table[a, b])
        return self._join([f.mul(x, y) for f, x, y in zip(self.factors, self._split(a), self._split(b))])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.kind == "ring":
            try:
                return pow(a, -1, self.q)
            except ValueError:
                raise NonInvertible(f"{a} is not a unit of Z{self.q}") from None
        if self.kind == "field":
            return int(self.inv_table[a])
        try:
            return self._join([f.inv(x) for f, x in zip(self.factors, self._split(a))])
        except ZeroDivisionError:
            raise NonInvertible(f"{a} has a zero component in {self!r}") from None

    def one(self) -> int:
        if self.kind == "product":
            return self._join([f.one() for f in self.factors])
        return 1

    # tables -----------------------------------------------------------------

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        return self._table(self._add_slow)

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self._mul_slow)

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self._neg_slow(a) for a in range(self.q)], dtype=np.int32)

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        """``inv_table[a]`` is the inverse of a, or -1 for non-units (and 0)."""
        out = np.full(self.q, -1, dtype=np.int32)
        mt = self.mul_table
        one = self.one()
        for a in range(1, self.q):
            hits = np.flatnonzero(mt[a] == one)
            if hits.size:
                out[a] = hits[0]
        return out

    def _table(self, fn) -> np.ndarray:
        if self.q > TABLE_LIMIT:
            raise InvalidParameter(f"alphabet of order {self.q} too large for tables")
        q = self.q
        return np.array([[fn(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)

    def _add_slow(self, a, b):
        if self.kind == "field":
            x, y = self.decode(a), self.decode(b)
            return self.encode([(u + v) % self.p for u, v in zip(x, y)])
        return self.add(a, b)

    def _neg_slow(self, a):
        if self.kind == "field":
            return self.encode([-u % self.p for u in self.decode(a)])
        return self.neg(a)

    def _mul_slow(self, a, b):
        if self.kind == "field":
            prod_ = _poly_mul(self.decode(a), self.decode(b), self.p)
            r = _poly_mod(prod_, self.modulus, self.p)
            return self.encode(r + [0] * (self.m - len(r)))
        return self.mul(a, b)

    # vectorised arithmetic on numpy arrays of symbols ----------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == "ring":
            return (np.asarray(a, dtype=np.int64) + b) % self.q
        return self.add_table[a, b]

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == "ring":
            return (np.asarray(a, dtype=np.int64) * b) % self.q
        return self.mul_table[a, b]

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.kind == "ring":
            return -np.asarray(a, dtype=np.int64) % self.q
        return self.neg_table[a]

    # serialisation ---------------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == "ring":
            return {"kind": "ring", "q": self.q}
        if self.kind == "field":
            return {"kind": "field", "p": self.p, "m": self.m, "modulus": list(self.modulus)}
        return {"kind": "product", "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, obj: dict) -> "Alphabet":
        kind = obj.get("kind")
        if kind == "ring":
            return make_ring(int(obj["q"]))
        if kind == "field":
            a = make_field(int(obj["p"]), int(obj["m"]))
            if "modulus" in obj and tuple(obj["modulus"]) != a.modulus:
                a = _field_with_modulus(a.p, a.m, tuple(int(c) for c in obj["modulus"]))
            return a
        if kind == "product":
            return make_product([cls.from_json(f) for f in obj["factors"]])
        raise InvalidParameter(f"unknown alphabet kind {kind!r}")


@functools.cache
def make_ring(q: int) -> Alphabet:
    """The ring Z_q."""
    if not isinstance(q, int) or q < 2:
        raise InvalidParameter(f"ring order must be an integer >= 2, got {q!r}")
    return Alphabet("ring", q)


@functools.cache
def make_field(p: int, m: int = 1) -> Alphabet:
    """GF(p^m) built on the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise InvalidParameter(f"field characteristic must be prime, got {p}")
    if m < 1:
        raise InvalidParameter(f"extension degree must be >= 1, got {m}")
    return Alphabet("field", p**m, p=p, m=m, modulus=smallest_irreducible(p, m))


def _field_with_modulus(p, m, modulus):
    if len(modulus) != m + 1 or modulus[-1] != 1 or not (m == 1 or is_irreducible(modulus, p)):
        raise InvalidParameter(f"modulus {modulus} is not monic irreducible of degree {m}")
    return Alphabet("field", p**m, p=p, m=m, modulus=modulus)


def field_of_order(q: int) -> Alphabet:
    pm = prime_power(q)
    if pm is None:
        raise InvalidParameter(f"{q} is not a prime power")
    return make_field(*pm)


def make_product(factors: Sequence[Alphabet]) -> Alphabet:
    factors = tuple(factors)
    if len(factors) < 2:
        raise InvalidParameter("a product alphabet needs at least two factors")
    return Alphabet("product", prod(f.q for f in factors), factors=factors)


class AbelianGroup:
    """Direct product of cyclic groups, elements encoded in mixed radix."""

    def __init__(self, factors: Sequence[int]):
        self.factors = tuple(int(f) for f in factors)
        if not self.factors or any(f < 1 for f in self.factors):
            raise InvalidParameter(f"bad factor orders {factors!r}")
        self.order = prod(self.factors)

    def __repr__(self):
        return "AbelianGroup(" + " x ".join(f"Z{f}" for f in self.factors) + ")"

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def encode(self, element: Sequence[int] | int) -> int:
        if isinstance(element, int):
            element = (element,)
        s = 0
        for f, v in zip(self.factors, element, strict=True):
            s = s * f + v % f
        return s

    def decode(self, s: int) -> tuple[int, ...]:
        out = []
        for f in reversed(self.factors):
            s, r = divmod(s, f)
            out.append(r)
        return tuple(reversed(out))

    def add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def as_alphabet(self) -> Alphabet:
        """The group viewed as a ring alphabet (same encoding, componentwise mod)."""
        if any(f < 2 for f in self.factors):
            raise InvalidParameter("trivial cyclic factors cannot form an alphabet")
        if len(self.factors) == 1:
            return make_ring(self.factors[0])
        return make_product([make_ring(f) for f in self.factors])
