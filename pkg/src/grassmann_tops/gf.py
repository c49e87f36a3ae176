"""Exact arithmetic in finite fields F_q.

Elements are plain integers in ``[0, q)``.  For a prime field the integer is
the residue itself; for ``q = p**m`` with ``m > 1`` it encodes the polynomial
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` as ``sum(c_i * p**i)``.

Every operation accepts Python ints or numpy integer arrays and broadcasts.
Fields with ``q <= 256`` carry dense operation tables built once at
construction; larger (prime) fields fall back to modular arithmetic.
"""

from __future__ import annotations

import functools
from typing import Iterable

import numpy as np
from sympy import factorint

from .errors import DivisionByZero, NotPrimePower, UnsupportedExtension

TABLE_LIMIT = 256

# Monic moduli, coefficients listed from the constant term upwards.
CONWAY_POLYNOMIALS: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    16: (1, 1, 0, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
    256: (1, 0, 1, 1, 1, 0, 0, 0, 1),
    9: (2, 2, 1),
    27: (1, 2, 0, 1),
    81: (2, 0, 0, 2, 1),
    243: (1, 2, 0, 0, 0, 1),
    25: (2, 4, 1),
    125: (3, 3, 0, 1),
}


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(coeffs: Iterable[int], p: int) -> int:
    value = 0
    for c in reversed(list(coeffs)):
        value = value * p + c
    return value


def _polymulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic, so x^m == -(lower terms)
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(m):
                prod[d - m + i] = (prod[d - m + i] - c * modulus[i]) % p
    return prod[:m]


def _find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree 2 or 3 (root test)."""
    if m not in (2, 3):
        raise UnsupportedExtension(f"no built-in modulus for p={p}, m={m}")
    for low in range(p**m):
        coeffs = tuple(_digits(low, p, m)) + (1,)
        has_root = any(
            sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0 for x in range(p)
        )
        if not has_root:
            return coeffs
    raise UnsupportedExtension(f"no irreducible polynomial found for p={p}, m={m}")


class Field:
    """The finite field with ``q = p**m`` elements.

    Instances are immutable and cached by :func:`make_field`; build them through
    that function rather than directly.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        # int64 is safe as long as a single product of two elements fits
        self.dtype = np.int64 if p < 2**31 else object
        self.add_table = self.mul_table = self.neg_table = self.inv_table = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self) -> None:
        q, p, m = self.q, self.p, self.m
        vals = np.arange(q, dtype=np.int64)
        if m == 1:
            add = (vals[:, None] + vals[None, :]) % p
            mul = (vals[:, None] * vals[None, :]) % p
        else:
            digits = [_digits(v, p, m) for v in range(q)]
            add = np.empty((q, q), dtype=np.int64)
            mul = np.empty((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    s = _undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                    t = _undigits(_polymulmod(digits[a], digits[b], self.modulus, p), p)
                    add[a, b] = add[b, a] = s
                    mul[a, b] = mul[b, a] = t
        neg = np.argmin(add, axis=1)  # add[a, neg[a]] == 0 is the unique zero in row a
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.flatnonzero(mul[a] == 1)
            if len(hits) != 1:
                raise UnsupportedExtension(f"modulus {self.modulus} is not irreducible over F_{p}")
            inv[a] = hits[0]
        for table in (add, mul, neg, inv):
            table.setflags(write=False)
        self.add_table, self.mul_table, self.neg_table, self.inv_table = add, mul, neg, inv

    @property
    def has_tables(self) -> bool:
        return self.add_table is not None

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Field(q={self.q})"
        return f"Field(q={self.q}, p={self.p}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self) -> int:
        return hash((self.q, self.modulus))

    def __reduce__(self):
        return (make_field, (self.q,))

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.has_tables:
            return self.add_table[a, b]
        return (a + b) % self.p

    def sub(self, a, b):
        if self.has_tables:
            return self.add_table[a, self.neg_table[b]]
        return (a - b) % self.p

    def mul(self, a, b):
        if self.has_tables:
            return self.mul_table[a, b]
        return (a * b) % self.p

    def neg(self, a):
        if self.has_tables:
            return self.neg_table[a]
        return (-a) % self.p

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero(f"0 has no inverse in F_{self.q}")
        if self.has_tables:
            return self.inv_table[a]
        if np.ndim(a) == 0:
            return pow(int(a), self.p - 2, self.p)
        return np.vectorize(lambda x: pow(int(x), self.p - 2, self.p), otypes=[self.dtype])(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        result, base = 1, int(a)
        while e:
            if e & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            e >>= 1
        return result

    def elements(self) -> list[int]:
        return list(range(self.q))

    def nonzero(self) -> list[int]:
        return list(range(1, self.q))

    def is_element(self, a) -> bool:
        arr = np.asarray(a)
        return bool(np.all((arr >= 0) & (arr < self.q)))


@functools.lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Return the (cached) field with ``q`` elements.

    Raises NotPrimePower for composite non-prime-powers and
    UnsupportedExtension for ``q = p**m`` with ``m > 1`` and ``q > 256``.
    """
    q = int(q)
    if q < 2:
        raise NotPrimePower(f"q must be at least 2, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, m),) = factors.items()
    if m == 1:
        return Field(p, 1)
    if q > TABLE_LIMIT:
        raise UnsupportedExtension(f"extension fields are limited to q <= {TABLE_LIMIT}, got {q}")
    modulus = CONWAY_POLYNOMIALS.get(q) or _find_irreducible(p, m)
    return Field(p, m, modulus)


def arith(field: Field, op: str, a, b=None):
    """Apply ``op`` in {'add', 'sub', 'mul', 'neg'} to elements of ``field``."""
    if op == "neg":
        return field.neg(a)
    if op not in ("add", "sub", "mul"):
        raise ValueError(f"unknown field operation {op!r}")
    return getattr(field, op)(a, b)


def inv(field: Field, a):
    return field.inv(a)


def elements(field: Field) -> list[int]:
    return field.elements()
