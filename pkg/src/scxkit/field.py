"""Arithmetic in GF(q), q = p^k.

Elements are residue vectors (little-endian polynomials over GF(p) reduced
modulo a fixed monic irreducible).  Every element has a canonical integer
index ``sum(c[i] * p**i)`` in ``[0, q)``; the rest of the package works
with those indices and uses the ``FieldSpec.add``/``mul``/... methods, which
are table driven for small extension fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from .errors import DivisionByZero, FieldMismatch, IndexOutOfRange, NotPrimePower

# extension fields up to this order get precomputed add/mul tables
TABLE_LIMIT = 1024


def _prime_power(q: int) -> tuple[int, int]:
    p = None
    m = q
    f = 2
    while f * f <= m:
        if m % f == 0:
            p = f
            break
        f += 1
    if p is None:
        return q, 1
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, k


def _polymod_p(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a by the monic m over GF(p); lists are low-degree first."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _irreducible_mod_p(low: tuple[int, ...], p: int) -> bool:
    """Trial division of x^k + low by every monic polynomial of degree <= k/2."""
    k = len(low)
    f = list(low) + [1]
    if k == 1:
        return True
    if low[0] == 0:
        return False
    for deg in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=deg):
            g = list(tail) + [1]
            if not any(_polymod_p(f, g, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: tuple[int, ...] | None = None  # low coefficients c_0..c_{k-1} of the monic modulus

    @property
    def q(self) -> int:
        return self.p**self.k

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # elements

    def element(self, index: int) -> FieldElement:
        return element_of_index(self, index)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def elements(self) -> list[FieldElement]:
        return [element_of_index(self, i) for i in range(self.q)]

    # index-level arithmetic

    @cached_property
    def _tables(self):
        els = self.elements()
        add = [[canonical_index(a + b) for b in els] for a in els]
        mul = [[canonical_index(a * b) for b in els] for a in els]
        neg = [canonical_index(-a) for a in els]
        inv = [0] + [canonical_index(a.inverse()) for a in els[1:]]
        return add, mul, neg, inv

    def _use_tables(self) -> bool:
        return self.k > 1 and self.q <= TABLE_LIMIT

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._use_tables():
            return self._tables[0][a][b]
        return canonical_index(self.element(a) + self.element(b))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self._use_tables():
            return self._tables[2][a]
        return canonical_index(-self.element(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self._use_tables():
            return self._tables[1][a][b]
        return canonical_index(self.element(a) * self.element(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._use_tables():
            return self._tables[3][a]
        return canonical_index(self.element(a).inverse())

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Return GF(q).

    For ``q = p^k`` with ``k >= 2`` the modulus is the lexicographically
    smallest monic irreducible of degree k over GF(p), comparing the
    coefficient vectors ``(c_0, c_1, ..., c_{k-1})`` from the constant term up.
    """
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"field order must be an integer >= 2, got {q!r}")
    p, k = _prime_power(q)
    if k == 1:
        return FieldSpec(p, 1)
    for low in product(range(p), repeat=k):
        if _irreducible_mod_p(low, p):
            return FieldSpec(p, k, tuple(low))
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.k or any(not 0 <= c < self.field.p for c in self.coeffs):
            raise ValueError(f"invalid coefficients {self.coeffs} for {self.field}")

    def _check(self, other) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __int__(self):
        return canonical_index(self)

    def __repr__(self):
        return f"{self.field}[{canonical_index(self)}]"

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        F = self.field
        if F.k == 1:
            return FieldElement(F, (self.coeffs[0] * other.coeffs[0] % F.p,))
        prod = [0] * (2 * F.k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElement(F, tuple(_polymod_p(prod, list(F.modulus) + [1], F.p)))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not self:
            raise DivisionByZero("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()


def canonical_index(a: FieldElement) -> int:
    p = a.field.p
    return sum(c * p**i for i, c in enumerate(a.coeffs))


def element_of_index(field: FieldSpec, index: int) -> FieldElement:
    if not 0 <= index < field.q:
        raise IndexOutOfRange(f"index {index} not in [0, {field.q})")
    coeffs = []
    for _ in range(field.k):
        index, r = divmod(index, field.p)
        coeffs.append(r)
    return FieldElement(field, tuple(coeffs))
