"""Irreducibility, primitivity and search for primitive polynomials over GF(q).

Polynomials here are monic; a ``Polynomial`` stores only the lower
coefficients ``(a_1, ..., a_D)`` of ``x^D + a_1 x^{D-1} + ... + a_D`` as
canonical field indices.  Internally, arithmetic uses plain lists of
indices ordered from the constant term up.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import NotFound, TooLarge
from .field import FieldSpec, make_field

INT_LIMIT = 2**63 - 1
ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class Polynomial:
    field: FieldSpec
    coeffs: tuple[int, ...]  # (a_1, ..., a_D)

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("degree must be >= 1")
        if any(not 0 <= a < self.field.q for a in self.coeffs):
            raise ValueError(f"coefficients {self.coeffs} out of range for {self.field}")

    @classmethod
    def from_indices(cls, q: int, coeffs) -> Polynomial:
        return cls(make_field(q), tuple(int(a) for a in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def low_first(self) -> list[int]:
        """Full coefficient list [a_D, ..., a_1, 1]."""
        return list(reversed(self.coeffs)) + [1]

    def all_nonzero(self) -> bool:
        return all(self.coeffs)

    def __str__(self):
        D = self.degree
        terms = [f"x^{D}" if D > 1 else "x"]
        for i, a in enumerate(self.coeffs, start=1):
            e = D - i
            if a == 0:
                continue
            c = "" if a == 1 and e > 0 else str(a)
            terms.append(c + ("x^%d" % e if e > 1 else "x" if e == 1 else ""))
        return " + ".join(terms)


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]  # (prime, multiplicity), primes increasing

    @property
    def primes(self) -> list[int]:
        return [r for r, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def factorize_and_phi(m: int) -> tuple[FactoredInteger, int]:
    """Trial-division factorization of m together with Euler's totient."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m > INT_LIMIT:
        raise OverflowError(f"{m} exceeds the supported integer width")
    factors = []
    rest = m
    for r in (2, 3):
        e = 0
        while rest % r == 0:
            rest //= r
            e += 1
        if e:
            factors.append((r, e))
    r = 5
    step = 2
    while r * r <= rest:
        e = 0
        while rest % r == 0:
            rest //= r
            e += 1
        if e:
            factors.append((r, e))
        r += step
        step = 6 - step
    if rest > 1:
        factors.append((rest, 1))
    phi = prod((r - 1) * r ** (e - 1) for r, e in factors)
    return FactoredInteger(m, tuple(factors)), phi


# --- polynomial arithmetic over GF(q), low-degree-first index lists ---


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(F: FieldSpec, a: list[int], f: list[int]) -> list[int]:
    """a mod f for monic f."""
    a = _trim(list(a))
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1]
        shift = len(a) - 1 - df
        for j in range(df):
            if f[j]:
                a[shift + j] = F.sub(a[shift + j], F.mul(c, f[j]))
        a.pop()
        _trim(a)
    return a


def _mulmod(F: FieldSpec, a: list[int], b: list[int], f: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _mod(F, out, f)


def _powmod(F: FieldSpec, a: list[int], e: int, f: list[int]) -> list[int]:
    result = _mod(F, [1], f)
    base = _mod(F, a, f)
    while e:
        if e & 1:
            result = _mulmod(F, result, base, f)
        e >>= 1
        if e:
            base = _mulmod(F, base, base, f)
    return result


def _sub(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([F.sub(x, y) for x, y in zip(a, b)])


def _gcd(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        lead = F.inv(b[-1])
        b = [F.mul(c, lead) for c in b]
        a, b = b, _mod(F, a, b)
    return a


def _x_frobenius(F: FieldSpec, f: list[int], m: int) -> list[int]:
    """x^(q^m) mod f."""
    h = _mod(F, [0, 1], f)
    for _ in range(m):
        h = _powmod(F, h, F.q, f)
    return h


def is_irreducible(f: Polynomial) -> bool:
    F = f.field
    D = f.degree
    g = f.low_first()
    if D == 1:
        return True
    if g[0] == 0:
        return False
    x = [0, 1]
    if _x_frobenius(F, g, D) != _mod(F, x, g):
        return False
    for t, _ in factorize_and_phi(D)[0].factors:
        h = _sub(F, _x_frobenius(F, g, D // t), x)
        if len(_gcd(F, h, g)) != 1:
            return False
    return True


def is_primitive(f: Polynomial) -> bool:
    if not is_irreducible(f):
        return False
    F = f.field
    g = f.low_first()
    order = F.q**f.degree - 1
    x = [0, 1]
    if _powmod(F, x, order, g) != [1]:
        return False
    for r in factorize_and_phi(order)[0].primes:
        if _powmod(F, x, order // r, g) == [1]:
            return False
    return True


def _candidates(field: FieldSpec, D: int, all_nonzero: bool):
    values = range(1, field.q) if all_nonzero else range(field.q)
    for coeffs in product(values, repeat=D):
        yield Polynomial(field, coeffs)


def count_primitive(field: FieldSpec, D: int, all_nonzero: bool = False) -> int:
    """Count monic primitive polynomials of degree D by exhaustive testing."""
    if D < 1:
        raise ValueError("degree must be >= 1")
    if field.q**D > ENUMERATION_LIMIT:
        raise TooLarge(f"q^D = {field.q ** D} exceeds {ENUMERATION_LIMIT}")
    return sum(1 for f in _candidates(field, D, all_nonzero) if is_primitive(f))


def primitive_polynomials(field: FieldSpec, D: int, all_nonzero: bool = False):
    """Yield the primitive polynomials of degree D in lexicographic order."""
    for f in _candidates(field, D, all_nonzero):
        if is_primitive(f):
            yield f


def find_primitive(field: FieldSpec, D: int, all_nonzero: bool = False) -> Polynomial:
    """Lexicographically smallest primitive polynomial of degree D.

    Coefficient vectors (a_1, ..., a_D) are compared by canonical index.
    Raises NotFound once the candidates are exhausted and TooLarge if more
    than ENUMERATION_LIMIT candidates were tried without success.
    """
    if D < 1:
        raise ValueError("degree must be >= 1")
    for tried, f in enumerate(_candidates(field, D, all_nonzero), start=1):
        if is_primitive(f):
            return f
        if tried >= ENUMERATION_LIMIT:
            raise TooLarge(f"no hit among the first {ENUMERATION_LIMIT} candidates")
    what = "all-nonzero primitive" if all_nonzero else "primitive"
    raise NotFound(f"no {what} polynomial of degree {D} over {field}")


def find_primitive_all_nonzero(field: FieldSpec, D: int) -> Polynomial:
    return find_primitive(field, D, all_nonzero=True)
