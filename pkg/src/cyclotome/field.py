"""Exact arithmetic in GF(p) and GF(p^e) with a canonical, reproducible modulus.

An element of GF(p^e) is a coefficient vector over Z_p (ascending degree) reduced
modulo the canonical modulus: the monic irreducible polynomial of degree ``e``
with the smallest integer encoding ``sum(c_i * p**i)``.  The integer encoding of
an element, ``enc(x) = sum(coeffs[i] * p**i)``, is what gets serialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .config import FIELD_CAP
from .cyclotomic import factorize, is_prime
from .errors import (DivisionByZero, InvalidSubfield, MixedFields, NotPrime,
                     SizeBudgetExceeded, ZeroElement)


# -- polynomials over Z_p as coefficient lists (internal helpers) -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by monic b over Z_p."""
    r = [x % p for x in a]
    db = len(b) - 1
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            off = k - db
            for i in range(db + 1):
                r[off + i] = (r[off + i] - c * b[i]) % p
    return _trim(r[:db])


def _monic(p: int, d: int) -> Iterator[list[int]]:
    """Monic degree-d polynomials over Z_p in increasing encoding order."""
    for low in range(p**d):
        coeffs = []
        for _ in range(d):
            low, c = divmod(low, p)
            coeffs.append(c)
        yield coeffs + [1]


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    e = len(f) - 1
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for g in _monic(p, d):
            if not _zp_rem(f, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def _canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for f in _monic(p, e):
        if f[0] == 0:
            continue
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("an irreducible polynomial exists in every degree")


# -- fields and elements -----------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def element(self, enc: int) -> "FieldElement":
        if not 0 <= enc < self.order:
            raise ValueError(f"{enc} is not an encoding in {self!r}")
        coeffs = []
        for _ in range(self.e):
            enc, c = divmod(enc, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def scalar(self, c: int) -> "FieldElement":
        """Image of the integer ``c`` under Z -> GF(p^e)."""
        return FieldElement(self, (c % self.p,) + (0,) * (self.e - 1))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.e)

    @property
    def one(self) -> "FieldElement":
        return self.scalar(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of X (equal to 0 in the prime-field convention)."""
        return self.element(self.p if self.e > 1 else 0)

    def elements(self) -> Iterator["FieldElement"]:
        for enc in range(self.order):
            yield self.element(enc)


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1, cap: int = FIELD_CAP) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p**e > cap:
        raise SizeBudgetExceeded(f"{p}^{e} exceeds field cap {cap}")
    return FieldSpec(p, e, _canonical_modulus(p, e))


def _mulmod(a: Sequence[int], b: Sequence[int], spec: FieldSpec) -> tuple[int, ...]:
    p, e, mod = spec.p, spec.e, spec.modulus
    if e == 1:
        return (a[0] * b[0] % p,)
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(2 * e - 2, e - 1, -1):
        c = prod[k] % p
        if c:
            off = k - e
            for i in range(e):
                prod[off + i] -= c * mod[i]
    return tuple(x % p for x in prod[:e])


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def enc(self) -> int:
        p = self.spec.p
        v = 0
        for c in reversed(self.coeffs):
            v = v * p + c
        return v

    def __repr__(self) -> str:
        return f"{self.spec!r}[{self.enc}]"

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise MixedFields(f"{self!r} and {other!r} live in different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, _mulmod(self.coeffs, other.coeffs, self.spec))

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.spec.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("zero has no inverse")
        return self ** (self.spec.order - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def frobenius(self, times: int = 1) -> "FieldElement":
        return self ** (self.spec.p**times)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch ``op`` in {add, sub, mul, div}."""
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def element_order(x: FieldElement) -> int:
    if not x:
        raise ZeroElement("zero has no multiplicative order")
    t = x.spec.order - 1
    for f, _ in factorize(t):
        while t % f == 0 and (x ** (t // f)).coeffs == x.spec.one.coeffs:
            t //= f
    return t


@lru_cache(maxsize=None)
def primitive_element(spec: FieldSpec) -> FieldElement:
    """The generator of GF(p^e)* with the smallest encoding."""
    target = spec.order - 1
    for enc in range(1, spec.order):
        x = spec.element(enc)
        if element_order(x) == target:
            return x
    raise AssertionError("multiplicative group is cyclic")


# -- polynomials over a field ------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial over ``base`` with ascending coefficients and no trailing zeros."""

    base: FieldSpec
    coeffs: tuple[FieldElement, ...]

    @classmethod
    def make(cls, base: FieldSpec, coeffs: Sequence[FieldElement]) -> "Poly":
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        return cls(base, tuple(c))

    @classmethod
    def from_encodings(cls, base: FieldSpec, encs: Sequence[int]) -> "Poly":
        return cls.make(base, [base.element(v) for v in encs])

    @classmethod
    def monomial(cls, base: FieldSpec, degree: int, c: FieldElement | None = None) -> "Poly":
        c = base.one if c is None else c
        return cls.make(base, [base.zero] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def encodings(self) -> list[int]:
        return [c.enc for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Poly({self.base!r}, {self.encodings()})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.base.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Poly.make(self.base, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> "Poly":
        return Poly.make(self.base, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self or not other:
            return Poly(self.base, ())
        out = [self.base.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly.make(self.base, out)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        lead_inv = other.coeffs[-1].inverse()
        dq = len(r) - len(other.coeffs)
        quo = [self.base.zero] * max(dq + 1, 0)
        for k in range(dq, -1, -1):
            c = r[k + other.degree] * lead_inv
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    r[k + i] = r[k + i] - c * b
        return Poly.make(self.base, quo), Poly.make(self.base, r[: other.degree] if other.degree > 0 else [])

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = x.spec.zero
        if x.spec == self.base:
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        emb = subfield_embedding(x.spec, self.base.e)
        for c in reversed(self.coeffs):
            acc = acc * x + emb[c.enc]
        return acc

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].coeffs == self.base.one.coeffs


@lru_cache(maxsize=None)
def subfield_embedding(big: FieldSpec, r: int) -> tuple[FieldElement, ...]:
    """Images in ``big`` of the canonical GF(p^r), indexed by encoding.

    The generator X of GF(p^r) goes to the root of its modulus in ``big`` with the
    smallest encoding, which fixes the embedding deterministically.
    """
    if big.e % r:
        raise InvalidSubfield(f"GF({big.p}^{r}) is not a subfield of {big!r}")
    small = make_field(big.p, r)
    if r == big.e:
        return tuple(big.elements())
    if r == 1:
        return tuple(big.scalar(c) for c in range(big.p))
    alpha = primitive_element(big)
    gamma = alpha ** ((big.order - 1) // (small.order - 1))
    sub = [big.zero]
    y = big.one
    for _ in range(small.order - 1):
        sub.append(y)
        y = y * gamma
    mod_poly = Poly.make(big, [big.scalar(c) for c in small.modulus])
    rho = min((x for x in sub if not mod_poly(x)), key=lambda x: x.enc)
    images = []
    for c in small.elements():
        acc = big.zero
        for ci in reversed(c.coeffs):
            acc = acc * rho + big.scalar(ci)
        images.append(acc)
    return tuple(images)


@lru_cache(maxsize=None)
def _subfield_index(big: FieldSpec, r: int) -> dict[tuple[int, ...], int]:
    return {img.coeffs: enc for enc, img in enumerate(subfield_embedding(big, r))}


def frobenius_orbit(x: FieldElement, r: int) -> list[FieldElement]:
    """x, x^(p^r), x^(p^2r), ... until the orbit closes."""
    q = x.spec.p**r
    orbit = [x]
    y = x**q
    while y.coeffs != x.coeffs:
        orbit.append(y)
        y = y**q
    return orbit


def minimal_polynomial(x: FieldElement, r: int = 1) -> Poly:
    """Minimal polynomial of ``x`` over the canonical GF(p^r)."""
    big = x.spec
    if big.e % r:
        raise InvalidSubfield(f"{r} does not divide {big.e}")
    acc = Poly(big, (big.one,))
    for y in frobenius_orbit(x, r):
        acc = acc * Poly.make(big, [-y, big.one])
    index = _subfield_index(big, r)
    small = make_field(big.p, r)
    try:
        return Poly.make(small, [small.element(index[c.coeffs]) for c in acc.coeffs])
    except KeyError:
        raise AssertionError("Frobenius-orbit product left the subfield") from None


def modulus_is_irreducible(spec: FieldSpec) -> bool:
    return _is_irreducible(spec.modulus, spec.p)
