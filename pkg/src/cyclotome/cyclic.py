"""Cyclic codes from defining sets, their duals and extensions.

Coordinates of a length-n cyclic code are indexed 0..n-1 by the exponent of x.
The extended code prepends the overall-sum coordinate at position 0, so an
extended codeword reads (x_0, x_1, ..., x_n) with x_0 = -(x_1 + ... + x_n).

The defining set of a code is read against a fixed primitive n-th root of unity
``beta = alpha**((q**s - 1) // n)``, where alpha is the canonical primitive
element of GF(q**s) and s = ord_n(q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

import numpy as np

from .config import ROOT_FIELD_CAP
from .cyclotomic import all_cosets, factorize, mult_order
from .errors import (FieldMismatch, InvalidParameters, LengthMismatch, NotCoprime,
                     NotCosetClosed, NotSquareField, ZeroCode)
from .field import FieldElement, FieldSpec, Poly, make_field, minimal_polynomial, primitive_element
from .linalg import GF, gf


def field_of_order(q: int) -> FieldSpec:
    """Canonical GF(q) for a prime power ``q``."""
    fac = factorize(q) if q > 1 else ()
    if len(fac) != 1:
        raise InvalidParameters(f"{q} is not a prime power")
    (p, r), = fac
    return make_field(p, r)


@dataclass(frozen=True)
class DefiningSet:
    n: int
    field: FieldSpec
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if math.gcd(self.n, self.q) != 1:
            raise NotCoprime(f"gcd(n={self.n}, q={self.q}) != 1")
        elems = tuple(sorted({s % self.n for s in self.elements}))
        object.__setattr__(self, "elements", elems)
        if not all_cosets(self.q, self.n).is_union(elems):
            raise NotCosetClosed(f"{list(elems)} is not a union of {self.q}-cyclotomic cosets mod {self.n}")

    @classmethod
    def of(cls, n: int, q: int | FieldSpec, elements: Iterable[int]) -> "DefiningSet":
        spec = q if isinstance(q, FieldSpec) else field_of_order(q)
        return cls(n, spec, tuple(elements))

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def degree(self) -> int:
        """s = ord_n(q): beta lives in GF(q**s)."""
        return mult_order(self.q, self.n)

    @property
    def beta_exponent(self) -> int:
        return (self.q**self.degree - 1) // self.n

    def splitting_field(self, cap: int = ROOT_FIELD_CAP) -> FieldSpec:
        return make_field(self.field.p, self.field.e * self.degree, cap)

    def beta(self, cap: int = ROOT_FIELD_CAP) -> FieldElement:
        return primitive_element(self.splitting_field(cap)) ** self.beta_exponent

    def with_elements(self, elements: Iterable[int]) -> "DefiningSet":
        return DefiningSet(self.n, self.field, tuple(elements))

    def __contains__(self, s: int) -> bool:
        return s % self.n in self.elements

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code held as a reduced generator matrix of encodings."""

    field: FieldSpec
    generator: np.ndarray
    length: int
    name: str = ""

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows, length: int, name: str = "") -> "LinearCode":
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, length)
        red, _ = gf(spec).rref(rows) if rows.size else (rows[:0], [])
        return cls(spec, red, length, name)

    @classmethod
    def full(cls, spec: FieldSpec, n: int) -> "LinearCode":
        return cls(spec, np.eye(n, dtype=np.int64), n, "full")

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "LinearCode":
        return cls(spec, np.zeros((0, n), dtype=np.int64), n, "zero")

    @property
    def gf(self) -> GF:
        return gf(self.field)

    @property
    def n(self) -> int:
        return self.length

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @cached_property
    def parity_check(self) -> np.ndarray:
        if self.k == 0:
            return np.eye(self.n, dtype=np.int64)
        return self.gf.nullspace(self.generator)

    def syndromes(self, words: np.ndarray) -> np.ndarray:
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        h = self.parity_check
        if h.shape[0] == 0:
            return np.zeros((words.shape[0], 0), dtype=np.int64)
        return self.gf.matmul(words, h.T)

    def contains_vector(self, v) -> bool:
        return not np.any(self.syndromes(v))

    def contains_code(self, other: "LinearCode") -> bool:
        _check_compatible(self, other)
        return other.k == 0 or not np.any(self.syndromes(other.generator))

    def dual(self) -> "LinearCode":
        return LinearCode.from_rows(self.field, self.parity_check, self.n, f"{self.name}^perp")

    def hermitian_dual(self) -> "LinearCode":
        g = self.gf
        if g.conj is None:
            raise NotSquareField(f"{self.field!r} is not a square field")
        return LinearCode.from_rows(self.field, g.conjugate(self.parity_check), self.n, f"{self.name}^perp_h")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n and self.k == other.k
                and np.array_equal(self.generator, other.generator))

    __hash__ = object.__hash__


def _check_compatible(a: LinearCode, b: LinearCode) -> None:
    if a.n != b.n:
        raise LengthMismatch(f"lengths {a.n} and {b.n} differ")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


@dataclass(frozen=True, eq=False)
class CyclicCode:
    n: int
    field: FieldSpec
    t: DefiningSet
    g: Poly

    @property
    def k(self) -> int:
        return self.n - len(self.t)

    @property
    def length(self) -> int:
        return self.n

    @cached_property
    def linear(self) -> LinearCode:
        if self.k == 0:
            return LinearCode.zero(self.field, self.n)
        return LinearCode.from_rows(self.field, _shift_matrix(self), self.n, f"cyclic{list(self.t.elements)}")

    def to_dict(self) -> dict:
        return {"n": self.n, "q_char": self.field.p, "q_deg": self.field.e,
                "defining_set": list(self.t.elements), "generator": self.g.encodings()}


@dataclass(frozen=True, eq=False)
class ExtendedCode:
    parent: CyclicCode

    @property
    def n(self) -> int:
        return self.parent.n + 1

    @property
    def length(self) -> int:
        return self.n

    @property
    def k(self) -> int:
        return self.parent.k

    @property
    def field(self) -> FieldSpec:
        return self.parent.field

    def generator_matrix(self) -> np.ndarray:
        rows = generator_matrix(self.parent)
        g = gf(self.field)
        total = np.zeros(rows.shape[0], dtype=np.int64)
        for j in range(rows.shape[1]):
            total = g.vadd(total, rows[:, j])
        return np.hstack([g.neg[total][:, None], rows])

    @cached_property
    def linear(self) -> LinearCode:
        if self.k == 0:
            return LinearCode.zero(self.field, self.n)
        return LinearCode.from_rows(self.field, self.generator_matrix(), self.n,
                                    f"ext{list(self.parent.t.elements)}")

    def to_dict(self) -> dict:
        d = self.parent.to_dict()
        d.update(extended=True, length=self.n)
        return d


AnyCode = Union[CyclicCode, ExtendedCode, LinearCode]


def as_linear(code: AnyCode) -> LinearCode:
    return code if isinstance(code, LinearCode) else code.linear


def code_from_defining_set(t: DefiningSet, cap: int = ROOT_FIELD_CAP) -> CyclicCode:
    """Generator polynomial as the product of minimal polynomials over the cosets of ``t``."""
    spec = t.field
    g = Poly(spec, (spec.one,))
    if t.elements:
        beta = t.beta(cap)
        part = all_cosets(t.q, t.n)
        reps = sorted({part.coset_of(s)[0] for s in t.elements})
        for rep in reps:
            g = g * minimal_polynomial(beta**rep, spec.e)
    return CyclicCode(t.n, spec, t, g)


def dual_defining_set(t: DefiningSet) -> DefiningSet:
    n = t.n
    return t.with_elements(s for s in range(n) if (n - s) % n not in t)


def hermitian_dual_defining_set(t: DefiningSet) -> DefiningSet:
    """Defining set of the Hermitian dual over GF(q^2): {s : -q*s mod n not in T}."""
    if t.field.e % 2:
        raise NotSquareField(f"{t.field!r} is not GF(q^2)")
    root = t.field.p ** (t.field.e // 2)
    n = t.n
    return t.with_elements(s for s in range(n) if (-root * s) % n not in t)


def contains(outer: CyclicCode, inner: CyclicCode) -> bool:
    """outer contains inner: a larger defining set is a smaller code."""
    if outer.n != inner.n:
        raise LengthMismatch(f"lengths {outer.n} and {inner.n} differ")
    if outer.field != inner.field:
        raise FieldMismatch(f"{outer.field!r} vs {inner.field!r}")
    return set(outer.t.elements) <= set(inner.t.elements)


def _shift_matrix(code: CyclicCode) -> np.ndarray:
    coeffs = code.g.encodings()
    rows = np.zeros((code.k, code.n), dtype=np.int64)
    for i in range(code.k):
        rows[i, i:i + len(coeffs)] = coeffs
    return rows


def generator_matrix(code: CyclicCode) -> np.ndarray:
    """Rows g, xg, ..., x^(k-1) g."""
    if code.k == 0:
        raise ZeroCode("the zero code has no generator matrix")
    return _shift_matrix(code)


def extend(code: CyclicCode) -> ExtendedCode:
    return ExtendedCode(code)


def complementary(t: DefiningSet) -> DefiningSet:
    return t.with_elements(s for s in range(t.n) if s not in t)


def cyclic_code(n: int, q: int | FieldSpec, elements: Iterable[int]) -> CyclicCode:
    """Shorthand: code of length ``n`` over GF(q) with the given defining set."""
    return code_from_defining_set(DefiningSet.of(n, q, elements))


def xn_minus_one(spec: FieldSpec, n: int) -> Poly:
    return Poly.make(spec, [-spec.one] + [spec.zero] * (n - 1) + [spec.one])
