"""Modular combinatorics: orders, cyclotomic cosets, the p-adic order and duadic splittings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .config import N_CAP
from .errors import EvenModulus, NotCoprime, OutOfRange, SearchBudgetExceeded

MAX_SPLITTINGS = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n >= 1`` by trial division, as ``((p, mult), ...)``."""
    if n < 1:
        raise OutOfRange(f"cannot factor {n}")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            k = 0
            while n % f == 0:
                n //= f
                k += 1
            out.append((f, k))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _check_coprime(q: int, n: int) -> None:
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) = {math.gcd(q, n)}")


def mult_order(q: int, n: int) -> int:
    """Smallest t >= 1 with q**t = 1 mod n."""
    _check_coprime(q, n)
    if n == 1:
        return 1
    # order divides the Carmichael-style bound phi(n); reduce from phi(n)
    phi = n
    for p, _ in factorize(n):
        phi = phi // p * (p - 1)
    t = phi
    for p, _ in factorize(phi):
        while t % p == 0 and pow(q, t // p, n) == 1:
            t //= p
    return t


def cyclotomic_coset(s: int, q: int, n: int) -> tuple[int, ...]:
    """Orbit of ``s`` under multiplication by ``q`` modulo ``n``, sorted."""
    _check_coprime(q, n)
    if not 0 <= s < n:
        raise OutOfRange(f"{s} not in Z_{n}")
    orbit = {s}
    x = s * q % n
    while x not in orbit:
        orbit.add(x)
        x = x * q % n
    return tuple(sorted(orbit))


@dataclass(frozen=True)
class CosetPartition:
    n: int
    q: int
    cosets: tuple[tuple[int, ...], ...]

    def coset_of(self, s: int) -> tuple[int, ...]:
        return self.cosets[self._index[s % self.n]]

    def index_of(self, s: int) -> int:
        return self._index[s % self.n]

    @property
    def _index(self) -> dict[int, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {s: i for i, c in enumerate(self.cosets) for s in c}
            object.__setattr__(self, "_idx", idx)
        return idx

    def is_union(self, elements: Iterable[int]) -> bool:
        """True iff ``elements`` is a union of cosets."""
        elements = {s % self.n for s in elements}
        return all(set(self.coset_of(s)) <= elements for s in elements)


@lru_cache(maxsize=4096)
def all_cosets(q: int, n: int) -> CosetPartition:
    _check_coprime(q, n)
    seen: set[int] = set()
    cosets = []
    for s in range(n):
        if s not in seen:
            c = cyclotomic_coset(s, q, n)
            seen.update(c)
            cosets.append(c)
    return CosetPartition(n, q, tuple(cosets))


def p_adic_digits(s: int, p: int, m: int) -> tuple[int, ...]:
    """Base-``p`` digits of ``s``, least significant first, padded to length ``m``."""
    if not 0 <= s < p**m:
        raise OutOfRange(f"{s} not in [0, {p}^{m})")
    digits = []
    for _ in range(m):
        s, d = divmod(s, p)
        digits.append(d)
    return tuple(digits)


def precedes(s: int, t: int, p: int, m: int) -> bool:
    """The p-adic partial order: every digit of ``s`` is at most the digit of ``t``."""
    return all(a <= b for a, b in zip(p_adic_digits(s, p, m), p_adic_digits(t, p, m)))


def is_square_mod(q: int, n: int) -> bool:
    """Exhaustive quadratic-residue test (no Jacobi shortcut)."""
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} is even")
    _check_coprime(q, n)
    target = q % n
    return any(x * x % n == target for x in range(n))


def normalize_multiplier(a: int, n: int) -> int:
    """Representative of ``a`` in [1, n-1] (``-1`` becomes ``n - 1``)."""
    _check_coprime(a, n)
    return a % n if n > 1 else 0


def apply_multiplier(elements: Iterable[int], a: int, n: int) -> frozenset[int]:
    _check_coprime(a, n)
    return frozenset(s * a % n for s in elements)


@dataclass(frozen=True)
class Splitting:
    """Partition of Z_n minus zero into two coset unions swapped by ``mu_a``.

    ``s1`` is the half containing 1; ``a`` is normalised into [1, n-1].
    """

    n: int
    q: int
    s1: frozenset[int]
    s2: frozenset[int]
    a: int

    @property
    def pair(self) -> frozenset[frozenset[int]]:
        return frozenset((self.s1, self.s2))

    def key(self) -> tuple:
        return (tuple(sorted(self.s1)), tuple(sorted(self.s2)), self.a)

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "a": self.a,
                "s1": sorted(self.s1), "s2": sorted(self.s2)}


def _make_splitting(n: int, q: int, s1: frozenset[int], s2: frozenset[int], a: int) -> Splitting:
    if n > 1 and 1 in s2:
        s1, s2 = s2, s1
    return Splitting(n, q, s1, s2, a)


def _splittings_for(part: CosetPartition, a: int) -> Optional[list[tuple[frozenset, frozenset]]]:
    """Halves (s1, s2) exchanged by mu_a, or None when mu_a fixes a nonzero coset.

    mu_a permutes the nonzero cosets; a splitting must alternate along every cycle,
    so odd cycles (including fixed cosets) rule ``a`` out and each even cycle
    contributes an independent two-way choice.
    """
    n = part.n
    nonzero = [i for i, c in enumerate(part.cosets) if c[0] != 0]
    image = {i: part.index_of(part.cosets[i][0] * a) for i in nonzero}
    cycles: list[list[int]] = []
    seen: set[int] = set()
    for i in nonzero:
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = image[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = image[j]
        if len(cyc) % 2:
            return None
        cycles.append(cyc)
    if len(cycles) > 1 and 2 ** (len(cycles) - 1) > MAX_SPLITTINGS:
        raise SearchBudgetExceeded(f"{2 ** (len(cycles) - 1)} splittings for n={n}, a={a}")
    halves = []
    # fix the orientation of the first cycle: the pair {s1, s2} is unordered
    for flips in product((0, 1), repeat=max(len(cycles) - 1, 0)):
        s1: set[int] = set()
        s2: set[int] = set()
        for cyc, flip in zip(cycles, (0,) + flips):
            for pos, ci in enumerate(cyc):
                (s1 if (pos + flip) % 2 == 0 else s2).update(part.cosets[ci])
        halves.append((frozenset(s1), frozenset(s2)))
    return halves


def coset_permutation(q: int, n: int, a: int) -> tuple[int, ...]:
    """Index of the coset that mu_a sends each coset of ``all_cosets(q, n)`` to."""
    _check_coprime(a, n)
    part = all_cosets(q, n)
    return tuple(part.index_of(c[0] * a) for c in part.cosets)


def splits_by(q: int, n: int, a: int) -> bool:
    """Whether mu_a gives at least one splitting: no fixed nonzero coset, only even cycles.

    The set of splittings by mu_a depends only on ``coset_permutation(q, n, a)``, so two
    multipliers inducing the same permutation give the same splittings.
    """
    part = all_cosets(q, n)
    perm = coset_permutation(q, n, a)
    seen: set[int] = set()
    for i, c in enumerate(part.cosets):
        if c[0] == 0 or i in seen:
            continue
        length, j = 1, perm[i]
        seen.add(i)
        while j != i:
            seen.add(j)
            length, j = length + 1, perm[j]
        if length % 2:
            return False
    return n > 1


def find_splittings(n: int, q: int, a: Optional[int] = None, n_cap: int = N_CAP) -> list[Splitting]:
    """All splittings of Z_n by unions of q-cosets.

    With ``a`` given, only splittings by ``mu_a``; otherwise every unit multiplier
    is tried and splittings are deduplicated on the unordered pair, keeping the
    smallest normalised multiplier.  Output order is canonical.
    """
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} is even")
    _check_coprime(q, n)
    if n > n_cap:
        raise SearchBudgetExceeded(f"n={n} above splitting cap {n_cap}")
    part = all_cosets(q, n)
    if n == 1:
        return [Splitting(1, q, frozenset(), frozenset(), 0)]
    multipliers = [normalize_multiplier(a, n)] if a is not None else [
        b for b in range(1, n) if math.gcd(b, n) == 1]
    found: dict[frozenset, Splitting] = {}
    for b in multipliers:
        halves = _splittings_for(part, b)
        for s1, s2 in halves or ():
            sp = _make_splitting(n, q, s1, s2, b)
            found.setdefault(sp.pair, sp)
    return sorted(found.values(), key=Splitting.key)


def splitting_pairs(splittings: Sequence[Splitting]) -> set[frozenset]:
    return {s.pair for s in splittings}


def z_exponent(pi: int, q: int) -> tuple[int, int]:
    """``t = ord_pi(q^2)`` and the exact power ``z`` of ``pi`` dividing ``q^(2t) - 1``."""
    _check_coprime(q, pi)
    t = mult_order(q * q, pi)
    v = q ** (2 * t) - 1
    z = 0
    while v % pi == 0:
        v //= pi
        z += 1
    return t, z
