"""Ideal lattice of Z_n.

Every ideal of Z_n is generated by a divisor of n, so an ideal is represented
canonically by its exponent vector r with 0 <= r_i <= m_i against the ordered
prime factorization n = p_1^{m_1} ... p_k^{m_k}.  The all-zero vector is the
whole ring, the vector (m_1, ..., m_k) is the zero ideal; the T = prod(m_i+1)-2
vectors strictly between the two are the nonzero proper ideals.  Ideal sum is
the componentwise minimum (gcd of generators), ideal intersection the
componentwise maximum (lcm of generators).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod

Vector = tuple[int, ...]


class DomainError(ValueError):
    """n is outside the supported domain (needs n >= 4 and n composite)."""


@dataclass(frozen=True)
class Factorization:
    """Ordered prime factorization of a composite modulus n."""

    n: int
    primes: Vector
    exponents: Vector

    def __post_init__(self) -> None:
        if len(self.primes) != len(self.exponents) or not self.primes:
            raise ValueError("primes and exponents must be nonempty and aligned")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError("primes must be distinct and ascending")
        if any(m < 1 for m in self.exponents):
            raise ValueError("exponents must be positive")
        if prod(p**m for p, m in zip(self.primes, self.exponents)) != self.n:
            raise ValueError("factorization does not multiply out to n")
        if self.n < 4 or (len(self.primes) == 1 and self.exponents[0] == 1):
            raise DomainError(f"n={self.n} is prime or too small; Z_n has no nonzero proper ideals to graph")

    @property
    def k(self) -> int:
        return len(self.primes)

    @property
    def zero_ideal(self) -> Vector:
        """Exponent vector of the zero ideal (every exponent saturated)."""
        return self.exponents

    @property
    def unit_ideal(self) -> Vector:
        """Exponent vector of the whole ring."""
        return (0,) * self.k

    def generator(self, exps: Vector) -> int:
        """The divisor of n generating the ideal with the given exponents."""
        return prod(p**r for p, r in zip(self.primes, exps))


def factorize(n: int) -> Factorization:
    """Factor a composite n >= 4 by trial division.

    Raises DomainError for n < 4 or n prime: those moduli have no nonzero
    proper ideals, so every downstream graph would be empty.
    """
    if n < 4:
        raise DomainError(f"n must be at least 4, got {n}")
    primes: list[int] = []
    exps: list[int] = []
    x = n
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            primes.append(p)
            exps.append(e)
        p += 1 if p == 2 else 2
    if x > 1:
        primes.append(x)
        exps.append(1)
    if len(primes) == 1 and exps[0] == 1:
        raise DomainError(f"n={n} is prime; Z_n has no nonzero proper ideals to graph")
    return Factorization(n, tuple(primes), tuple(exps))


def total_ideal_count(fact: Factorization) -> int:
    """T, the number of nonzero proper ideals of Z_n."""
    return prod(m + 1 for m in fact.exponents) - 2


def essential_count(fact: Factorization) -> int:
    """Number of essential ideals; the order of the clique they induce."""
    return prod(fact.exponents) - 1


@lru_cache(maxsize=None)
def enumerate_ideals(fact: Factorization) -> tuple[Vector, ...]:
    """All nonzero proper ideals, ordered by ascending generator.

    The generator order (2, 3, 4, 6 for n=12) is the canonical vertex order
    used everywhere, so indices are reproducible across runs.
    """
    ranges = [range(m + 1) for m in fact.exponents]
    vecs = [
        v
        for v in itertools.product(*ranges)
        if any(v) and v != fact.exponents
    ]
    return tuple(sorted(vecs, key=fact.generator))


@lru_cache(maxsize=None)
def nonzero_ideal_vectors(fact: Factorization) -> tuple[Vector, ...]:
    """Every nonzero ideal's vector, including the whole ring, excluding the zero ideal."""
    ranges = [range(m + 1) for m in fact.exponents]
    return tuple(v for v in itertools.product(*ranges) if v != fact.exponents)


def ideal_sum(a: Vector, b: Vector) -> Vector:
    """Sum of two ideals: componentwise minimum (gcd of the generators).

    May be the whole ring (all zeros); callers decide whether that matters.
    """
    return tuple(min(x, y) for x, y in zip(a, b))


def ideal_intersection(a: Vector, b: Vector) -> Vector:
    """Intersection of two ideals: componentwise maximum (lcm of the generators)."""
    return tuple(max(x, y) for x, y in zip(a, b))


def is_essential_criterion(vec: Vector, fact: Factorization) -> bool:
    """Closed-form essentiality test: no exponent is saturated.

    The whole ring (all zeros) counts as essential, which the formula already
    gives since every m_i >= 1.
    """
    return all(r < m for r, m in zip(vec, fact.exponents))


def is_essential_oracle(vec: Vector, fact: Factorization) -> bool:
    """Definitional essentiality test: nonzero intersection with every nonzero ideal.

    Quantifies over every vector other than the zero ideal (the whole ring
    included) and checks the intersection never collapses to the zero ideal.
    Kept deliberately independent of the closed-form criterion.
    """
    zero = fact.exponents
    return all(ideal_intersection(vec, other) != zero for other in nonzero_ideal_vectors(fact))


def saturated_indices(vec: Vector, fact: Factorization) -> frozenset[int]:
    """1-based positions where the exponent is saturated (r_i = m_i).

    Empty exactly when the ideal is essential; this set is the key that
    groups nonessential ideals into classes.
    """
    return frozenset(i + 1 for i, (r, m) in enumerate(zip(vec, fact.exponents)) if r == m)


@lru_cache(maxsize=None)
def essential_ideals(fact: Factorization) -> tuple[Vector, ...]:
    """Essential ideals in generator order, selected by the definitional oracle."""
    return tuple(v for v in enumerate_ideals(fact) if is_essential_oracle(v, fact))


@lru_cache(maxsize=None)
def nonessential_ideals(fact: Factorization) -> tuple[Vector, ...]:
    """Nonessential ideals in generator order, selected by the definitional oracle."""
    return tuple(v for v in enumerate_ideals(fact) if not is_essential_oracle(v, fact))


def format_ideal(fact: Factorization, vec: Vector) -> str:
    return f"<{fact.generator(vec)}>"


def composites(lo: int, hi: int) -> list[Factorization]:
    """Factorizations of every composite n in [lo, hi]; primes and n < 4 skipped."""
    out = []
    for n in range(max(lo, 4), hi + 1):
        try:
            out.append(factorize(n))
        except DomainError:
            continue
    return out
