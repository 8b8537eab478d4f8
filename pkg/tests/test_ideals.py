"""Ideal lattice: factorization, enumeration, arithmetic, essentiality."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from essgraph.ideals import (
    DomainError,
    Factorization,
    composites,
    enumerate_ideals,
    essential_count,
    essential_ideals,
    factorize,
    ideal_intersection,
    ideal_sum,
    is_essential_criterion,
    is_essential_oracle,
    nonessential_ideals,
    nonzero_ideal_vectors,
    saturated_indices,
    total_ideal_count,
)


def test_factorize_examples():
    f = factorize(60)
    assert f.primes == (2, 3, 5)
    assert f.exponents == (2, 1, 1)
    f8 = factorize(8)
    assert f8.primes == (2,)
    assert f8.exponents == (3,)


@pytest.mark.parametrize("bad", [7, 2, 3, 1, 0, -6, 97, 7919])
def test_factorize_rejects_primes_and_small(bad):
    with pytest.raises(DomainError):
        factorize(bad)


def test_factorization_validates_itself():
    with pytest.raises(ValueError):
        Factorization(12, (3, 2), (1, 2))
    with pytest.raises(ValueError):
        Factorization(12, (2, 3), (1, 1))
    with pytest.raises(DomainError):
        Factorization(5, (5,), (1,))


def test_enumerate_ideals_n12_order_and_vectors():
    f = factorize(12)
    assert enumerate_ideals(f) == ((1, 0), (0, 1), (2, 0), (1, 1))
    assert [f.generator(v) for v in enumerate_ideals(f)] == [2, 3, 4, 6]


def test_enumerate_ideals_matches_divisor_oracle():
    # independent oracle: nonzero proper ideals of Z_n <-> divisors d, 1 < d < n
    for n in (12, 60, 8, 36, 210):
        f = factorize(n)
        divisors = sorted(d for d in range(2, n) if n % d == 0)
        assert [f.generator(v) for v in enumerate_ideals(f)] == divisors


def test_ideal_count_formula():
    assert total_ideal_count(factorize(60)) == 3 * 2 * 2 - 2 == 10
    assert len(enumerate_ideals(factorize(60))) == 10
    assert len(enumerate_ideals(factorize(8))) == 2
    for f in composites(4, 300):
        assert len(enumerate_ideals(f)) == total_ideal_count(f)


def test_ideal_sum_examples():
    assert ideal_sum((2, 0), (0, 1)) == (0, 0)  # coprime generators give the whole ring
    assert ideal_sum((2, 1, 0), (0, 1, 1)) == (0, 1, 0)
    assert ideal_sum((1, 0), (1, 1)) == (1, 0)


def test_ideal_intersection_examples():
    f12 = factorize(12)
    assert ideal_intersection((2, 0), (0, 1)) == (2, 1) == f12.zero_ideal
    assert ideal_intersection((1, 0), (1, 1)) == (1, 1)
    assert ideal_intersection((1, 0, 0), (0, 1, 0)) == (1, 1, 0)


def test_sum_and_intersection_track_gcd_lcm():
    f = factorize(60)
    vecs = enumerate_ideals(f)
    for a in vecs:
        for b in vecs:
            assert f.generator(ideal_sum(a, b)) == math.gcd(f.generator(a), f.generator(b))
            lcm = f.generator(a) * f.generator(b) // math.gcd(f.generator(a), f.generator(b))
            # intersection caps at n: <lcm mod n> degenerates to the zero ideal
            assert f.generator(ideal_intersection(a, b)) == (lcm if lcm < f.n else f.n)


def test_essential_criterion_examples():
    f12 = factorize(12)
    assert is_essential_criterion((1, 0), f12)
    assert not is_essential_criterion((2, 0), f12)
    assert not is_essential_criterion((1, 1, 0), factorize(60))


def test_essential_oracle_examples():
    f12 = factorize(12)
    assert not is_essential_oracle((0, 1), f12)
    assert is_essential_oracle((1, 0), f12)
    f8 = factorize(8)
    assert is_essential_oracle((1,), f8)
    assert is_essential_oracle((2,), f8)


def test_unit_ideal_counts_as_essential():
    f = factorize(60)
    assert is_essential_criterion(f.unit_ideal, f)
    assert is_essential_oracle(f.unit_ideal, f)


def test_criterion_agrees_with_oracle_small_sweep():
    for f in composites(4, 200):
        for vec in nonzero_ideal_vectors(f):
            assert is_essential_criterion(vec, f) == is_essential_oracle(vec, f), (f.n, vec)


def test_essential_count_formula():
    for f in composites(4, 300):
        assert len(essential_ideals(f)) == essential_count(f)
        assert len(nonessential_ideals(f)) == total_ideal_count(f) - essential_count(f)


def test_saturated_indices_examples():
    f60 = factorize(60)
    assert saturated_indices((2, 0, 1), f60) == frozenset({1, 3})
    assert saturated_indices((0, 1, 1), f60) == frozenset({2, 3})
    assert saturated_indices((1, 0), factorize(12)) == frozenset()


def test_saturated_empty_iff_essential():
    for f in composites(4, 200):
        for vec in enumerate_ideals(f):
            assert (not saturated_indices(vec, f)) == is_essential_criterion(vec, f)


@st.composite
def fact_and_vectors(draw, count=2):
    n = draw(st.integers(min_value=4, max_value=4000))
    try:
        f = factorize(n)
    except DomainError:
        f = factorize(n + 1)  # n was an odd prime, so n+1 is an even composite >= 6
    vecs = [
        tuple(draw(st.integers(min_value=0, max_value=m)) for m in f.exponents)
        for _ in range(count)
    ]
    return f, vecs


@settings(max_examples=200, deadline=None)
@given(fact_and_vectors(count=3))
def test_sum_intersection_algebra(data):
    f, (a, b, c) = data
    assert ideal_sum(a, b) == ideal_sum(b, a)
    assert ideal_intersection(a, b) == ideal_intersection(b, a)
    assert ideal_sum(a, ideal_sum(b, c)) == ideal_sum(ideal_sum(a, b), c)
    assert ideal_intersection(a, ideal_intersection(b, c)) == ideal_intersection(ideal_intersection(a, b), c)
    assert ideal_sum(a, a) == a
    assert ideal_intersection(a, a) == a
    assert all(x <= y and x <= z for x, y, z in zip(ideal_sum(a, b), a, b))
    assert all(x >= y and x >= z for x, y, z in zip(ideal_intersection(a, b), a, b))
