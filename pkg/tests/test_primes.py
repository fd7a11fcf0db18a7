import os

import numpy as np
import pytest

import oracles
from phisigma.errors import CapacityError
from phisigma.primes import (
    SieveTable,
    build_sieve,
    is_prime,
    largest_factor_table,
    prime_mask_up_to,
    primes_up_to,
)

FIRST_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                53, 59, 61, 67, 71, 73, 79, 83, 89, 97]

# composites that fool weak probabilistic tests
CARMICHAELS = [561, 1105, 1729, 2465, 2821, 6601, 41041, 825265]
STRONG_PSEUDOPRIMES = [
    3215031751,          # strong pseudoprime to bases 2, 3, 5, 7
    3825123056546413051, # strong pseudoprime to all bases up to 23
]


def test_is_prime_small_range():
    for n in range(-3, 3000):
        assert is_prime(n) == oracles.trial_is_prime(n), n


def test_is_prime_rejects_carmichael_and_strong_pseudoprimes():
    for n in CARMICHAELS + STRONG_PSEUDOPRIMES:
        assert not is_prime(n), n


def test_is_prime_large_known_values():
    assert is_prime(2**61 - 1)            # Mersenne prime M61
    assert is_prime(2**64 - 59)           # largest prime below 2^64
    assert not is_prime(2**64 - 1)
    assert not is_prime((2**31 - 1) ** 2)


def test_is_prime_accepts_numpy_integers():
    assert is_prime(np.int64(97))
    assert not is_prime(np.int64(91))


def test_primes_up_to_matches_known_list():
    assert list(primes_up_to(100)) == FIRST_PRIMES
    assert list(primes_up_to(1)) == []
    assert list(primes_up_to(2)) == [2]


def test_primes_up_to_count_at_one_million():
    assert len(primes_up_to(10**6)) == 78498


def test_prime_mask_consistent_with_list():
    mask = prime_mask_up_to(500)
    assert mask.sum() == len(primes_up_to(500))
    assert [i for i in range(501) if mask[i]] == list(primes_up_to(500))


def test_sieve_table_factorize_matches_trial_division():
    table = build_sieve(3000)
    for n in range(2, 3000):
        assert dict(table.factorize(n)) == oracles.trial_factor(n), n


def test_sieve_table_smallest_factor():
    table = build_sieve(1000)
    for p in primes_up_to(1000):
        assert table.smallest_factor(int(p)) == p
    assert table.smallest_factor(999) == 3
    assert table.smallest_factor(998) == 2


def test_sieve_table_primes_property():
    table = build_sieve(200)
    assert list(table.primes()) == list(primes_up_to(200))


def test_build_sieve_capacity_limits(monkeypatch):
    with pytest.raises(CapacityError):
        build_sieve(1)
    monkeypatch.setenv("PHISIGMA_SIEVE_CEILING", "5000")
    with pytest.raises(CapacityError):
        build_sieve(6000)
    assert isinstance(build_sieve(5000), SieveTable)


def test_largest_factor_table():
    lft = largest_factor_table(2000)
    for n in range(2, 2001):
        assert lft[n] == max(oracles.trial_factor(n)), n
