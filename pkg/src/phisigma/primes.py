"""Primality testing and sieve tables.

Two workhorses live here: a deterministic Miller-Rabin test that is exact
for every 64-bit integer, and SieveTable, an immutable smallest-prime-factor
array over [2, limit] that gives O(log n) factorization for sieved n.
"""

import os

import numpy as np

from .errors import CapacityError, DomainError

# Verified deterministic witness set for n < 2^64 (Sinclair / Jaeschke line
# of results); for larger n the test is still correct whenever it reports
# composite, and we never rely on it beyond 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_DEFAULT_SIEVE_CEILING = 200_000_000
_CEILING_ENV = "PHISIGMA_SIEVE_CEILING"


def sieve_ceiling() -> int:
    """Largest limit build_sieve will accept (env-overridable)."""
    raw = os.environ.get(_CEILING_ENV)
    if raw is None:
        return _DEFAULT_SIEVE_CEILING
    try:
        return int(raw)
    except ValueError:
        return _DEFAULT_SIEVE_CEILING


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2^64."""
    n = int(n)  # accept numpy integers
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (empty for n < 2)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def prime_mask_up_to(n: int) -> np.ndarray:
    """Boolean array of length n+1 with mask[i] == (i is prime)."""
    mask = np.zeros(max(n + 1, 2), dtype=bool)
    if n >= 2:
        mask[primes_up_to(n)] = True
    return mask[: n + 1]


class SieveTable:
    """Immutable smallest-prime-factor table over [2, limit].

    spf[i] is the smallest prime factor of i for 2 <= i <= limit
    (entries 0 and 1 are unused and left at 0).
    """

    def __init__(self, limit: int, spf: np.ndarray):
        self.limit = limit
        self.spf = spf
        self.spf.setflags(write=False)

    def smallest_factor(self, n: int) -> int:
        if not 2 <= n <= self.limit:
            raise DomainError(f"{n} outside sieve range [2, {self.limit}]")
        return int(self.spf[n])

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Sorted (prime, exponent) factorization of n, 1 <= n <= limit."""
        if n < 1 or n > self.limit:
            raise DomainError(f"{n} outside factorizable range [1, {self.limit}]")
        out = []
        while n > 1:
            p = int(self.spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def primes(self) -> np.ndarray:
        idx = np.arange(2, self.limit + 1, dtype=np.int64)
        return idx[self.spf[2:] == idx]


def build_sieve(limit: int) -> SieveTable:
    """Smallest-prime-factor table for [2, limit]."""
    ceiling = sieve_ceiling()
    if limit < 2 or limit > ceiling:
        raise CapacityError(f"sieve limit must be in [2, {ceiling}], got {limit}")
    dtype = np.int32 if limit < 2**31 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    spf[2::2] = 2
    for p in range(3, int(limit**0.5) + 1, 2):
        if spf[p] == 0:
            spf[p * p :: 2 * p] = np.where(
                spf[p * p :: 2 * p] == 0, p, spf[p * p :: 2 * p]
            )
    odd = np.arange(1, limit + 1, 2, dtype=dtype)
    sl = spf[1::2]
    spf[1::2] = np.where(sl == 0, odd, sl)
    spf[1] = 0
    return SieveTable(limit, spf)


def largest_factor_table(limit: int) -> np.ndarray:
    """lpf[i] = largest prime factor of i for 2 <= i <= limit; lpf[1] = 0.

    Built by overwriting multiples in increasing prime order, so the last
    write at each index is its largest prime factor.
    """
    if limit < 1:
        raise DomainError("limit must be >= 1")
    lpf = np.zeros(limit + 1, dtype=np.int64)
    for p in primes_up_to(limit):
        lpf[p::p] = p
    return lpf
