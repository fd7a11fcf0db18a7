"""Slow, obviously-correct reference implementations.

Everything in here is deliberately written the dumbest way that works
(trial division, full sieves, top-down recursion) so the fast library
code has an independent standard to be checked against.  Nothing below
imports from phisigma.
"""

import math

import numpy as np


def trial_factor(n: int) -> dict:
    """Factor n by trial division; returns {prime: exponent}."""
    assert n >= 1
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def naive_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def naive_sigma(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def naive_rad(n: int) -> int:
    r = 1
    for p in trial_factor(n):
        r *= p
    return r


def naive_lambda(n: int) -> int:
    """Carmichael lambda as the lcm of the orders of every unit mod n."""
    if n == 1:
        return 1
    phi = naive_phi(n)
    divs = sorted(d for d in range(1, phi + 1) if phi % d == 0)
    lam = 1
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        order = next(d for d in divs if pow(a, d, n) == 1)
        lam = lam * order // math.gcd(lam, order)
    return lam


def brute_max_order(n: int) -> int:
    """Largest multiplicative order among the units mod n, by stepping every
    unit simultaneously until each hits 1."""
    if n == 1:
        return 1
    base = np.array([a for a in range(1, n) if math.gcd(a, n) == 1], dtype=np.int64)
    cur = base.copy()
    k = 0
    best = 1
    while len(base):
        k += 1
        done = cur == 1
        if done.any():
            best = k
            base = base[~done]
            cur = cur[~done]
        cur = cur * base % n
    return best


def phi_table(limit: int) -> np.ndarray:
    """phi(n) for 0 <= n <= limit via the standard multiplicative sieve."""
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # p was never touched, so it is prime
            phi[p::p] -= phi[p::p] // p
    return phi


def sigma_table(limit: int) -> np.ndarray:
    """sigma(n) for 0 <= n <= limit by adding every divisor explicitly."""
    sig = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        sig[d::d] += d
    return sig


def chain_member(t: int, q: int, y: int, _memo=None) -> bool:
    """Top-down test: can t be reached from q through primes s <= y with
    each step s' = 1 (mod s)?  Counterpart of the library's bottom-up BFS.
    """
    if _memo is None:
        _memo = {}
    if t in _memo:
        return _memo[t]
    if t > y or not trial_is_prime(t):
        res = False
    elif t == q:
        res = True
    else:
        _memo[t] = False  # guard against cycles while we recurse
        res = any(
            chain_member(s, q, y, _memo)
            for s in trial_factor(t - 1)
            if s <= y
        )
    _memo[t] = res
    return res


def smooth_count_brute(x: int, bound: int) -> int:
    """How many n <= x have all prime factors <= bound (includes n = 1)."""
    return sum(1 for n in range(1, x + 1) if max(trial_factor(n), default=1) <= bound)


def preimages_brute(n: int, func, hi: int) -> list:
    """All x <= hi with func(x) == n, by direct evaluation."""
    return [x for x in range(1, hi + 1) if func(x) == n]
