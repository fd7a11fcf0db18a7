"""Prime chains and the empirical shifted-prime counters.

A prime chain for q is a sequence of primes q = t0, t1, ... with each
t_{j+1} == 1 (mod t_j).  T(y, q) collects the primes <= y reachable this
way with every link <= y; members carry an explicit witness chain.

Also here: the exact counters S_q(x; bound, a) over shifted primes p+a,
the exceptional set E built from them, and plain smooth-number counting.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .factored import factor_int
from .primes import is_prime, largest_factor_table, prime_mask_up_to, primes_up_to


@dataclass(frozen=True)
class ChainSet:
    """T(y, q) with one breadth-first witness chain per member."""

    bound_y: int
    root_q: int
    members: tuple[int, ...]
    witness: dict[int, tuple[int, ...]]

    def __contains__(self, t: int) -> bool:
        return t in self.witness

    def to_json_dict(self) -> dict:
        return {
            "y": self.bound_y,
            "q": self.root_q,
            "members": list(self.members),
            "witnesses": {str(t): list(ch) for t, ch in sorted(self.witness.items())},
        }


def prime_chain_set(y: int, q: int) -> ChainSet:
    """Breadth-first closure of {q} under "next prime is 1 mod current"."""
    if not is_prime(q):
        raise DomainError(f"chain root {q} must be prime")
    if y < 1:
        raise DomainError(f"bound {y} must be positive")
    witness: dict[int, tuple[int, ...]] = {}
    if q <= y:
        witness[q] = (q,)
        frontier = [q]
        mask = prime_mask_up_to(y)
        while frontier:
            fresh = []
            for t in frontier:  # frontier kept sorted: smallest-prime-first
                for s in range(1 + t, y + 1, t):
                    if mask[s] and s not in witness:
                        witness[s] = witness[t] + (s,)
                        fresh.append(s)
            frontier = sorted(fresh)
    return ChainSet(y, q, tuple(sorted(witness)), witness)


@lru_cache(maxsize=128)
def _cached_chain_set(y: int, q: int) -> ChainSet:
    return prime_chain_set(y, q)


def chain_membership_oracle(t: int, q: int, y: int) -> bool:
    """True iff t lies in T(y, q); t must be a prime <= y."""
    if not is_prime(t) or not is_prime(q):
        raise DomainError("membership test needs prime t and q")
    if t > y:
        raise DomainError(f"t={t} exceeds the chain bound y={y}")
    return t in _cached_chain_set(y, q)


def unrestricted_iterate_test(t: int, q: int) -> bool:
    """The iterated-totient membership test, links unbounded.

    True iff t == q or q divides some phi-iterate of t.  Differs from the
    bounded chain definition only through chains that leave [2, y]; exposed
    for cross-validation, not used by T(y, q).
    """
    if not is_prime(t) or not is_prime(q):
        raise DomainError("iterate test needs prime t and q")
    if t == q:
        return True
    v = t
    while v > 1:
        phi = 1
        for p, e in factor_int(v):
            phi *= p ** (e - 1) * (p - 1)
        v = phi
        if v % q == 0:
            return True
    return False


def verify_chain_set(cs: ChainSet) -> bool:
    """Re-check every stored witness link by link; raises on any defect."""
    for t, chain in cs.witness.items():
        if chain[0] != cs.root_q or chain[-1] != t:
            raise DomainError(f"witness for {t} has wrong endpoints")
        for link in chain:
            if link > cs.bound_y or not is_prime(link):
                raise DomainError(f"witness link {link} invalid for {t}")
        for a, b in zip(chain, chain[1:]):
            if b % a != 1:
                raise DomainError(f"broken congruence {b} != 1 mod {a}")
    return True


def chain_growth_diagnostic(y: int, q: int, epsilon: float) -> dict:
    """Report #T(y,q) against the (y/q)^(1+eps) growth shape."""
    if not is_prime(q):
        raise DomainError(f"chain root {q} must be prime")
    if y <= q:
        raise DomainError(f"diagnostic needs y > q, got y={y}, q={q}")
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    count = len(prime_chain_set(y, q).members)
    ratio = count / (y / q) ** (1.0 + epsilon)
    return {"y": y, "q": q, "epsilon": epsilon, "count": count, "ratio": ratio}


def forbidden_set(y: int, roots) -> tuple[int, ...]:
    """Union of T(y, q) over the given prime roots, sorted."""
    acc: set[int] = set()
    for q in roots:
        if not is_prime(q):
            raise DomainError(f"forbidden-set root {q} must be prime")
        acc.update(prime_chain_set(y, q).members)
    return tuple(sorted(acc))


def _shifted_smooth_mask(x: int, smooth_bound: int, a: int):
    """Primes p <= x and a mask of those with P(p+a) <= smooth_bound."""
    if a not in (1, -1):
        raise DomainError(f"shift a must be +1 or -1, got {a}")
    if smooth_bound < 2:
        raise DomainError(f"smooth bound must be >= 2, got {smooth_bound}")
    if x < 2:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=bool)
    primes = primes_up_to(x)
    shifted = primes + a
    lpf = largest_factor_table(x + 1)  # lpf[1] = 0: p+a = 1 is vacuously smooth
    return primes, lpf[shifted] <= smooth_bound


def smooth_shifted_count(x: int, smooth_bound: int, q: int, a: int) -> int:
    """S_q: primes p <= x with q | p+a and p+a having no factor > smooth_bound."""
    if not is_prime(q):
        raise DomainError(f"modulus {q} must be prime")
    primes, smooth = _shifted_smooth_mask(x, smooth_bound, a)
    if not len(primes):
        return 0
    return int(np.count_nonzero(smooth & ((primes + a) % q == 0)))


def exceptional_set(x: int, y: int, smooth_bound: int, gamma: float) -> tuple[int, ...]:
    """Primes q <= y whose S_q count (either shift) falls at or below
    gamma * x / (q * ln x).  Ties count as exceptional."""
    if x < 3:
        raise DomainError(f"x must be >= 3 for a meaningful threshold, got {x}")
    if y > x:
        raise DomainError(f"modulus bound y={y} exceeds x={x}")
    if gamma <= 0:
        raise DomainError("gamma must be positive")
    primes_x, smooth_plus = _shifted_smooth_mask(x, smooth_bound, 1)
    _, smooth_minus = _shifted_smooth_mask(x, smooth_bound, -1)
    logx = math.log(x)
    out = []
    for q in (int(v) for v in primes_up_to(y)):
        threshold = gamma * x / (q * logx)
        s_plus = int(np.count_nonzero(smooth_plus & ((primes_x + 1) % q == 0)))
        if s_plus <= threshold:
            out.append(q)
            continue
        s_minus = int(np.count_nonzero(smooth_minus & ((primes_x - 1) % q == 0)))
        if s_minus <= threshold:
            out.append(q)
    return tuple(out)


def smooth_count(x: int, bound: int) -> int:
    """How many n <= x have every prime factor <= bound (n = 1 included)."""
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    if bound < 2 or x == 1:
        return 1
    primes = [int(p) for p in primes_up_to(bound)]

    def count_from(i: int, cap: int) -> int:
        total = 1  # the empty product
        for j in range(i, len(primes)):
            p = primes[j]
            if p > cap:
                break
            power = p
            while power <= cap:
                total += count_from(j + 1, cap // power)
                power *= p
        return total

    return count_from(0, x)
