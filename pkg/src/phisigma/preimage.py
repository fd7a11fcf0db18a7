"""Complete enumeration of totient and sum-of-divisors preimages.

inverse_phi(n) returns every x with phi(x) = n; inverse_sigma(n) every x
with sigma(x) = n.  Both assemble x as a product of prime powers read off
the divisors of n, so they stay fast even when n has tens of thousands of
preimages.  brute_inverse is the slow scanning cross-check.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError
from .factored import FactoredInteger, divisor_list
from .primes import is_prime

DEFAULT_TARGET_CEILING = 10**12
BRUTE_CEILING = 10**5


@dataclass(frozen=True)
class PreimageSet:
    """Sorted, complete solution set of phi(x) = target or sigma(x) = target."""

    target: int
    kind: str  # "phi" or "sigma"
    witnesses: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.witnesses)

    def __contains__(self, x: int) -> bool:
        return x in set(self.witnesses)


def _check_target(n: int, ceiling: int):
    if n < 1:
        raise DomainError(f"target must be positive, got {n}")
    if n > ceiling:
        raise CapacityError(f"target {n} above ceiling {ceiling}")


def inverse_phi(n: int, ceiling: int = DEFAULT_TARGET_CEILING) -> PreimageSet:
    """All x with phi(x) = n.

    Candidate primes are d + 1 for divisors d of n; x is assembled over
    candidates in decreasing order, consuming phi(p^e) from the remaining
    quotient, each prime used at most once per branch.
    """
    _check_target(n, ceiling)
    if n > 1 and n % 2:
        return PreimageSet(n, "phi", ())
    divs = divisor_list(FactoredInteger.from_int(n))
    cands = [d + 1 for d in divs if is_prime(d + 1)]
    cands.sort(reverse=True)
    memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def assemble(r: int, i: int) -> tuple[int, ...]:
        key = (r, i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = [1] if r == 1 else []
        for j in range(i, len(cands)):
            p = cands[j]
            contrib = p - 1  # phi of the growing prime power
            power = p
            while r % contrib == 0:
                out.extend(power * t for t in assemble(r // contrib, j + 1))
                contrib *= p
                power *= p
        res = tuple(out)
        memo[key] = res
        return res

    return PreimageSet(n, "phi", tuple(sorted(assemble(n, 0))))


def _sigma_prime_power_candidates(divs: list[int]) -> list[tuple[int, int, int]]:
    """(p, p^e, sigma(p^e)) for every divisor equal to some sigma(p^e) > 1."""
    cands = []
    for d in divs:
        if d < 3:
            continue
        if is_prime(d - 1):
            cands.append((d - 1, d - 1, d))
        # e >= 2: sigma(p^e) is strictly increasing in p, so binary search;
        # smallest case sigma(2^e) = 2^(e+1) - 1 bounds the exponent range
        e = 2
        while (1 << (e + 1)) - 1 <= d:
            lo, hi = 2, int(d ** (1.0 / e)) + 2
            while lo <= hi:
                mid = (lo + hi) // 2
                s = (mid ** (e + 1) - 1) // (mid - 1)
                if s == d:
                    if is_prime(mid):
                        cands.append((mid, mid**e, d))
                    break
                if s < d:
                    lo = mid + 1
                else:
                    hi = mid - 1
            e += 1
    cands.sort(key=lambda c: (-c[0], c[1]))
    return cands


def inverse_sigma(n: int, ceiling: int = DEFAULT_TARGET_CEILING) -> PreimageSet:
    """All x with sigma(x) = n.

    Candidates are prime powers p^e whose divisor sum divides n; assembly
    mirrors inverse_phi, skipping over same-prime candidates once p is used.
    """
    _check_target(n, ceiling)
    divs = divisor_list(FactoredInteger.from_int(n))
    cands = _sigma_prime_power_candidates(divs)
    # nxt[j]: first candidate index with a strictly smaller prime than cands[j]
    nxt = [0] * len(cands)
    for j in range(len(cands) - 1, -1, -1):
        if j + 1 < len(cands) and cands[j + 1][0] == cands[j][0]:
            nxt[j] = nxt[j + 1]
        else:
            nxt[j] = j + 1
    memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def assemble(r: int, i: int) -> tuple[int, ...]:
        if r == 1:
            return (1,)
        key = (r, i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = []
        for j in range(i, len(cands)):
            p, power, s = cands[j]
            if r % s == 0:
                out.extend(power * t for t in assemble(r // s, nxt[j]))
        res = tuple(out)
        memo[key] = res
        return res

    return PreimageSet(n, "sigma", tuple(sorted(assemble(n, 0))))


def brute_inverse(n: int, kind: str, ceiling: int = BRUTE_CEILING) -> PreimageSet:
    """Scanning oracle: every m up to the theoretical witness bound is tested.

    For phi the bound is 2n^2 (phi(m) >= sqrt(m/2)); for sigma it is n
    itself (sigma(m) >= m).  Quadratic, hence capped at oracle scale.
    """
    if kind not in ("phi", "sigma"):
        raise DomainError(f"kind must be phi or sigma, got {kind!r}")
    _check_target(n, ceiling)
    stop = 2 * n * n + 1 if kind == "phi" else n + 1
    pick = 0 if kind == "phi" else 1
    hits = []
    segment = 1 << 22
    lo = 1
    while lo < stop:
        hi = min(lo + segment, stop)
        vals = _phi_sigma_chunk(lo, hi)[pick]
        found = np.nonzero(vals == n)[0]
        hits.extend(int(lo + i) for i in found)
        lo = hi
    return PreimageSet(n, kind, tuple(hits))


def _phi_sigma_chunk(lo: int, hi: int):
    # local import: the shared windowed kernel lives with the census code
    from .census import phi_sigma_window

    return phi_sigma_window(lo, hi)
