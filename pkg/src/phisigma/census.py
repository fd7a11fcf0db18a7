"""Sieve-driven censuses of totient and sum-of-divisors values.

The core kernel evaluates phi(m) and sigma(m) for every m in a window
[lo, hi) with one pass of vectorized prime marking; everything else --
which n <= limit are phi-values / sigma-values / both, the A(n), B(n)
histograms, popular-value search -- is bookkeeping on top of it.

The scan over arguments m is the only subtle part: phi(m) <= limit can
happen for m well beyond limit.  We scan to the classical minimal-order
bound limit * ceil(e^gamma * log log limit + 3) and then keep going until
an entire segment produces no phi(m) <= limit, so correctness never rests
on the analytic constant; phi(m) >= sqrt(m/2) caps the whole affair at
2 * limit^2.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, DomainError
from .primes import primes_up_to

SEGMENT = 1 << 22
DEFAULT_CENSUS_CEILING = 10**8
EULER_GAMMA = 0.5772156649015329

_base_primes = {"top": 0, "primes": np.empty(0, dtype=np.int64)}


def _primes_for(top: int) -> np.ndarray:
    if top > _base_primes["top"]:
        grown = max(top, 2 * _base_primes["top"], 1 << 10)
        _base_primes["primes"] = primes_up_to(grown)
        _base_primes["top"] = grown
    pr = _base_primes["primes"]
    return pr[pr <= top]


def phi_sigma_window(lo: int, hi: int):
    """phi(m) and sigma(m) for all m in [lo, hi), as two int64 arrays.

    Classic segmented multiplicative sieve: divide out each base prime
    power, accumulate the prime-power formulas, then patch the surviving
    cofactor (a single prime > sqrt(hi)).
    """
    if lo < 1 or hi <= lo:
        raise DomainError(f"bad window [{lo}, {hi})")
    n = hi - lo
    rem = np.arange(lo, hi, dtype=np.int64)
    phi = np.ones(n, dtype=np.int64)
    sig = np.ones(n, dtype=np.int64)
    fac = np.ones(n, dtype=np.int64)  # sigma factor of the current prime
    for p in _primes_for(math.isqrt(hi - 1)):
        p = int(p)
        first = (-lo) % p
        sl = slice(first, None, p)
        phi[sl] *= p - 1
        fac[sl] += p
        rem[sl] //= p
        q = p * p
        while q < hi:
            slq = slice((-lo) % q, None, q)
            phi[slq] *= p
            fac[slq] = fac[slq] * p + 1
            rem[slq] //= p
            q *= p
        sig[sl] *= fac[sl]
        fac[sl] = 1
    big = rem > 1  # leftover prime factor above the sieving bound
    phi[big] *= rem[big] - 1
    sig[big] *= rem[big] + 1
    return phi, sig


def squarefree_mask_window(lo: int, hi: int) -> np.ndarray:
    """Boolean mask over [lo, hi): True where m is squarefree."""
    mask = np.ones(hi - lo, dtype=bool)
    for p in _primes_for(math.isqrt(hi - 1)):
        q = int(p) * int(p)
        mask[(-lo) % q :: q] = False
    return mask


class Bitset:
    """Dense bit array for marking which values in [0, size) were seen."""

    def __init__(self, size: int):
        self.size = size
        self.data = np.zeros((size + 7) // 8, dtype=np.uint8)

    def mark(self, values: np.ndarray):
        if len(values):
            np.bitwise_or.at(
                self.data, values >> 3, np.uint8(1) << (values & 7).astype(np.uint8)
            )

    def test(self, values: np.ndarray) -> np.ndarray:
        return (self.data[values >> 3] >> (values & 7).astype(np.uint8)) & 1 > 0

    def count(self) -> int:
        if hasattr(np, "bitwise_count"):
            return int(np.bitwise_count(self.data).sum())
        return int(np.unpackbits(self.data).sum())

    def or_with(self, other: "Bitset"):
        np.bitwise_or(self.data, other.data, out=self.data)

    def intersection_count(self, other: "Bitset") -> int:
        both = np.bitwise_and(self.data, other.data)
        if hasattr(np, "bitwise_count"):
            return int(np.bitwise_count(both).sum())
        return int(np.unpackbits(both).sum())


def phi_domain_bound(limit: int) -> int:
    """Argument bound: phi(m) <= limit should force m below this.

    Uses the minimal-order multiplier e^gamma log log m plus slack; the
    census re-verifies at runtime rather than trusting the constant.
    """
    if limit < 3:
        mult = 3
    else:
        mult = max(3, math.ceil(math.exp(EULER_GAMMA) * math.log(math.log(limit)) + 3))
    return limit * mult


@dataclass
class CensusResult:
    limit: int
    phi_value_count: int
    sigma_value_count: int
    common_count: int
    squarefree_domain: bool = False
    scan_stop: int = 0  # first argument beyond the verified phi scan
    phi_bits: Bitset | None = field(default=None, repr=False)
    sigma_bits: Bitset | None = field(default=None, repr=False)

    def summary(self) -> dict:
        return {
            "limit": self.limit,
            "squarefree_domain": self.squarefree_domain,
            "phi_values": self.phi_value_count,
            "sigma_values": self.sigma_value_count,
            "common": self.common_count,
        }


def _check_limit(limit: int, ceiling: int):
    if limit < 1:
        raise DomainError(f"limit must be positive, got {limit}")
    if limit > ceiling:
        raise CapacityError(f"limit {limit} above census ceiling {ceiling}")


def _segments(lo: int, hi: int):
    while lo < hi:
        yield lo, min(lo + SEGMENT, hi)
        lo = min(lo + SEGMENT, hi)


def _mark_window(limit, lo, hi, phi_bits, sigma_bits, squarefree: bool) -> int:
    """Mark values contributed by arguments in [lo, hi).

    Returns the number of m in the window with phi(m) <= limit *before*
    any squarefree filtering -- the termination test must stay conservative
    for the restricted census too.
    """
    phi, sig = phi_sigma_window(lo, hi)
    in_range = int(np.count_nonzero(phi <= limit))
    if squarefree:
        keep = squarefree_mask_window(lo, hi)
        phi = phi[keep]
        sig = sig[keep]
    phi_bits.mark(phi[phi <= limit])
    if lo <= limit:
        sigma_bits.mark(sig[sig <= limit])
    return in_range


def value_census(
    limit: int,
    squarefree_domain: bool = False,
    workers: int = 1,
    keep_bitsets: bool = False,
    arg_range: tuple[int, int] | None = None,
    ceiling: int = DEFAULT_CENSUS_CEILING,
) -> CensusResult:
    """Count phi-values, sigma-values, and common values in [1, limit].

    With arg_range=(a, b) only arguments a <= m < b contribute, no
    termination scan is run, and bitsets are kept for later merging.
    """
    _check_limit(limit, ceiling)
    phi_bits = Bitset(limit + 1)
    sigma_bits = Bitset(limit + 1)

    if arg_range is not None:
        a, b = arg_range
        if a < 1 or b < a:
            raise DomainError(f"bad argument range {arg_range}")
        for lo, hi in _segments(a, b):
            _mark_window(limit, lo, hi, phi_bits, sigma_bits, squarefree_domain)
        return _finish(limit, squarefree_domain, b, phi_bits, sigma_bits, True)

    bound = phi_domain_bound(limit)
    hard_stop = 2 * limit * limit + 1

    def run_block(seg_list, pb, sb):
        for lo, hi in seg_list:
            _mark_window(limit, lo, hi, pb, sb, squarefree_domain)

    first_phase = list(_segments(1, min(bound, hard_stop)))
    if workers > 1 and len(first_phase) > 1:
        lanes = [(first_phase[i::workers], Bitset(limit + 1), Bitset(limit + 1)) for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_block, segs, pb, sb) for segs, pb, sb in lanes]
            for f in futures:
                f.result()
        for _, pb, sb in lanes:
            phi_bits.or_with(pb)
            sigma_bits.or_with(sb)
    else:
        run_block(first_phase, phi_bits, sigma_bits)

    # verification phase: extend one segment at a time until a whole
    # segment contributes nothing, so the analytic bound is never trusted
    scan_stop = min(bound, hard_stop)
    while scan_stop < hard_stop:
        lo, hi = scan_stop, min(scan_stop + SEGMENT, hard_stop)
        marks = _mark_window(limit, lo, hi, phi_bits, sigma_bits, squarefree_domain)
        scan_stop = hi
        if marks == 0:
            break
    return _finish(limit, squarefree_domain, scan_stop, phi_bits, sigma_bits, keep_bitsets)


def _finish(limit, squarefree, scan_stop, phi_bits, sigma_bits, keep):
    phi_bits.data[0] &= np.uint8(0xFE)  # value 0 is never attained
    sigma_bits.data[0] &= np.uint8(0xFE)
    res = CensusResult(
        limit=limit,
        phi_value_count=phi_bits.count(),
        sigma_value_count=sigma_bits.count(),
        common_count=phi_bits.intersection_count(sigma_bits),
        squarefree_domain=squarefree,
        scan_stop=scan_stop,
        phi_bits=phi_bits if keep else None,
        sigma_bits=sigma_bits if keep else None,
    )
    return res


def merge_census(parts: list[CensusResult]) -> CensusResult:
    """Disjunction of partial censuses run over disjoint argument ranges."""
    if not parts:
        raise DomainError("nothing to merge")
    limit = parts[0].limit
    phi_bits = Bitset(limit + 1)
    sigma_bits = Bitset(limit + 1)
    for part in parts:
        if part.limit != limit:
            raise DomainError("cannot merge censuses with different limits")
        if part.phi_bits is None or part.sigma_bits is None:
            raise DomainError("partial census lost its bitsets")
        phi_bits.or_with(part.phi_bits)
        sigma_bits.or_with(part.sigma_bits)
    stop = max(p.scan_stop for p in parts)
    return _finish(limit, parts[0].squarefree_domain, stop, phi_bits, sigma_bits, True)


@dataclass
class Histogram:
    """A(n) and B(n) for every n <= limit, as dense arrays indexed by n."""

    limit: int
    A: np.ndarray
    B: np.ndarray

    def pair(self, n: int) -> tuple[int, int]:
        if not 1 <= n <= self.limit:
            raise DomainError(f"n={n} outside histogram range")
        return int(self.A[n]), int(self.B[n])


def popularity_histogram(limit: int, ceiling: int = DEFAULT_CENSUS_CEILING) -> Histogram:
    """Exact preimage counts A(n), B(n) for all n <= limit by full scan."""
    _check_limit(limit, ceiling)
    A = np.zeros(limit + 1, dtype=np.int64)
    B = np.zeros(limit + 1, dtype=np.int64)
    bound = phi_domain_bound(limit)
    hard_stop = 2 * limit * limit + 1
    scan_stop = 0
    lo = 1
    while lo < hard_stop:
        hi = min(lo + SEGMENT, hard_stop)
        phi, sig = phi_sigma_window(lo, hi)
        pv = phi[phi <= limit]
        if len(pv):
            counts = np.bincount(pv)
            A[: len(counts)] += counts
        if lo <= limit:
            sv = sig[sig <= limit]
            if len(sv):
                counts = np.bincount(sv)
                B[: len(counts)] += counts
        scan_stop = hi
        if hi >= bound and len(pv) == 0:
            break
        lo = hi
    A[0] = B[0] = 0
    return Histogram(limit, A, B)


def find_popular(limit: int, k: int, ceiling: int = DEFAULT_CENSUS_CEILING) -> list[int]:
    """All n <= limit with A(n) >= k and B(n) >= k, ascending."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    hist = popularity_histogram(limit, ceiling)
    hits = np.nonzero((hist.A >= k) & (hist.B >= k))[0]
    return [int(n) for n in hits if n >= 1]


def census_csv_rows(result: CensusResult):
    """Yield 'n,is_phi_value,is_sigma_value' rows (needs kept bitsets)."""
    if result.phi_bits is None or result.sigma_bits is None:
        raise DomainError("census was run without keep_bitsets")
    ns = np.arange(1, result.limit + 1, dtype=np.int64)
    pv = result.phi_bits.test(ns)
    sv = result.sigma_bits.test(ns)
    for i in range(len(ns)):
        yield f"{ns[i]},{int(pv[i])},{int(sv[i])}"


def histogram_csv_rows(hist: Histogram):
    for n in range(1, hist.limit + 1):
        yield f"{n},{int(hist.A[n])},{int(hist.B[n])}"
