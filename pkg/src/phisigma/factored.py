"""Exact arithmetic on integers kept in factored form.

A FactoredInteger is a sorted tuple of (prime, exponent) pairs; the empty
tuple is 1.  Constructed values in this package routinely have thousands
of decimal digits, so phi/sigma/rad/lambda are all computed prime-power by
prime-power and re-factorized exactly -- the expanded integer is only ever
produced on demand.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import log10

from .errors import CapacityError, DomainError
from .primes import is_prime, primes_up_to

# Trial division bound used when no sieve table is supplied.  Anything that
# survives it must be prime (or a prime power) or we refuse: the package
# deliberately has no general-purpose factorization engine.
_TRIAL_BOUND = 1_000_000


@lru_cache(maxsize=1)
def _trial_primes():
    return [int(p) for p in primes_up_to(_TRIAL_BOUND)]


def factor_int(n: int, table=None) -> tuple[tuple[int, int], ...]:
    """Factor a positive integer into sorted (prime, exponent) pairs.

    Uses the sieve table when given and applicable, otherwise trial division
    up to 10^6 followed by a deterministic primality / perfect-power check on
    the cofactor.  Raises CapacityError for cofactors it cannot certify.
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    if table is not None and n <= table.limit:
        return tuple(table.factorize(n))
    out = []
    m = n
    for p in _trial_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        if m < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
            # below the square of the trial bound any survivor is prime
            out.append((m, 1))
        else:
            for k in range(2, m.bit_length()):
                r = round(m ** (1.0 / k))
                for cand in (r - 1, r, r + 1):
                    if cand >= 2 and cand**k == m and is_prime(cand):
                        out.append((cand, k))
                        m = 1
                        break
                if m == 1:
                    break
            else:
                raise CapacityError(f"cofactor {m} too hard to factor")
    return tuple(sorted(out))


@dataclass(frozen=True)
class FactoredInteger:
    """An exact positive integer as a sorted ((prime, exponent), ...) tuple."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise DomainError(f"primes not strictly increasing at {p}")
            if e < 1:
                raise DomainError(f"exponent {e} < 1 for prime {p}")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            last = p

    @classmethod
    def from_int(cls, n: int, table=None) -> "FactoredInteger":
        return cls(factor_int(n, table))

    def value(self) -> int:
        """Expand to an ordinary integer (may be enormous)."""
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v

    def digits(self) -> int:
        """Decimal digit count of the expanded value, without expanding.

        Large expansions are sized from log10 sums: CPython caps str() of
        huge integers, and the count is only used for reporting.
        """
        if not self.factors:
            return 1
        size = sum(e * log10(p) for p, e in self.factors)
        if size < 15:
            return len(str(self.value()))
        return int(size) + 1

    def is_one(self) -> bool:
        return not self.factors

    def __int__(self) -> int:
        return self.value()

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        return factored_mul(self, other)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


ONE = FactoredInteger()


def _from_exponents(exps: dict[int, int]) -> FactoredInteger:
    return FactoredInteger(tuple(sorted((p, e) for p, e in exps.items() if e)))


def _merge_into(acc: dict[int, int], factors, mult=1):
    for p, e in factors:
        acc[p] = acc.get(p, 0) + e * mult


def factored_mul(x: FactoredInteger, y: FactoredInteger) -> FactoredInteger:
    acc: dict[int, int] = {}
    _merge_into(acc, x.factors)
    _merge_into(acc, y.factors)
    return _from_exponents(acc)


def factored_divides(x: FactoredInteger, y: FactoredInteger) -> bool:
    """True when x divides y."""
    have = dict(y.factors)
    return all(have.get(p, 0) >= e for p, e in x.factors)


def factored_div(x: FactoredInteger, y: FactoredInteger) -> FactoredInteger:
    """x / y, requiring exact divisibility."""
    if not factored_divides(y, x):
        raise DomainError(f"{y} does not divide {x}")
    acc = dict(x.factors)
    _merge_into(acc, y.factors, mult=-1)
    return _from_exponents(acc)


def euler_phi(n: FactoredInteger, table=None) -> FactoredInteger:
    """phi(n) in factored form: product of p^(e-1) * (p-1) over prime powers."""
    acc: dict[int, int] = {}
    for p, e in n.factors:
        if e > 1:
            acc[p] = acc.get(p, 0) + e - 1
        if p > 2:
            _merge_into(acc, factor_int(p - 1, table))
    return _from_exponents(acc)


def sigma(n: FactoredInteger, table=None) -> FactoredInteger:
    """sigma(n) in factored form: product of (p^(e+1)-1)/(p-1) over prime powers."""
    acc: dict[int, int] = {}
    for p, e in n.factors:
        s = (p ** (e + 1) - 1) // (p - 1)
        _merge_into(acc, factor_int(s, table))
    return _from_exponents(acc)


def rad(n: FactoredInteger) -> FactoredInteger:
    """Radical: product of the distinct primes of n."""
    return FactoredInteger(tuple((p, 1) for p, _ in n.factors))


def largest_prime_factor(n: FactoredInteger):
    """P(n): the largest prime factor, or None for n = 1 (the unit marker)."""
    if not n.factors:
        return None
    return n.factors[-1][0]


def valuation(q: int, n: FactoredInteger) -> int:
    """v_q(n): exponent of the prime q in n (0 when absent)."""
    if not is_prime(q):
        raise DomainError(f"valuation base {q} must be prime")
    for p, e in n.factors:
        if p == q:
            return e
        if p > q:
            break
    return 0


def carmichael_lambda(n: FactoredInteger, table=None) -> FactoredInteger:
    """Carmichael function, the exponent of the unit group mod n.

    lambda(2)=1, lambda(4)=2, lambda(2^e)=2^(e-2) for e>=3; odd prime powers
    use phi; components combine by least common multiple.
    """
    lcm_exp: dict[int, int] = {}

    def fold(factors):
        for p, e in factors:
            if e > lcm_exp.get(p, 0):
                lcm_exp[p] = e

    for p, e in n.factors:
        if p == 2:
            if e == 2:
                fold(((2, 1),))
            elif e >= 3:
                fold(((2, e - 2),))
            # e == 1 contributes lambda = 1: nothing to fold
        else:
            comp: dict[int, int] = {}
            if e > 1:
                comp[p] = e - 1
            _merge_into(comp, factor_int(p - 1, table))
            fold(comp.items())
    return _from_exponents(lcm_exp)


def factored_factorial(u: int) -> FactoredInteger:
    """u! in factored form via Legendre's formula."""
    if u < 0:
        raise DomainError("factorial of a negative number")
    acc = {}
    for p in (int(x) for x in primes_up_to(u)):
        e = 0
        pk = p
        while pk <= u:
            e += u // pk
            pk *= p
        acc[p] = e
    return _from_exponents(acc)


def divisor_list(n: FactoredInteger) -> list[int]:
    """All positive divisors of n, ascending (n must be modest in size)."""
    count = 1
    for _, e in n.factors:
        count *= e + 1
        if count > 2_000_000:
            raise CapacityError("too many divisors to enumerate")
    divs = [1]
    for p, e in n.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def value_fits_64(n: FactoredInteger) -> bool:
    v = 1
    for p, e in n.factors:
        v *= p**e
        if v >= 1 << 63:
            return False
    return True
