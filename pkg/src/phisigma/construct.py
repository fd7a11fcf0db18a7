"""Certificate-producing constructions of common totient/sigma values.

Everything here manufactures triples (n, a, b) with phi(a) = n = sigma(b),
kept in factored form because the interesting n run to thousands of digits.
Every certificate is re-verified by exact factored arithmetic before it is
returned; nothing is trusted to be correct by construction.
"""

import itertools
import random
from dataclasses import dataclass, field

from .chains import forbidden_set
from .errors import (
    CapacityError,
    DomainError,
    InfeasibleError,
    NotLiftableError,
    VerificationError,
)
from .factored import (
    FactoredInteger,
    euler_phi,
    factor_int,
    factored_div,
    factored_divides,
    factored_factorial,
    factored_mul,
    rad,
    sigma,
    valuation,
)
from .preimage import inverse_phi, inverse_sigma
from .primes import build_sieve, is_prime, largest_factor_table, primes_up_to


@dataclass
class CommonValueCertificate:
    """A verified common value: phi(a) = n = sigma(b), all in factored form."""

    n: FactoredInteger
    a: FactoredInteger
    b: FactoredInteger
    source_primes: tuple[int, ...] = ()
    trace: dict = field(default_factory=dict)
    verified: bool = False

    def to_json_dict(self) -> dict:
        return {
            "n": [[p, e] for p, e in self.n.factors],
            "a": [[p, e] for p, e in self.a.factors],
            "b": [[p, e] for p, e in self.b.factors],
            "source_primes": list(self.source_primes),
            "trace": self.trace,
            "verified": self.verified,
        }


def certificate_from_json_dict(d: dict) -> CommonValueCertificate:
    def fact(key):
        return FactoredInteger(tuple((int(p), int(e)) for p, e in d[key]))

    return CommonValueCertificate(
        n=fact("n"),
        a=fact("a"),
        b=fact("b"),
        source_primes=tuple(int(p) for p in d.get("source_primes", [])),
        trace=dict(d.get("trace", {})),
        verified=bool(d.get("verified", False)),
    )


def verify_certificate(cert: CommonValueCertificate) -> bool:
    """Exact re-check of a certificate; raises VerificationError on defect."""
    if any(e != 1 for _, e in cert.b.factors):
        raise VerificationError("sigma-preimage b is not squarefree")
    phi_a = euler_phi(cert.a)
    if phi_a != cert.n:
        raise VerificationError(f"phi(a) = {phi_a} differs from n = {cert.n}")
    sigma_b = sigma(cert.b)
    if sigma_b != cert.n:
        raise VerificationError(f"sigma(b) = {sigma_b} differs from n = {cert.n}")
    return True


def _violations(target: FactoredInteger, divisor: FactoredInteger) -> dict:
    """Primes where the would-be divisor out-powers the target."""
    have = dict(target.factors)
    bad = {}
    for q, e in divisor.factors:
        if e > have.get(q, 0):
            bad[q] = (e, have.get(q, 0))
    return bad


def rad_lift(m: FactoredInteger) -> FactoredInteger:
    """The lift m -> m * rad(m) / phi(rad(m)), a phi-preimage of m.

    Requires phi(rad(m)) | m; the returned a satisfies phi(a) = m, checked
    exactly before returning.
    """
    r = rad(m)
    pr = euler_phi(r)
    bad = _violations(m, pr)
    if bad:
        qs = ", ".join(str(q) for q in sorted(bad))
        raise NotLiftableError(f"phi(rad(m)) does not divide m at prime(s) {qs}", bad)
    a = factored_div(factored_mul(m, r), pr)
    if euler_phi(a) != m:
        raise VerificationError("rad lift failed its own re-check")
    return a


def w_lift(
    n: FactoredInteger, w: FactoredInteger, distinct_witnesses: bool = False
) -> FactoredInteger:
    """Multiplier form of the lift: w * rad(n) * n / phi(w * rad(n)).

    Requires phi(w * rad(n)) | n.  With distinct_witnesses the multiplier
    must be coprime to n, which keeps lifts of different w distinct.
    """
    if distinct_witnesses:
        shared = {p for p, _ in w.factors} & {p for p, _ in n.factors}
        if shared:
            raise DomainError(f"w shares prime(s) {sorted(shared)} with n")
    t = factored_mul(w, rad(n))
    pt = euler_phi(t)
    bad = _violations(n, pt)
    if bad:
        qs = ", ".join(str(q) for q in sorted(bad))
        raise NotLiftableError(f"phi(w * rad(n)) does not divide n at prime(s) {qs}", bad)
    a = factored_mul(t, factored_div(n, pt))
    if euler_phi(a) != n:
        raise VerificationError("w lift failed its own re-check")
    return a


def _smooth_shifted_primes(x: int, smooth_bound: int, forbidden: tuple[int, ...]):
    """Primes p <= x with P(p+1) <= smooth_bound and no forbidden t | p+1."""
    lpf = largest_factor_table(x + 1)
    keep = []
    for p in (int(v) for v in primes_up_to(x)):
        m = p + 1
        if lpf[m] > smooth_bound:
            continue
        if any(m % t == 0 for t in forbidden):
            continue
        keep.append(p)
    return keep


def _product_of_successors(primes, table) -> FactoredInteger:
    acc: dict[int, int] = {}
    for p in primes:
        for r, e in factor_int(p + 1, table):
            acc[r] = acc.get(r, 0) + e
    return FactoredInteger(tuple(sorted(acc.items())))


def build_common_value(
    x: int,
    smooth_bound: int,
    forbidden_roots=(),
    drop_index: int | None = None,
    auto_repair: bool = False,
) -> CommonValueCertificate:
    """The smooth-shifted-prime construction of a verified common value.

    Collect S = {p <= x : p + 1 is smooth_bound-smooth, avoiding chains of
    the forbidden roots}, optionally drop the drop_index-th largest prime,
    and set n = prod(p+1).  When phi(rad(n)) | n the certificate is
    (n, rad-lift of n, prod p).  Otherwise NotLiftableError carries the
    violating primes, or auto_repair greedily removes the smallest prime
    whose p + 1 feeds a violating prime until the lift goes through.
    """
    if smooth_bound < 2:
        raise DomainError(f"smooth bound must be >= 2, got {smooth_bound}")
    if x < 2:
        raise DomainError(f"x must be >= 2, got {x}")
    forbidden = forbidden_set(smooth_bound, tuple(forbidden_roots))
    source = _smooth_shifted_primes(x, smooth_bound, forbidden)
    if not source:
        raise InfeasibleError("no qualifying primes: S is empty")
    if drop_index is not None:
        if not 0 <= drop_index < len(source):
            raise DomainError(
                f"drop index {drop_index} out of range for #S = {len(source)}"
            )
        # drop_index counts from the largest prime downwards
        del source[len(source) - 1 - drop_index]
        if not source:
            raise InfeasibleError("S became empty after the drop")
    table = build_sieve(x + 2)
    removed = []
    while True:
        n = _product_of_successors(source, table)
        phi_rad = euler_phi(rad(n), table)
        bad = _violations(n, phi_rad)
        if not bad:
            break
        if not auto_repair:
            qs = ", ".join(str(q) for q in sorted(bad))
            raise NotLiftableError(
                f"phi(rad(n)) does not divide n at prime(s) {qs}", bad
            )
        culprits = {
            r
            for r, _ in rad(n).factors
            if any(valuation(q, FactoredInteger.from_int(r - 1, table)) > 0 for q in bad)
            and r > 2
        }
        candidates = [
            p for p in source if any((p + 1) % r == 0 for r in culprits)
        ]
        if not candidates:
            raise InfeasibleError("auto-repair found no prime to remove")
        victim = min(candidates)
        source.remove(victim)
        removed.append(victim)
        if not source:
            raise InfeasibleError("auto-repair exhausted S")
    a = rad_lift(n)
    b = FactoredInteger(tuple((p, 1) for p in source))
    cert = CommonValueCertificate(
        n=n,
        a=a,
        b=b,
        source_primes=tuple(source),
        trace={
            "construction": "smooth-shifted-primes",
            "x": x,
            "smooth_bound": smooth_bound,
            "forbidden_roots": list(forbidden_roots),
            "drop_index": drop_index,
            "auto_repair": auto_repair,
            "removed_by_repair": removed,
        },
    )
    cert.verified = verify_certificate(cert)
    return cert


def valuation_diagnostic(source_primes, smooth_bound: int) -> list[dict]:
    """Per-prime comparison of the textbook valuation bounds.

    For n = prod(p+1) over the given primes: v_q(phi(rad n)) is bounded by
    v_q(u!) with u = smooth_bound, and v_q(n) is at least the number of
    p with q | p + 1.  Both bounds are reported next to the exact values.
    """
    source_primes = list(source_primes)
    table = build_sieve(max(smooth_bound, max(source_primes, default=2)) + 2)
    n = _product_of_successors(source_primes, table)
    phi_rad = euler_phi(rad(n), table)
    u_fact = factored_factorial(smooth_bound)
    rows = []
    for q, _ in n.factors:
        lhs = valuation(q, phi_rad)
        vu = valuation(q, u_fact)
        rhs = valuation(q, n)
        count = sum(1 for p in source_primes if (p + 1) % q == 0)
        rows.append(
            {
                "q": q,
                "phi_rad_valuation": lhs,
                "factorial_valuation": vu,
                "ratio_bound": smooth_bound / (q - 1),
                "n_valuation": rhs,
                "shifted_divisible_count": count,
                "upper_ok": lhs <= vu,
                "lower_ok": rhs >= count,
            }
        )
    return rows


def _twin_cert(subset, z: int, theta: float) -> CommonValueCertificate:
    acc: dict[int, int] = {}
    for p in subset:
        for r, e in factor_int(p + 1):
            acc[r] = acc.get(r, 0) + e
    n = FactoredInteger(tuple(sorted(acc.items())))
    b = FactoredInteger(tuple((p, 1) for p in subset))
    a = FactoredInteger(tuple((p + 2, 1) for p in subset))
    cert = CommonValueCertificate(
        n=n,
        a=a,
        b=b,
        source_primes=tuple(subset),
        trace={"construction": "twin-marker", "z": z, "theta": theta,
               "subset": list(subset)},
    )
    cert.verified = verify_certificate(cert)
    return cert


def marker_family(z: int, theta: float, samples: int = 4, seed: int = 0) -> dict:
    """Twin primes whose p+1 carries a private marker prime.

    Pool: twin primes p <= z (p and p+2 prime) with P(p+1) > z**theta.
    Retention is greedy from the largest p down, keeping p only when its
    marker P(p+1) divides no retained p'+1 and vice versa; every subset of
    the retained set then yields a distinct common value prod(p+1).
    """
    if z < 7:
        raise DomainError(f"z must be >= 7, got {z}")
    if not 0 < theta < 1:
        raise DomainError(f"theta must be in (0, 1), got {theta}")
    twins = [int(p) for p in primes_up_to(z) if is_prime(int(p) + 2)]
    if not twins:
        raise InfeasibleError(f"no twin primes up to {z}")
    cutoff = z**theta
    marker = {p: factor_int(p + 1)[-1][0] for p in twins}
    pool = [p for p in twins if marker[p] > cutoff]
    retained: list[int] = []
    for p in sorted(pool, reverse=True):
        ok = all(
            (r + 1) % marker[p] != 0 and (p + 1) % marker[r] != 0 for r in retained
        )
        if ok:
            retained.append(p)
    retained.sort()
    family_size = 1 << len(retained)
    if family_size <= samples:
        masks = list(range(family_size))
    else:
        rng = random.Random(seed)
        masks = sorted(rng.sample(range(family_size), samples))
    certs = []
    for mask in masks:
        subset = tuple(p for i, p in enumerate(retained) if mask >> i & 1)
        certs.append(_twin_cert(subset, z, theta))
    return {
        "twin_pool": pool,
        "markers": {p: marker[p] for p in pool},
        "primes": tuple(retained),
        "family_size": family_size,
        "sample_certificates": certs,
    }


def subset_collision_search(prime_pool, subset_size: int, twin_only: bool = False) -> dict:
    """Find the value prod(p+1) hit by the most subsets of the given size.

    Meet-in-the-middle over two halves of the pool; ties break toward the
    smaller value.  Every representation is verified as a sigma-preimage
    (and, with twin_only, as a phi-preimage through p + 2).
    """
    raw = [int(p) for p in prime_pool]
    pool = sorted(set(raw))
    if len(pool) != len(raw):
        raise DomainError("prime pool has duplicates")
    for p in pool:
        if not is_prime(p):
            raise DomainError(f"pool entry {p} is not prime")
        if twin_only and not is_prime(p + 2):
            raise DomainError(f"pool entry {p} has composite p + 2")
    if subset_size < 1:
        raise DomainError("subset size must be >= 1")
    if len(pool) < subset_size:
        raise DomainError(
            f"pool of {len(pool)} primes cannot give subsets of size {subset_size}"
        )
    half = len(pool) // 2
    left, right = pool[:half], pool[half:]

    def size_products(primes, k):
        out = []
        for combo in itertools.combinations(primes, k):
            prod = 1
            for p in combo:
                prod *= p + 1
            out.append((prod, combo))
        return out

    tally: dict[int, list] = {}
    for i in range(subset_size + 1):
        if i > len(left) or subset_size - i > len(right):
            continue
        for pa, ca in size_products(left, i):
            for pb, cb in size_products(right, subset_size - i):
                tally.setdefault(pa * pb, []).append(ca + cb)
    best = min(tally.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    value, reps = best
    acc: dict[int, int] = {}
    for p in reps[0]:
        for r, e in factor_int(p + 1):
            acc[r] = acc.get(r, 0) + e
    n = FactoredInteger(tuple(sorted(acc.items())))
    for rep in reps:
        b = FactoredInteger(tuple((p, 1) for p in rep))
        if sigma(b) != n:
            raise VerificationError(f"representation {rep} fails sigma check")
        if twin_only:
            a = FactoredInteger(tuple((p + 2, 1) for p in rep))
            if euler_phi(a) != n:
                raise VerificationError(f"representation {rep} fails phi check")
    return {"n": n, "value": value, "representations": reps}


def factorial_check(k: int, max_k: int = 12) -> dict:
    """Does k! have a phi-preimage and a sigma-preimage?  Full enumeration."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k > max_k:
        raise CapacityError(f"k = {k} beyond the default factorial ceiling {max_k}")
    n = 1
    for i in range(2, k + 1):
        n *= i
    phi_set = inverse_phi(n)
    sigma_set = inverse_sigma(n)
    return {
        "k": k,
        "factorial": n,
        "A_positive": phi_set.count > 0,
        "B_positive": sigma_set.count > 0,
        "A_count": phi_set.count,
        "B_count": sigma_set.count,
        "phi_witness": phi_set.witnesses[0] if phi_set.count else None,
        "sigma_witness": sigma_set.witnesses[0] if sigma_set.count else None,
    }
