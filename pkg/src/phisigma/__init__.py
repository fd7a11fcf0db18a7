"""phisigma: totient and sum-of-divisors values, preimages, and certificates.

The package answers four families of questions exactly:

* arithmetic -- phi, sigma, rad, Carmichael lambda, valuations, all on a
  factored integer representation that scales to thousand-digit values;
* preimages -- complete enumeration of {x : phi(x) = n} and {x : sigma(x) = n};
* censuses -- which n <= limit are phi-values, sigma-values, or both, plus
  the full A(n)/B(n) popularity histogram;
* constructions -- verified certificates (n, a, b) with phi(a) = n = sigma(b),
  built from smooth shifted primes, twin-prime families, and subset-product
  collisions, with prime chains as the supporting combinatorics.
"""

from .census import (
    Bitset,
    CensusResult,
    Histogram,
    find_popular,
    merge_census,
    phi_sigma_window,
    popularity_histogram,
    value_census,
)
from .chains import (
    ChainSet,
    chain_growth_diagnostic,
    chain_membership_oracle,
    exceptional_set,
    forbidden_set,
    prime_chain_set,
    smooth_count,
    smooth_shifted_count,
    unrestricted_iterate_test,
    verify_chain_set,
)
from .construct import (
    CommonValueCertificate,
    build_common_value,
    certificate_from_json_dict,
    factorial_check,
    marker_family,
    rad_lift,
    subset_collision_search,
    valuation_diagnostic,
    verify_certificate,
    w_lift,
)
from .errors import (
    CapacityError,
    DomainError,
    InfeasibleError,
    NotLiftableError,
    PhisigmaError,
    VerificationError,
)
from .factored import (
    FactoredInteger,
    carmichael_lambda,
    divisor_list,
    euler_phi,
    factor_int,
    factored_div,
    factored_divides,
    factored_factorial,
    factored_mul,
    largest_prime_factor,
    rad,
    sigma,
    valuation,
)
from .preimage import PreimageSet, brute_inverse, inverse_phi, inverse_sigma
from .primes import SieveTable, build_sieve, is_prime, primes_up_to

__version__ = "0.1.0"
