"""Building numbers that are simultaneously phi- and sigma-values.

A common value comes with a certificate: n together with a with phi(a) = n
and squarefree b with sigma(b) = n, everything kept in factored form so the
checks stay exact even when n has thousands of digits.
"""

import json
import tempfile

from phisigma import (
    FactoredInteger,
    build_common_value,
    certificate_from_json_dict,
    euler_phi,
    marker_family,
    rad_lift,
    subset_collision_search,
    verify_certificate,
    w_lift,
)

F = FactoredInteger.from_int

print("=== the basic lift: phi-preimages from divisibility ===\n")
print("whenever phi(rad(m)) | m, the number a = m * rad(m) / phi(rad(m))")
print("satisfies phi(a) = m:\n")
for m in (8, 12, 144, 1024):
    a = rad_lift(F(m))
    print(f"  m = {m:>5}: a = {int(a):>6}, phi(a) = {int(euler_phi(a))}")

print("\nmultipliers give further preimages of the same m:")
for w in (1, 3, 5, 15):
    a = w_lift(F(8), F(w), distinct_witnesses=True)
    print(f"  w = {w:>2}: a = {int(a):>2}")

print("\n=== certificates from smooth shifted primes ===\n")
for x, bound in ((10, 2), (50, 7), (1000, 13)):
    cert = build_common_value(x, bound)
    print(f"x = {x:>4}, smooth bound {bound:>2}: n = {cert.n} "
          f"({cert.n.digits()} digits, {len(cert.source_primes)} source primes)")

print("\nscaling up produces certificates far beyond machine integers:\n")
cert = build_common_value(10**5, 317, auto_repair=True)
print(f"x = 10^5, smooth bound 317: n has {cert.n.digits()} digits from "
      f"{len(cert.source_primes)} primes")
print(f"verified exactly in factored form: {cert.verified}")

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(cert.to_json_dict(), fh)
    path = fh.name
again = certificate_from_json_dict(json.load(open(path)))
print(f"round-tripped through JSON and re-verified: {verify_certificate(again)}")

print("\n=== twin-prime families with private markers ===\n")
fam = marker_family(1000, 0.35)
print(f"twin primes p <= 1000 whose p + 1 has a large 'marker' factor: "
      f"{len(fam['twin_pool'])}")
print(f"retained after making the markers pairwise private: {fam['primes']}")
print(f"every subset gives its own common value: a family of "
      f"{fam['family_size']} certificates")

print("\n=== many sigma-preimages of a single value ===\n")
res = subset_collision_search([2, 3, 5, 7, 11, 13, 17, 19, 23, 29], 3)
print(f"products (p+1)(q+1)(r+1) over that pool collide most at "
      f"{res['value']}:")
for rep in res["representations"]:
    print(f"  sigma({' * '.join(str(p) for p in rep)}) = {res['value']}")
