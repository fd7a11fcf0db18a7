"""How many distinct values do phi and sigma take below a limit?

Walks the census machinery from toy sizes up to 10^6, then looks at the
overlap between the two value sets and at the values both functions hit
unusually often.
"""

import time

from phisigma import find_popular, popularity_histogram, value_census

print("=== distinct values of phi and sigma up to a limit ===\n")

for limit in (10, 100, 1000, 10**4, 10**5, 10**6):
    started = time.perf_counter()
    s = value_census(limit).summary()
    elapsed = time.perf_counter() - started
    print(
        f"limit 10^{len(str(limit)) - 1}: "
        f"phi-values {s['phi_values']:>7}  sigma-values {s['sigma_values']:>7}  "
        f"common {s['common']:>6}  ({elapsed:.2f}s)"
    )

print(
    "\nBoth value sets thin out (density ~ x/log x for phi-values), and their\n"
    "intersection is thinner still -- yet it clearly keeps growing.\n"
)

print("=== restricting the arguments to squarefree n ===\n")
for limit in (1000, 10**4):
    s = value_census(limit, squarefree_domain=True).summary()
    print(
        f"limit {limit}: phi-values {s['phi_values']}, "
        f"sigma-values {s['sigma_values']}, common {s['common']}"
    )

print("\n=== values that are popular on both sides ===\n")
limit = 10**5
hist = popularity_histogram(limit)
for k in (8, 16, 32):
    values = find_popular(limit, k)
    head = " ".join(str(v) for v in values[:6])
    print(f"A(n) >= {k} and B(n) >= {k}: {len(values):>5} values up to {limit}  "
          f"(first: {head})")

n = find_popular(limit, 32)[0]
a, b = hist.pair(n)
print(f"\nthe smallest doubly-popular value, n = {n}, has A(n) = {a} "
      f"phi-preimages\nand B(n) = {b} sigma-preimages")
