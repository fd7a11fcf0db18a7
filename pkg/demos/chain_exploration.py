"""Prime chains: reachability through the congruence s = 1 (mod t).

Starting from a prime q, repeatedly step to larger primes s with s = 1
modulo the current prime, never leaving [2, y].  The primes reachable this
way form the chain set T(y, q); these sets control which primes can appear
in iterated-totient arguments, so their size and their complements both
matter downstream.
"""

from phisigma import (
    chain_growth_diagnostic,
    exceptional_set,
    forbidden_set,
    prime_chain_set,
    smooth_count,
    smooth_shifted_count,
)

print("=== chain sets from small roots ===\n")
for q in (3, 5, 7):
    cs = prime_chain_set(100, q)
    print(f"T(100, {q}) = {' '.join(str(t) for t in cs.members)}")

cs = prime_chain_set(31, 3)
print("\nwitness chains for T(31, 3):")
for t in cs.members:
    print(f"  {t:>2}: {' -> '.join(str(s) for s in cs.witness[t])}")

print("\n=== how fast do chain sets grow? ===\n")
for q in (3, 101):
    for y in (10**3, 10**4):
        d = chain_growth_diagnostic(y, q, 0.5)
        print(f"#T({y}, {q}) = {d['count']:>4}   count / (y/q)^1.5 = {d['ratio']:.4f}")

print("\nsmall roots soak up a constant fraction of all primes; large roots")
print("reach only a thin set, far below the (y/q)^(1+eps) shape.\n")

print("=== forbidden sets: unions of chains ===\n")
ys = 31
roots = [3, 5]
print(f"T({ys}, 3) u T({ys}, 5) = {forbidden_set(ys, roots)}")

print("\n=== smooth shifted primes ===\n")
print("S_q counts primes p <= x with p + a smooth and q | p + a:\n")
for q in (2, 3, 5):
    plus = smooth_shifted_count(100, 10, q, 1)
    minus = smooth_shifted_count(100, 10, q, -1)
    print(f"  q = {q}: shift +1 -> {plus:>2}   shift -1 -> {minus:>2}")

print(f"\nfor scale: {smooth_count(1000, 5)} of the first 1000 integers are "
      f"5-smooth\n")

print("=== exceptional moduli ===\n")
print("primes q whose S_q count drops at or below gamma * x / (q ln x):\n")
for gamma in (0.1, 1.0, 10.0):
    qs = exceptional_set(10**4, 20, 100, gamma)
    label = " ".join(str(q) for q in qs) if qs else "(none)"
    print(f"  gamma = {gamma:>4}: {label}")
print("\nat sensible thresholds the exceptional set is empty -- every small")
print("modulus keeps a healthy supply of smooth shifted primes.")
