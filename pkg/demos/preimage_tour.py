"""Enumerating the solutions of phi(x) = n and sigma(x) = n.

The counting functions A(n) = #phi^{-1}(n) and B(n) = #sigma^{-1}(n) are
wildly uneven: most n have none, some have thousands.  This demo inverts a
few targets exactly, then asks the classic question about factorials.
"""

from phisigma import factorial_check, inverse_phi, inverse_sigma

print("=== inverting phi ===\n")
for n in (1, 2, 4, 24, 48, 3, 14):
    s = inverse_phi(n)
    shown = " ".join(str(w) for w in s.witnesses[:12])
    tail = " ..." if s.count > 12 else ""
    print(f"phi(x) = {n:>3}: A = {s.count:>3}  x in {{{shown}{tail}}}")

print("\nodd targets above 1 (like 3) are impossible: phi is even past x = 2;")
print("and some even targets (like 14) simply never occur.\n")

print("=== inverting sigma ===\n")
for n in (1, 24, 42, 100, 120, 2):
    s = inverse_sigma(n)
    shown = " ".join(str(w) for w in s.witnesses)
    print(f"sigma(x) = {n:>3}: B = {s.count:>2}  x in {{{shown}}}")

print("\n=== the same target on both sides ===\n")
n = 24
a = inverse_phi(n)
b = inverse_sigma(n)
print(f"n = {n} is a common value: phi hits it {a.count} times, "
      f"sigma {b.count} times")
print(f"  phi witnesses:   {a.witnesses}")
print(f"  sigma witnesses: {b.witnesses}")

print("\n=== factorials: is k! always a value of both functions? ===\n")
print(" k        k!   A(k!)   B(k!)   first phi x    first sigma x")
for k in range(1, 13):
    rec = factorial_check(k)
    sw = rec["sigma_witness"] if rec["sigma_witness"] is not None else "-"
    print(f"{rec['k']:>2} {rec['factorial']:>10} {rec['A_count']:>7} "
          f"{rec['B_count']:>7} {rec['phi_witness']:>13} {sw:>14}")

print("\nk = 2 is the lone holdout: nothing has sigma(x) = 2, while every")
print("other k! up to 12 is hit by both functions (and the counts explode).")
