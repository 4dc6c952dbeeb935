"""Why random guessing does not rescue the search.

After f failed candidates, the chance that one more uniform draw both
picks a specific surviving assignment and that assignment is a solution
is 1/((2^n - 2f) * 2^n) for the inner scheme (each failure retires a
complement pair) and 1/((2^n - f) * 2^n) for the outer scheme. Both
start at 2^{-2n} and only crawl upward as failures accumulate; and a
polynomial-size candidate pool covers a vanishing slice of the space.
"""

from ssat import prob_poly_subset, prob_ss_inner, prob_ss_outer

n = 10
size = 1 << n
print(f"n = {n}: both schemes start at 2^-2n = {prob_ss_inner(n, 0):.3e}")
print(f"\n  {'f':>5} {'inner':>12} {'outer':>12}")
for f in (0, 1, 32, 128, 255, 384, 448, 500, 511):
    print(f"  {f:>5} {prob_ss_inner(n, f):>12.3e} {prob_ss_outer(n, f):>12.3e}")

print(f"\nEven at the last inner step (f = {size // 2 - 1}) the per-draw chance")
print(f"is only {prob_ss_inner(n, size // 2 - 1):.3e}: the denominators keep the")
print("odds pinned near zero until almost nothing is left to try.")

print("\nPolynomial pools n^k versus the 2^n space:")
print(f"  {'n':>4} {'k':>3} {'share of space':>15} {'hit chance':>13}")
for nn in (10, 20, 40):
    for k in (1, 3):
        in_c, s_c = prob_poly_subset(nn, k)
        print(f"  {nn:>4} {k:>3} {in_c:>15.3e} {s_c:>13.3e}")
print("\nDoubling n squares the denominator while the pool only grows")
print("polynomially, so both columns collapse toward zero.")
