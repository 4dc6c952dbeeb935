"""Extreme instances: duplication, disorder, and wide vs narrow search.

Row count m is allowed to dwarf 2^n: duplicates and shuffling change
nothing about which assignments satisfy, but they change solver effort
in opposite directions. A solver that draws candidates from the rows can
be made to grind past 2^n iterations, while the outer random walk is
capped at 2^{n-1} no matter what the rows look like.
"""

from ssat import (
    ExtremeSpec,
    SsatInstance,
    brute_force_solution_set,
    build_with_solutions,
    complement,
    extreme_instance,
    inner_witness_solve,
    outer_random_solve,
)

n, solution = 8, 77

lean = extreme_instance(ExtremeSpec(n, solution))
fat = extreme_instance(ExtremeSpec(n, solution, duplicates=2000, shuffle_seed=5))
print(f"Same solution set, very different sizes (n = {n}):")
print(f"  lean: m = {lean.m:>5}, solutions = {brute_force_solution_set(lean)}")
print(f"  fat:  m = {fat.m:>5}, solutions = {brute_force_solution_set(fat)}")

# adversarial layout: 2^n copies of one hopeless row before the payload
base = build_with_solutions(n, {solution}).rows.tolist()
hopeless = next(k for k in range(1 << n) if k not in (solution, complement(solution, n)))
stacked = SsatInstance(n, [hopeless] * (1 << n) + base)

inner = inner_witness_solve(stacked)
print(f"\nStacked instance: {1 << n} copies of row {hopeless:08b}, then the base rows.")
print(f"  inner-witness: verdict {inner.verdict}, iterations {inner.iterations} "
      f"(more than 2^n = {1 << n})")
print(f"  only {inner.pair_insertions} pair insertions happened; the copies were")
print("  wasted loop passes, which is the point")

worst = 0
for seed in range(30):
    rep = outer_random_solve(stacked, seed)
    assert rep.witness == solution
    worst = max(worst, rep.iterations)
print(f"  outer-random over 30 seeds: worst case {worst} iterations, "
      f"bound 2^(n-1) = {1 << (n - 1)}")

print("\nRow-fed search is wide open (duplicates inflate it without limit);")
print("the outer walk is narrow (half the space, guaranteed).")
