"""Iteration-count statistics, desk scale.

Two scenarios with known expected behavior:

* no solution: the outer walk must exhaust all 2^{n-1} candidate pairs,
  so min = avg = max = 2^{n-1} exactly;
* unique solution: the solution pair sits at a uniformly random position
  in the walk, so iterations average about 2^{n-2} and never exceed
  2^{n-1}.

The same harness backs the `ssat bench` subcommand, which writes one CSV
row per run plus this summary.
"""

from ssat import run_bench, summarize

n, trials = 10, 300


def table(scenario, algorithms):
    records = run_bench(n, trials, scenario, algorithms, seed_base=1234)
    print(f"scenario = {scenario!r}, n = {n}, trials = {trials}")
    print(f"  {'algorithm':<14} {'min':>6} {'avg':>9} {'max':>6}")
    for name, lo, avg, hi in summarize(records):
        print(f"  {name:<14} {lo:>6} {avg:>9.1f} {hi:>6}")
    print()
    return records


table("none", ["outer-random", "inner-witness"])
records = table("unique", ["outer-random", "inner-witness", "binary-search", "quick"])

outer = [r.iterations for r in records if r.algorithm == "outer-random"]
print(f"unique-solution outer walk: mean {sum(outer) / len(outer):.1f} "
      f"(2^(n-2) = {1 << (n - 2)}), max {max(outer)} (cap 2^(n-1) = {1 << (n - 1)})")
print("binary search stayed within n + 2 comparisons; quick answered every")
print("trial in zero iterations because m = 2^n - 1 < 2^n.")
