"""Clauses as n-bit codes.

A clause that mentions every variable exactly once is just a row of
polarities, so it compresses to an integer: bit i is 1 when x_i appears
positively. This script walks the translation in both directions and
shows why evaluation collapses to a single membership test.
"""

from ssat import (
    SsatInstance,
    complement,
    evaluate,
    evaluate_by_matching,
    is_blocking_pair,
    translate_row,
    untranslate,
)


def lit(v):
    return f"x{abs(v) - 1}" if v > 0 else f"~x{abs(v) - 1}"


def show(clause, n):
    code = translate_row(clause, n)
    print(f"  ({' | '.join(lit(v) for v in clause)})  ->  {code:0{n}b}  (= {code})")
    return code


print("Translating fixed-width clauses to row codes (n = 3):")
show([-3, 2, 1], 3)
show([3, 2, 1], 3)
show([-3, -2, -1], 3)

print("\nAnd back again:")
for code in (0b011, 0b000, 0b110):
    clause = untranslate(code, 3)
    print(f"  {code:03b}  ->  ({' | '.join(lit(v) for v in clause)})")

print("\nA code and its complement block each other:")
for code in (0b000, 0b011):
    comp = complement(code, 3)
    print(f"  {code:03b} vs {comp:03b}: blocking pair = {is_blocking_pair(code, comp, 3)}")

print("\nEvaluation is one membership test. Take rows {000, 001, 110}:")
inst = SsatInstance(3, [0b000, 0b001, 0b110])
for x in range(8):
    fast = evaluate(inst, x)
    slow = evaluate_by_matching(inst, x)
    assert fast == slow
    why = f"complement {complement(x, 3):03b} is a row" if fast == 0 else "no row blocks it"
    print(f"  x = {x:03b}: value {fast}  ({why})")

print("\nThe slow path scanned every digit of every row; the fast path")
print("looked up one complement. Same answers on all eight assignments.")
