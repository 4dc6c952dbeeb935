"""Search procedures over fixed-width instances.

Two families:

* inner: candidates come from the instance's own rows. Each failed
  candidate k is parked in a pair table together with complement(k), so
  one failure retires two assignments at once; a full table proves
  unsatisfiability, and a leftover gap after the rows run out names a
  satisfying assignment directly.

* outer: candidates come from a seeded random permutation of the lower
  half [0, 2^{n-1} - 1] of the assignment space; each step tests the
  candidate and its complement, so the whole space is covered in at most
  2^{n-1} steps.

Plus two O(1)/O(k) existence shortcuts that answer from row counts alone,
and a binary search that locates the unique missing code of a sorted
(2^n - 1)-row instance.

Every verdict carries checkable evidence: SAT witnesses are re-verified
with evaluate before the report is emitted, UNSAT reports name the
exhaustion argument that proves them. Counters are honest tallies, never
estimates: iterations counts main-loop passes (for the binary search,
row-vs-index comparisons) and evaluations counts evaluate calls.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .board import PairTable
from .errors import PreconditionError, WitnessVerificationError
from .model import SsatInstance, complement, evaluate

SAT = "SAT"
SAT_EXISTS = "SAT_EXISTS"
UNSAT = "UNSAT"


@dataclass(frozen=True)
class SolverReport:
    """Outcome of one solver run.

    verdict is SAT (witness present and verified), SAT_EXISTS (existence
    argument only, no witness), or UNSAT. evidence is a short tag naming
    what backs the verdict. pair_insertions is filled by the inner
    witness solver only.
    """

    algorithm: str
    verdict: str
    iterations: int
    evaluations: int
    witness: int | None = None
    evidence: str | None = None
    seed: int | None = None
    pair_insertions: int | None = None


def quick_existence(n: int, m: int) -> SolverReport | None:
    """Constant-time existence test: m rows can block at most m
    assignments, so m < 2^n leaves one free. None when undetermined."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if m < (1 << n):
        return SolverReport(
            algorithm="quick", verdict=SAT_EXISTS, iterations=0, evaluations=0,
            evidence="row-count",
        )
    return None


def counted_existence(n: int, m: int, k1: int, k2: int) -> SolverReport | None:
    """Existence after k1 + k2 failed candidate tests, of which k2 hit
    duplicate rows: only m - k2 distinct rows exist, so m - k2 < 2^n
    already proves a free assignment. None when undetermined.

    The k1 + k2 tests happened in the caller's loop; iterations reports
    them, evaluations stays 0 because this test itself evaluates nothing.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if k1 < 0 or k2 < 0:
        raise ValueError("failure counts must be nonnegative")
    if m - k2 < (1 << n):
        return SolverReport(
            algorithm="counted", verdict=SAT_EXISTS, iterations=k1 + k2,
            evaluations=0, evidence="deduplicated-row-count",
        )
    return None


def inner_board_solve(
    inst: SsatInstance, dump_board: str | os.PathLike | None = None,
) -> SolverReport:
    """Existence by table filling: stream the rows once, park each in the
    table, and answer UNSAT the moment all 2^n cells fill. Rows that run
    out first cannot cover the space, so some assignment is free.

    Never evaluates the instance; reports SAT_EXISTS without a witness.
    """
    table = PairTable(inst.n)
    iterations = 0
    verdict, evidence = SAT_EXISTS, "uncovered-code"
    for k in inst.rows.tolist():
        iterations += 1
        table.insert(k)
        if table.is_full:
            verdict, evidence = UNSAT, "blocked-board"
            break
    if dump_board is not None:
        table.dump(dump_board)
    return SolverReport(
        algorithm="inner-board", verdict=verdict, iterations=iterations,
        evaluations=0, evidence=evidence,
    )


def inner_witness_solve(
    inst: SsatInstance, dump_board: str | os.PathLike | None = None,
) -> SolverReport:
    """Witness search from the instance's own rows.

    Each streamed row k is tried as an assignment. A hit is returned at
    once; a miss means complement(k) is a row, so k and complement(k) are
    both hopeless and are parked as a pair, retiring two candidates per
    failure. A full table is a proof of UNSAT. If the rows run out first,
    any empty cell's code is unblocked, and that gap is verified and
    returned as the witness.
    """
    table = PairTable(inst.n)
    iterations = 0
    evaluations = 0
    pair_insertions = 0

    def report(verdict, witness=None, evidence=None):
        if dump_board is not None:
            table.dump(dump_board)
        return SolverReport(
            algorithm="inner-witness", verdict=verdict, iterations=iterations,
            evaluations=evaluations, witness=witness, evidence=evidence,
            pair_insertions=pair_insertions,
        )

    for k in inst.rows.tolist():
        iterations += 1
        evaluations += 1
        if evaluate(inst, k):
            return report(SAT, witness=k, evidence="row-hit")
        if table.insert_pair(k):
            pair_insertions += 1
        if table.is_full:
            return report(UNSAT, evidence="blocked-board")

    gap = table.find_gap()
    evaluations += 1
    if gap is None or not evaluate(inst, gap):
        raise WitnessVerificationError(
            "table gap is not a satisfying assignment; table state is inconsistent"
        )
    return report(SAT, witness=gap, evidence="table-gap")


def random_permutation(mi: int, seed=None) -> list[int]:
    """Seeded permutation of [0, mi] in which no index below mi keeps its
    own value: whenever T[i] = i still holds at step i, swap with a
    uniform draw from [i+1, mi]. Positions past i only ever receive
    values below them, so a swap never creates a new fixed point.
    """
    if mi < 1:
        raise ValueError(f"need mi >= 1, got {mi}")
    rng = random.Random(seed)
    table = list(range(mi + 1))
    for i in range(mi):
        if table[i] == i:
            j = rng.randint(i + 1, mi)
            table[i], table[j] = table[j], table[i]
    return table


def outer_random_solve(inst: SsatInstance, seed=None) -> SolverReport:
    """Randomized search from outside the instance: walk a seeded random
    permutation of the lower half of the assignment space, testing each
    candidate and its complement. Every assignment belongs to exactly one
    such pair, so 2^{n-1} failed steps exhaust the space and prove UNSAT.

    The permutation is built lazily, one swap per step, so a SAT run does
    only as much shuffling as it consumes.
    """
    n = inst.n
    half = 1 << (n - 1)
    rng = random.Random(seed)
    overrides: dict[int, int] = {}
    iterations = 0
    evaluations = 0
    seed_field = seed if isinstance(seed, int) else None
    for i in range(half):
        iterations += 1
        j = rng.randint(i, half - 1)
        candidate = overrides.get(j, j)
        overrides[j] = overrides.pop(i, i)
        evaluations += 1
        if evaluate(inst, candidate):
            return SolverReport(
                algorithm="outer-random", verdict=SAT, iterations=iterations,
                evaluations=evaluations, witness=candidate, seed=seed_field,
            )
        other = complement(candidate, n)
        evaluations += 1
        if evaluate(inst, other):
            return SolverReport(
                algorithm="outer-random", verdict=SAT, iterations=iterations,
                evaluations=evaluations, witness=other, seed=seed_field,
            )
    return SolverReport(
        algorithm="outer-random", verdict=UNSAT, iterations=iterations,
        evaluations=evaluations, evidence="exhausted-pairs", seed=seed_field,
    )


def binary_search_solve(inst: SsatInstance) -> SolverReport:
    """Locate the unique gap of a sorted full-minus-one instance.

    Requires rows strictly ascending with m = 2^n - 1, which pins down
    exactly one missing code g. Rows below the gap sit at their own index
    and rows above it are shifted by one, so T[mid] = mid probing finds g
    in at most ceil(log2(2^n - 1)) + 2 comparisons including the two edge
    checks. The gap is the one missing row, hence complement(g) is the
    one assignment nothing blocks; it is verified before reporting.
    """
    n = inst.n
    rows = inst.rows
    m = (1 << n) - 1
    if inst.m != m:
        raise PreconditionError(f"need exactly 2^n - 1 = {m} rows, got {inst.m}")
    if inst.m > 1 and not bool((rows[1:] > rows[:-1]).all()):
        raise PreconditionError("rows must be strictly ascending")

    comparisons = 1
    if int(rows[0]) != 0:
        gap = 0
    else:
        comparisons += 1
        if int(rows[m - 1]) != (1 << n) - 1:
            gap = (1 << n) - 1
        else:
            lo, hi = 0, m - 1
            while hi - lo > 1:
                mid = (lo + hi) // 2
                comparisons += 1
                if int(rows[mid]) == mid:
                    lo = mid
                else:
                    hi = mid
            gap = lo + 1

    evaluations = 0
    witness = None
    for x in (complement(gap, n), gap):
        evaluations += 1
        if evaluate(inst, x):
            witness = x
            break
    if witness is None:
        raise WitnessVerificationError(
            f"neither gap {gap} nor its complement satisfies; "
            "the unique-solution promise does not hold"
        )
    return SolverReport(
        algorithm="binary-search", verdict=SAT, iterations=comparisons,
        evaluations=evaluations, witness=witness, evidence=f"gap {gap}",
    )
