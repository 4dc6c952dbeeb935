"""Core model: codes, translation, evaluation, ternary handling."""

import random

import numpy as np
import pytest

from ssat import (
    ABSENT,
    DuplicateVariableError,
    MissingVariableError,
    SatInstance,
    SsatInstance,
    WidthMismatchError,
    complement,
    evaluate,
    evaluate_by_matching,
    expand_to_ssat,
    is_blocking_pair,
    ternary_from_clause,
    ternary_row_code,
    to_ternary_matrix,
    translate_row,
    untranslate,
)
from ssat.errors import BlowupLimitError


def ref_eval(n, rows, x):
    # independent reference: every row, read as a disjunction, must agree
    # with x in at least one bit position
    return int(all(any((x >> i) & 1 == (r >> i) & 1 for i in range(n)) for r in rows))


def random_instance(rng, n, m):
    return SsatInstance(n, [rng.randrange(1 << n) for _ in range(m)])


class TestTranslateRow:
    def test_two_variable_example(self):
        assert translate_row([-2, 1], 2) == 0b01

    def test_all_negated_six(self):
        assert translate_row([-6, -5, -4, -3, -2, -1], 6) == 0b000000

    def test_mixed_three(self):
        assert translate_row([-3, 2, 1], 3) == 0b011

    def test_order_does_not_matter(self):
        assert translate_row([1, -3, 2], 3) == 0b011

    def test_missing_variable(self):
        with pytest.raises(MissingVariableError):
            translate_row([2, 1], 3)

    def test_duplicate_variable(self):
        with pytest.raises(DuplicateVariableError):
            translate_row([2, 1, -1], 2)

    def test_literal_out_of_range(self):
        with pytest.raises(WidthMismatchError):
            translate_row([3, 1], 2)
        with pytest.raises(WidthMismatchError):
            translate_row([0, 1], 2)


class TestUntranslate:
    def test_two_variable_example(self):
        assert untranslate(0b01, 2) == [-2, 1]

    def test_all_positive(self):
        assert untranslate(0b111, 3) == [3, 2, 1]

    def test_all_negated_six(self):
        assert untranslate(0, 6) == [-6, -5, -4, -3, -2, -1]

    def test_round_trip_exhaustive(self):
        for n in range(1, 9):
            for code in range(1 << n):
                assert translate_row(untranslate(code, n), n) == code

    def test_code_out_of_range(self):
        with pytest.raises(WidthMismatchError):
            untranslate(4, 2)


class TestComplement:
    def test_examples(self):
        assert complement(0b000, 3) == 0b111
        assert complement(0b011, 3) == 0b100
        assert complement(0b01, 2) == 0b10

    def test_involution_and_no_fixed_point(self):
        for n in range(1, 13):
            for code in range(1 << n):
                c = complement(code, n)
                assert complement(c, n) == code
                assert c != code

    def test_blocking_pair(self):
        assert is_blocking_pair(0b000, 0b111, 3)
        assert is_blocking_pair(0b011, 0b100, 3)
        assert not is_blocking_pair(0b010, 0b010, 3)


class TestSsatInstance:
    def test_rows_kept_in_order_with_duplicates(self):
        inst = SsatInstance(2, [3, 0, 3, 1])
        assert inst.rows.tolist() == [3, 0, 3, 1]
        assert inst.m == 4

    def test_rows_immutable(self):
        inst = SsatInstance(2, [1, 2])
        with pytest.raises(ValueError):
            inst.rows[0] = 3

    def test_equality(self):
        assert SsatInstance(2, [1, 2]) == SsatInstance(2, [1, 2])
        assert SsatInstance(2, [1, 2]) != SsatInstance(2, [2, 1])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            SsatInstance(2, [])

    def test_rejects_bad_width(self):
        with pytest.raises(ValueError):
            SsatInstance(0, [0])

    def test_rejects_out_of_range_rows(self):
        with pytest.raises(WidthMismatchError):
            SsatInstance(2, [4])
        with pytest.raises(WidthMismatchError):
            SsatInstance(2, [-1])

    def test_membership_large_instance_sorted_path(self):
        # above the set-cache threshold has_row falls back to binary search
        n, m = 17, (1 << 16) + 2
        inst = SsatInstance(n, np.arange(m, dtype=np.int64))
        assert inst.has_row(0)
        assert inst.has_row(m - 1)
        assert not inst.has_row(m)

    def test_membership_large_unsorted(self):
        n, m = 17, (1 << 16) + 2
        rows = np.arange(m, dtype=np.int64)[::-1].copy()
        inst = SsatInstance(n, rows)
        assert inst.has_row(m - 1)
        assert not inst.has_row(m)


class TestEvaluate:
    def test_scheme_six_variable(self):
        rows = [0b000000, 0b000001, 0b111110, 0b011011]
        inst = SsatInstance(6, rows)
        assert evaluate(inst, 0b000000) == 1

    def test_blocked_one_variable(self):
        inst = SsatInstance(1, [1, 0])
        assert evaluate(inst, 0) == 0
        assert evaluate(inst, 1) == 0

    def test_worked_three_variable(self):
        inst = SsatInstance(3, [0, 1, 2, 3, 5, 6, 7])
        assert evaluate(inst, 0b011) == 1

    def test_two_rows(self):
        inst = SsatInstance(2, [0b01, 0b11])
        assert evaluate(inst, 0b11) == 1

    def test_width_mismatch(self):
        inst = SsatInstance(2, [1])
        with pytest.raises(WidthMismatchError):
            evaluate(inst, 4)
        with pytest.raises(WidthMismatchError):
            evaluate(inst, -1)

    def test_blocking_law_exhaustive(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 6)
            inst = random_instance(rng, n, rng.randint(1, 3 << n))
            members = set(inst.rows.tolist())
            for x in range(1 << n):
                val = evaluate(inst, x)
                assert val == ref_eval(n, inst.rows.tolist(), x)
                assert (val == 0) == (complement(x, n) in members)


class TestEvaluateByMatching:
    def test_same_results_as_evaluate(self):
        inst = SsatInstance(6, [0b000000, 0b000001, 0b111110, 0b011011])
        assert evaluate_by_matching(inst, 0) == 1
        blocked = SsatInstance(1, [1, 0])
        assert evaluate_by_matching(blocked, 0) == 0
        assert evaluate_by_matching(blocked, 1) == 0
        worked = SsatInstance(3, [0, 1, 2, 3, 5, 6, 7])
        assert evaluate_by_matching(worked, 0b011) == 1

    def test_agreement_random_sweep(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(1, 8)
            inst = random_instance(rng, n, rng.randint(1, 2 << n))
            for x in range(1 << n):
                assert evaluate_by_matching(inst, x) == evaluate(inst, x)

    def test_width_mismatch(self):
        with pytest.raises(WidthMismatchError):
            evaluate_by_matching(SsatInstance(2, [1]), 5)


class TestTernary:
    def test_sparse_clause(self):
        # x3 or not-x0 over four variables
        assert ternary_from_clause([4, -1], 4) == (1, ABSENT, ABSENT, 0)

    def test_other_sparse_clause(self):
        assert ternary_from_clause([4, -3, 1], 4) == (1, 0, ABSENT, 1)

    def test_full_width_has_no_absent_digit(self):
        digits = ternary_from_clause([-3, 2, 1], 3)
        assert ABSENT not in digits
        assert ternary_row_code(digits) == 0b011

    def test_row_code_rejects_absent(self):
        with pytest.raises(MissingVariableError):
            ternary_row_code((1, ABSENT, 0))

    def test_empty_clause_rejected(self):
        with pytest.raises(ValueError):
            ternary_from_clause([], 3)

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateVariableError):
            ternary_from_clause([1, -1], 3)

    def test_to_ternary_matrix(self):
        sat = SatInstance.from_clauses(4, [[4, -1], [4, -3, 1]])
        assert to_ternary_matrix(sat) == [(1, ABSENT, ABSENT, 0), (1, 0, ABSENT, 1)]


class TestSatInstance:
    def test_validates_width(self):
        with pytest.raises(WidthMismatchError):
            SatInstance(3, ((1, 0),))

    def test_rejects_all_absent_clause(self):
        with pytest.raises(ValueError):
            SatInstance(2, ((ABSENT, ABSENT),))

    def test_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            SatInstance(2, ((3, 1),))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            SatInstance(2, ())


def ref_sat_eval(n, clauses, x):
    # digit j speaks about x_{n-1-j}; 2 means the clause skips it
    for clause in clauses:
        ok = False
        for j, d in enumerate(clause):
            if d != ABSENT and (x >> (n - 1 - j)) & 1 == d:
                ok = True
        if not ok:
            return 0
    return 1


class TestExpandToSsat:
    def test_single_sparse_clause(self):
        sat = SatInstance.from_clauses(2, [[1]])
        assert set(expand_to_ssat(sat).rows.tolist()) == {0b11, 0b01}

    def test_contradictory_pair_covers_space(self):
        sat = SatInstance.from_clauses(2, [[1], [-1]])
        inst = expand_to_ssat(sat)
        assert inst.m == 4
        assert set(inst.rows.tolist()) == {0b00, 0b01, 0b10, 0b11}

    def test_full_width_clause_unchanged(self):
        sat = SatInstance.from_clauses(3, [[-3, 2, 1]])
        inst = expand_to_ssat(sat)
        assert inst.rows.tolist() == [0b011]

    def test_row_count_per_clause(self):
        sat = SatInstance.from_clauses(5, [[2], [5, -1], [3, 2, 1]])
        assert expand_to_ssat(sat).m == 16 + 8 + 4

    def test_blowup_cap(self):
        sat = SatInstance.from_clauses(20, [[1]])
        with pytest.raises(BlowupLimitError):
            expand_to_ssat(sat, row_cap=1000)

    def test_satisfying_sets_preserved(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(1, 6)
            clauses = []
            for _ in range(rng.randint(1, 8)):
                vars_in = rng.sample(range(1, n + 1), rng.randint(1, n))
                clauses.append([v if rng.random() < 0.5 else -v for v in vars_in])
            sat = SatInstance.from_clauses(n, clauses)
            inst = expand_to_ssat(sat)
            for x in range(1 << n):
                assert evaluate(inst, x) == ref_sat_eval(n, sat.clauses, x)
