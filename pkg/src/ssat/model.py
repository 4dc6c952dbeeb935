"""Fixed-width clause model: clauses as n-bit codes, instances, evaluation.

An instance over n Boolean variables x_{n-1}..x_0 is a conjunction of m
disjunctive rows in which every row mentions all n variables exactly once,
in the same order. Such a row is stored as an n-bit integer: bit i is 1
when x_i appears positively, 0 when it appears negated. Assignments are
the integers [0, 2^n - 1] under the same bit convention.

A full-width disjunction is false under exactly one assignment, the
bitwise complement of its code. Evaluating the whole conjunction therefore
reduces to a single membership test: the instance is false under x if and
only if the complement of x occurs among its rows.

Literals at the API boundary are signed 1-based indices (DIMACS style):
+v stands for x_{v-1}, -v for its negation. General clauses that skip
variables are carried as ternary digit vectors (digit 2 = variable absent,
written x_{n-1} first) and can be expanded into equivalent fixed-width
rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BlowupLimitError,
    DuplicateVariableError,
    MissingVariableError,
    WidthMismatchError,
)

# Rows live in an int64 array; wider codes would overflow it.
MAX_WIDTH = 62

# Ternary digit marking a variable that a clause does not mention.
ABSENT = 2

# Default cap on rows produced when expanding a general instance.
DEFAULT_EXPANSION_CAP = 1 << 20

# Instances up to this many rows cache a frozenset for membership tests;
# larger ones binary-search a sorted array instead (cheaper to build).
_SET_MEMBERSHIP_MAX = 1 << 16

TernaryClause = tuple[int, ...]


def complement(code: int, n: int) -> int:
    """Bitwise complement of an n-bit code."""
    return ((1 << n) - 1) ^ code


def is_blocking_pair(a: int, b: int, n: int) -> bool:
    """True when the two codes block each other, i.e. b is a's complement."""
    return b == complement(a, n)


def translate_row(clause: Iterable[int], n: int) -> int:
    """Encode a full-width clause, given as signed 1-based literals, as an
    n-bit row code (positive literal -> 1, negated -> 0)."""
    bits = 0
    seen = 0
    for lit in clause:
        v = abs(lit)
        if not 1 <= v <= n:
            raise WidthMismatchError(f"literal {lit} names no variable in x_0..x_{n - 1}")
        mask = 1 << (v - 1)
        if seen & mask:
            raise DuplicateVariableError(f"variable x_{v - 1} appears twice in the clause")
        seen |= mask
        if lit > 0:
            bits |= mask
    if seen != (1 << n) - 1:
        missing = next(i for i in range(n) if not (seen >> i) & 1)
        raise MissingVariableError(f"clause does not mention x_{missing}")
    return bits


def untranslate(code: int, n: int) -> list[int]:
    """Inverse of translate_row: the clause for a code, highest variable
    first, as signed 1-based literals."""
    if not 0 <= code < (1 << n):
        raise WidthMismatchError(f"code {code} does not fit width {n}")
    return [(i + 1) if (code >> i) & 1 else -(i + 1) for i in range(n - 1, -1, -1)]


@dataclass(frozen=True, eq=False, repr=False)
class SsatInstance:
    """An immutable conjunction of fixed-width rows.

    Rows are kept exactly as given: duplicates and arbitrary order are
    allowed and preserved, so m may exceed 2^n.
    """

    n: int
    rows: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_WIDTH:
            raise ValueError(f"variable count must be in [1, {MAX_WIDTH}], got {self.n}")
        rows = np.array(self.rows, dtype=np.int64, copy=True)
        if rows.ndim != 1:
            raise ValueError("rows must be a flat sequence of codes")
        if rows.size == 0:
            raise ValueError("an instance needs at least one row")
        if int(rows.min()) < 0 or int(rows.max()) >> self.n:
            raise WidthMismatchError(f"rows must lie in [0, 2^{self.n} - 1]")
        rows.flags.writeable = False
        object.__setattr__(self, "rows", rows)

    @property
    def m(self) -> int:
        return self.rows.size

    def has_row(self, code: int) -> bool:
        """Membership of a code in the row multiset."""
        members = self._member_set
        if members is not None:
            return code in members
        arr = self._member_sorted
        i = int(np.searchsorted(arr, code))
        return i < arr.size and int(arr[i]) == code

    @cached_property
    def _member_set(self) -> frozenset[int] | None:
        if self.m <= _SET_MEMBERSHIP_MAX:
            return frozenset(self.rows.tolist())
        return None

    @cached_property
    def _member_sorted(self) -> np.ndarray:
        rows = self.rows
        if rows.size > 1 and not bool(np.all(rows[1:] >= rows[:-1])):
            rows = np.sort(rows)
        return rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SsatInstance):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __repr__(self) -> str:
        head = ", ".join(format(int(r), f"0{self.n}b") for r in self.rows[:4])
        tail = ", ..." if self.m > 4 else ""
        return f"SsatInstance(n={self.n}, m={self.m}, rows=[{head}{tail}])"


def _check_assignment(n: int, x: int) -> None:
    if not 0 <= x < (1 << n):
        raise WidthMismatchError(f"assignment {x} does not fit width {n}")


def evaluate(inst: SsatInstance, x: int) -> int:
    """Truth value (0 or 1) of the conjunction under assignment x.

    Whole-word test: x falsifies the instance exactly when its complement
    occurs as a row.
    """
    _check_assignment(inst.n, x)
    return 0 if inst.has_row(complement(x, inst.n)) else 1


def evaluate_by_matching(inst: SsatInstance, x: int) -> int:
    """Same truth value as evaluate, computed the slow way: every row must
    agree with x in at least one digit, checked over all m*n digit pairs."""
    _check_assignment(inst.n, x)
    n = inst.n
    result = 1
    for row in inst.rows.tolist():
        row_true = 0
        for i in range(n):
            if (x >> i) & 1 == (row >> i) & 1:
                row_true = 1
        if not row_true:
            result = 0
    return result


def ternary_from_clause(clause: Iterable[int], n: int) -> TernaryClause:
    """Digit vector for a general clause: 1 positive, 0 negated, 2 absent;
    x_{n-1} first."""
    digits = [ABSENT] * n
    used = False
    for lit in clause:
        v = abs(lit)
        if not 1 <= v <= n:
            raise WidthMismatchError(f"literal {lit} names no variable in x_0..x_{n - 1}")
        if digits[n - v] != ABSENT:
            raise DuplicateVariableError(f"variable x_{v - 1} appears twice in the clause")
        digits[n - v] = 1 if lit > 0 else 0
        used = True
    if not used:
        raise ValueError("empty clause")
    return tuple(digits)


def ternary_row_code(digits: Sequence[int]) -> int:
    """Row code of a full-width ternary vector (no absent digits)."""
    n = len(digits)
    code = 0
    for j, d in enumerate(digits):
        if d == ABSENT:
            raise MissingVariableError(f"variable x_{n - 1 - j} is absent; no single code exists")
        if d:
            code |= 1 << (n - 1 - j)
    return code


@dataclass(frozen=True)
class SatInstance:
    """A general conjunction whose clauses may skip variables, held as
    ternary digit vectors."""

    n: int
    clauses: tuple[TernaryClause, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_WIDTH:
            raise ValueError(f"variable count must be in [1, {MAX_WIDTH}], got {self.n}")
        if not self.clauses:
            raise ValueError("an instance needs at least one clause")
        for c in self.clauses:
            if len(c) != self.n:
                raise WidthMismatchError(f"clause {c} is not {self.n} digits wide")
            if any(d not in (0, 1, ABSENT) for d in c):
                raise ValueError(f"clause {c} has a digit outside {{0, 1, 2}}")
            if all(d == ABSENT for d in c):
                raise ValueError("a clause must mention at least one variable")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @classmethod
    def from_clauses(cls, n: int, clauses: Iterable[Iterable[int]]) -> "SatInstance":
        """Build from clauses of signed 1-based literals."""
        return cls(n, tuple(ternary_from_clause(c, n) for c in clauses))


def to_ternary_matrix(sat: SatInstance) -> list[TernaryClause]:
    """The instance as a matrix of ternary rows, one per clause."""
    return list(sat.clauses)


def expand_to_ssat(sat: SatInstance, row_cap: int = DEFAULT_EXPANSION_CAP) -> SsatInstance:
    """Rewrite every clause into full-width rows, both polarities of each
    absent variable; a clause missing k variables becomes 2^k rows.

    The satisfying set is unchanged. Raises BlowupLimitError before
    materializing more than row_cap rows.
    """
    total = 0
    for clause in sat.clauses:
        total += 1 << clause.count(ABSENT)
        if total > row_cap:
            raise BlowupLimitError(f"expansion needs more than {row_cap} rows")
    rows = []
    for clause in sat.clauses:
        absent = [j for j, d in enumerate(clause) if d == ABSENT]
        digits = list(clause)
        for pattern in range(1 << len(absent)):
            for t, j in enumerate(absent):
                digits[j] = (pattern >> (len(absent) - 1 - t)) & 1
            rows.append(ternary_row_code(digits))
    return SsatInstance(sat.n, rows)
