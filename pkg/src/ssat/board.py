"""Pair table: a 2^n-cell board that keeps complements in adjacent cells.

The address map sends a code k with high bit 0 to cell 2*low(k), and a
code with high bit 1 to cell 2*(2^{n-1} - low(k)) - 1, where low(k) is k
with the high bit dropped. The map is a bijection on [0, 2^n - 1] and
places every code and its bitwise complement in an adjacent pair of cells
{2j, 2j+1}.

A full table (ct = 2^n) certifies unsatisfiability: every assignment is
then blocked by some inserted row. The inner solvers build their evidence
on this structure.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import WidthMismatchError
from .model import complement

# Sentinel for an unoccupied cell; also what dumps write, since every
# valid code is nonnegative.
EMPTY = -1

# Table-backed algorithms allocate 2^n cells; wider tables are refused.
MAX_TABLE_WIDTH = 30


def _check_code(k: int, n: int) -> None:
    if not 0 <= k < (1 << n):
        raise WidthMismatchError(f"code {k} does not fit width {n}")


def address_of(k: int, n: int) -> int:
    """Cell index of code k in a width-n table."""
    _check_code(k, n)
    low = k & ((1 << (n - 1)) - 1)
    if k >> (n - 1):
        return 2 * ((1 << (n - 1)) - low) - 1
    return 2 * low


def inverse_address(a: int, n: int) -> int:
    """The code whose cell is a; inverse of address_of."""
    if not 0 <= a < (1 << n):
        raise WidthMismatchError(f"address {a} is outside a width-{n} table")
    half = 1 << (n - 1)
    if a % 2 == 0:
        return a // 2
    return half | (half - (a + 1) // 2)


class PairTable:
    """Mutable 2^n-cell table; each cell is EMPTY or holds the one code
    whose address it is. ct tracks the number of filled cells."""

    __slots__ = ("n", "cells", "ct")

    def __init__(self, n: int):
        if not 1 <= n <= MAX_TABLE_WIDTH:
            raise ValueError(f"table width must be in [1, {MAX_TABLE_WIDTH}], got {n}")
        self.n = n
        self.cells = np.full(1 << n, EMPTY, dtype=np.int64)
        self.ct = 0

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def is_full(self) -> bool:
        return self.ct == self.size

    def insert(self, k: int) -> bool:
        """Store k at its address. False (and no change) if the cell is
        already occupied, which can only mean a duplicate row."""
        _check_code(k, self.n)
        a = address_of(k, self.n)
        if self.cells[a] != EMPTY:
            return False
        self.cells[a] = k
        self.ct += 1
        return True

    def insert_pair(self, k: int) -> bool:
        """Store k and its complement, each at its own address (the two
        cells are adjacent). False if k's cell is occupied; a cell pair is
        always filled or emptied as a unit, so ct moves in steps of 2."""
        _check_code(k, self.n)
        a = address_of(k, self.n)
        if self.cells[a] != EMPTY:
            return False
        c = complement(k, self.n)
        self.cells[a] = k
        self.cells[address_of(c, self.n)] = c
        self.ct += 2
        return True

    def find_gap(self) -> int | None:
        """Code owning the lowest-address empty cell, or None when full.

        Under pair insertion an empty cell at the address of code g means
        neither g nor complement(g) was ever inserted, so g is unblocked.
        """
        if self.is_full:
            return None
        a = int(np.argmax(self.cells == EMPTY))
        return inverse_address(a, self.n)

    def dump(self, path: str | os.PathLike) -> None:
        """Write one "address value" line per cell, -1 for empty."""
        with open(path, "w", encoding="ascii") as fh:
            for a, v in enumerate(self.cells.tolist()):
                fh.write(f"{a} {v}\n")

    def __repr__(self) -> str:
        return f"PairTable(n={self.n}, ct={self.ct}/{self.size})"
