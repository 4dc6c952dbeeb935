"""Instance file formats.

Rows format (native): a header line "ssat n m", then m lines of exactly
n characters over {0,1}, leftmost character = x_{n-1}. One line per row,
duplicates and arbitrary order allowed.

CNF format: the usual DIMACS subset. Lines starting with "c" are
comments, the header is "p cnf n m", and each clause is a whitespace
separated run of signed 1-based variable numbers closed by 0 (clauses may
span or share lines). Variable v maps to x_{v-1}. Three ingestion modes:

* strict-ssat: every clause must mention every variable exactly once;
  parses straight to fixed-width rows.
* expand: clauses may skip variables; each one is rewritten into the
  equivalent set of fixed-width rows (2^k rows for k skipped variables).
* ternary: no rewriting; returns the general instance as ternary digit
  vectors (2 = variable absent).
"""

from __future__ import annotations

import os
from typing import Iterator

from .errors import ParseError
from .model import (
    DEFAULT_EXPANSION_CAP,
    MAX_WIDTH,
    SatInstance,
    SsatInstance,
    expand_to_ssat,
    ternary_from_clause,
    translate_row,
)

CNF_MODES = ("strict-ssat", "expand", "ternary")


def parse_rows_file(path: str | os.PathLike) -> SsatInstance:
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty file, expected 'ssat n m' header", 1)

    head = lines[0].split()
    if len(head) != 3 or head[0] != "ssat":
        raise ParseError("header must be 'ssat n m'", 1)
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("header must be 'ssat n m' with integer n and m", 1) from None
    if not 1 <= n <= MAX_WIDTH:
        raise ParseError(f"variable count must be in [1, {MAX_WIDTH}]", 1)
    if m < 1:
        raise ParseError("row count must be at least 1", 1)
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} rows, file has {len(lines) - 1}", len(lines))

    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        digits = line.strip()
        if len(digits) != n or digits.strip("01"):
            raise ParseError(f"expected {n} characters over 0/1, got {line!r}", lineno)
        rows.append(int(digits, 2))
    return SsatInstance(n, rows)


def write_rows_file(path: str | os.PathLike, inst: SsatInstance) -> None:
    """Inverse of parse_rows_file, bit-exact round trip."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"ssat {inst.n} {inst.m}\n")
        for r in inst.rows.tolist():
            fh.write(format(r, f"0{inst.n}b") + "\n")


def _cnf_tokens(lines: list[str]) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(lines, start=1):
        if line.startswith("c"):
            continue
        for tok in line.split():
            yield lineno, tok


def parse_cnf_file(
    path: str | os.PathLike,
    mode: str = "strict-ssat",
    row_cap: int = DEFAULT_EXPANSION_CAP,
) -> SsatInstance | SatInstance:
    if mode not in CNF_MODES:
        raise ValueError(f"mode must be one of {CNF_MODES}, got {mode!r}")
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()

    tokens = _cnf_tokens(lines)
    header = [tok for _, tok in _take(tokens, 4)]
    if len(header) < 4 or header[0] != "p" or header[1] != "cnf":
        raise ParseError("expected 'p cnf n m' header", 1)
    try:
        n, m = int(header[2]), int(header[3])
    except ValueError:
        raise ParseError("expected integer n and m in 'p cnf n m'", 1) from None
    if not 1 <= n <= MAX_WIDTH:
        raise ParseError(f"variable count must be in [1, {MAX_WIDTH}]", 1)
    if m < 1:
        raise ParseError("clause count must be at least 1", 1)

    clauses: list[list[int]] = []
    current: list[int] = []
    last_line = 1
    for lineno, tok in tokens:
        last_line = lineno
        try:
            lit = int(tok)
        except ValueError:
            raise ParseError(f"expected a signed variable number, got {tok!r}", lineno) from None
        if lit == 0:
            if not current:
                raise ParseError("empty clause (bare 0)", lineno)
            clauses.append(current)
            current = []
            continue
        if not 1 <= abs(lit) <= n:
            raise ParseError(f"literal {lit} names no variable in 1..{n}", lineno)
        current.append(lit)
    if current:
        raise ParseError("last clause is not closed by 0", last_line)
    if len(clauses) != m:
        raise ParseError(f"header promises {m} clauses, file has {len(clauses)}", last_line)

    if mode == "strict-ssat":
        return SsatInstance(n, [translate_row(c, n) for c in clauses])
    sat = SatInstance(n, tuple(ternary_from_clause(c, n) for c in clauses))
    if mode == "ternary":
        return sat
    return expand_to_ssat(sat, row_cap=row_cap)


def _take(it: Iterator, k: int) -> list:
    out = []
    for item in it:
        out.append(item)
        if len(out) == k:
            break
    return out
