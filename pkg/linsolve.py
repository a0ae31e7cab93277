#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
linsolve.py

Exact sparse linear algebra over the rationals.

Rows are scaled to primitive integer rows (right-hand side carried along as an
extra entry) and eliminated fraction-free: to clear a leading column the
incoming row is cross-multiplied with the stored pivot row and divided by the
content gcd. Each stored row's leading column is its pivot, so the pivot set is
exactly the set of columns independent of the columns to their left.

Exposes:
    rref(M), solve_particular(M), nullspace_basis(M), rank(M),
    dump_matrix(M), parse_matrix_dump(text)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from errors import FormatError, StructuralError
from poly import as_fraction, format_rational

logger = logging.getLogger(__name__)

SOLVED = "solved"
INFEASIBLE = "infeasible"

IntRow = Dict[int, int]


@dataclass
class SparseRationalMatrix:
    """Row-major sparse matrix with a right-hand side column."""

    n_rows: int
    n_cols: int
    rows: List[Dict[int, Fraction]]
    rhs: List[Fraction]

    def __post_init__(self):
        if len(self.rows) != self.n_rows or len(self.rhs) != self.n_rows:
            raise StructuralError("row count does not match stored rows / right-hand side")
        cleaned = []
        for row in self.rows:
            kept = {}
            for col, value in row.items():
                if not 0 <= col < self.n_cols:
                    raise StructuralError(f"column {col} outside 0..{self.n_cols - 1}")
                value = as_fraction(value)
                if value:
                    kept[col] = value
            cleaned.append(kept)
        self.rows = cleaned
        self.rhs = [as_fraction(b) for b in self.rhs]

    @classmethod
    def from_entries(cls, n_rows: int, n_cols: int, entries: Mapping[Tuple[int, int], Fraction],
                     rhs: Sequence[Fraction]) -> "SparseRationalMatrix":
        rows: List[Dict[int, Fraction]] = [{} for _ in range(n_rows)]
        for (r, c), value in entries.items():
            if not 0 <= r < n_rows:
                raise StructuralError(f"row {r} outside 0..{n_rows - 1}")
            rows[r][c] = value
        return cls(n_rows, n_cols, rows, list(rhs))

    @classmethod
    def from_dense(cls, matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> "SparseRationalMatrix":
        n_cols = len(matrix[0]) if matrix else 0
        rows = [{c: v for c, v in enumerate(row) if v} for row in matrix]
        return cls(len(rows), n_cols, rows, list(rhs))

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return {(r, c): v for r, row in enumerate(self.rows) for c, v in row.items()}

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows)

    def multiply(self, vector: Sequence[Fraction]) -> List[Fraction]:
        return [sum((v * vector[c] for c, v in row.items()), Fraction(0)) for row in self.rows]

    def residual(self, vector: Sequence[Fraction]) -> List[Fraction]:
        return [a - b for a, b in zip(self.multiply(vector), self.rhs)]


@dataclass
class SolveResult:
    status: str
    solution: Optional[List[Fraction]]
    rank: int
    pivot_columns: List[int]
    inconsistent_row: Optional[int] = None

    @property
    def solved(self) -> bool:
        return self.status == SOLVED


@dataclass
class RrefResult:
    matrix: SparseRationalMatrix
    pivot_columns: List[int]
    rank: int
    inconsistent_rows: List[int] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.inconsistent_rows


# ---- integer rows ----

def _primitive(row: IntRow, b: int) -> Tuple[IntRow, int]:
    g = abs(b)
    for value in row.values():
        g = gcd(g, value)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
        b //= g
    if row and row[min(row)] < 0:
        row = {c: -v for c, v in row.items()}
        b = -b
    return row, b


def _integer_row(row: Mapping[int, Fraction], b: Fraction) -> Tuple[IntRow, int]:
    den = b.denominator
    for value in row.values():
        den = den * value.denominator // gcd(den, value.denominator)
    ints = {c: int(v * den) for c, v in row.items()}
    return _primitive(ints, int(b * den))


def _prepared(matrix: SparseRationalMatrix) -> Tuple[List[Tuple[int, IntRow, int]], List[int]]:
    """Primitive, deduplicated, nonzero rows; zero rows with nonzero rhs are reported."""
    seen = set()
    rows = []
    inconsistent = []
    for origin, (row, b) in enumerate(zip(matrix.rows, matrix.rhs)):
        ints, ib = _integer_row(row, b)
        if not ints:
            if ib:
                inconsistent.append(origin)
            continue
        key = (tuple(sorted(ints.items())), ib)
        if key in seen:
            continue
        seen.add(key)
        rows.append((origin, ints, ib))
    return rows, inconsistent


@dataclass
class _Echelon:
    pivots: Dict[int, Tuple[IntRow, int]]
    inconsistent_rows: List[int]


def _echelon(matrix: SparseRationalMatrix, stop_on_inconsistency: bool) -> _Echelon:
    rows, inconsistent = _prepared(matrix)
    pivots: Dict[int, Tuple[IntRow, int]] = {}
    if inconsistent and stop_on_inconsistency:
        return _Echelon(pivots, inconsistent[:1])
    for origin, row, b in rows:
        while row:
            lead = min(row)
            stored = pivots.get(lead)
            if stored is None:
                break
            prow, pb = stored
            a, r = prow[lead], row[lead]
            g = gcd(a, r)
            a, r = a // g, r // g
            reduced = {c: v * a for c, v in row.items()} if a != 1 else dict(row)
            for c, v in prow.items():
                value = reduced.get(c, 0) - r * v
                if value:
                    reduced[c] = value
                else:
                    reduced.pop(c, None)
            row, b = _primitive(reduced, b * a - r * pb)
        if row:
            pivots[min(row)] = (row, b)
        elif b:
            inconsistent.append(origin)
            if stop_on_inconsistency:
                break
    logger.debug("echelon: %d rows in, %d pivots, %d inconsistent", matrix.n_rows, len(pivots), len(inconsistent))
    return _Echelon(pivots, sorted(inconsistent))


def _back_substitute(pivots: Dict[int, Tuple[IntRow, int]], n_cols: int) -> List[Fraction]:
    """Particular solution with every free column set to zero."""
    x = [Fraction(0)] * n_cols
    for col in sorted(pivots, reverse=True):
        row, b = pivots[col]
        total = Fraction(b)
        for c, v in row.items():
            if c != col and x[c]:
                total -= v * x[c]
        x[col] = total / row[col]
    return x


def _reduce(pivots: Dict[int, Tuple[IntRow, int]]) -> Dict[int, Tuple[Dict[int, Fraction], Fraction]]:
    reduced = {}
    for col, (row, b) in pivots.items():
        lead = row[col]
        reduced[col] = ({c: Fraction(v, lead) for c, v in row.items()}, Fraction(b, lead))
    cols = sorted(reduced)
    for col in reversed(cols):
        prow, pb = reduced[col]
        for other in cols:
            if other >= col:
                break
            row, b = reduced[other]
            factor = row.get(col)
            if not factor:
                continue
            for c, v in prow.items():
                value = row.get(c, 0) - factor * v
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
            reduced[other] = (row, b - factor * pb)
    return reduced


# ---- public operations ----

def rref(matrix: SparseRationalMatrix) -> RrefResult:
    """Reduced row echelon form of the augmented system.

    Reduced rows appear in pivot-column order; an inconsistent system gets one
    extra row with no entries and right-hand side 1.
    """
    ech = _echelon(matrix, stop_on_inconsistency=False)
    reduced = _reduce(ech.pivots)
    cols = sorted(reduced)
    rows = [reduced[c][0] for c in cols]
    rhs = [reduced[c][1] for c in cols]
    if ech.inconsistent_rows:
        rows.append({})
        rhs.append(Fraction(1))
    out = SparseRationalMatrix(len(rows), matrix.n_cols, rows, rhs)
    return RrefResult(out, cols, len(cols), ech.inconsistent_rows)


def solve_particular(matrix: SparseRationalMatrix, stop_early: bool = True) -> SolveResult:
    """Solve A x = b exactly, free variables set to zero.

    With stop_early the elimination halts at the first inconsistent row, so
    the reported rank then only counts the rows processed so far.
    """
    ech = _echelon(matrix, stop_on_inconsistency=stop_early)
    pivot_columns = sorted(ech.pivots)
    if ech.inconsistent_rows:
        return SolveResult(INFEASIBLE, None, len(pivot_columns), pivot_columns, ech.inconsistent_rows[0])
    solution = _back_substitute(ech.pivots, matrix.n_cols)
    return SolveResult(SOLVED, solution, len(pivot_columns), pivot_columns)


def rank(matrix: SparseRationalMatrix) -> int:
    return len(_echelon(matrix, stop_on_inconsistency=False).pivots)


def nullspace_basis(matrix: SparseRationalMatrix) -> List[List[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    homogeneous = SparseRationalMatrix(matrix.n_rows, matrix.n_cols, [dict(r) for r in matrix.rows],
                                       [Fraction(0)] * matrix.n_rows)
    reduced = _reduce(_echelon(homogeneous, stop_on_inconsistency=False).pivots)
    free = [c for c in range(matrix.n_cols) if c not in reduced]
    basis = []
    for f in free:
        vector = [Fraction(0)] * matrix.n_cols
        vector[f] = Fraction(1)
        for col, (row, _) in reduced.items():
            if f in row:
                vector[col] = -row[f]
        basis.append(vector)
    return basis


# ---- debug dump ----

def dump_matrix(matrix: SparseRationalMatrix) -> str:
    """Coordinate text: header "rows cols", then "row col p/q"; rhs uses col = cols."""
    lines = [f"{matrix.n_rows} {matrix.n_cols}"]
    for r, row in enumerate(matrix.rows):
        for c in sorted(row):
            lines.append(f"{r} {c} {format_rational(row[c])}")
        if matrix.rhs[r]:
            lines.append(f"{r} {matrix.n_cols} {format_rational(matrix.rhs[r])}")
    return "\n".join(lines) + "\n"


def parse_matrix_dump(text: str) -> SparseRationalMatrix:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    try:
        n_rows, n_cols = int(lines[0][0]), int(lines[0][1])
        entries: Dict[Tuple[int, int], Fraction] = {}
        rhs = [Fraction(0)] * n_rows
        for r, c, value in lines[1:]:
            r, c = int(r), int(c)
            if c == n_cols:
                rhs[r] = Fraction(value)
            else:
                entries[(r, c)] = Fraction(value)
    except (IndexError, ValueError, ZeroDivisionError) as e:
        raise FormatError(f"bad matrix dump: {e}") from e
    try:
        return SparseRationalMatrix.from_entries(n_rows, n_cols, entries, rhs)
    except StructuralError as e:
        raise FormatError(f"bad matrix dump: {e}") from e
