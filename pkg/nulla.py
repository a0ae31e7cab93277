#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
nulla.py

NulLA degree ascent: for d = 0, 1, ... build the linear system whose unknowns
are the coefficients of beta_1..beta_s over all monomials of degree <= d and
whose rows balance sum(beta_i * f_i) = 1 monomial by monomial. The first
solvable degree gives a certificate of minimum degree.

Also: exact certificate verification, affine change of variables and the
oracle-backed default degree bound.
"""

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

import settings
from encoders import INDSET, MATCHING_V1, MATCHING_V2, ECOVER, VCOVER, PolySystem
from errors import CertificateError, OracleRefusal, ResourceRefusal, StructuralError
from formats import (CertificateFile, DegreeRecordModel, dump_model, load_model,
                     polynomial_to_terms, terms_to_polynomial)
from linsolve import SparseRationalMatrix, rank, solve_particular
from oracles import (OracleLimits, enum_cagefree_subgraphs, enum_independent_sets, enum_matchings,
                     enumerate_family, is_subset_closed, max_structure_size)
from poly import Monomial, Polynomial, VariableTable, mono_key, mono_mul, monomials_up_to, substitute

logger = logging.getLogger(__name__)

CERTIFIED = "certificate"
NO_CERTIFICATE = "no_certificate"
REFUSED = "refused"

ColumnMap = List[Tuple[int, Monomial]]


@dataclass
class Certificate:
    betas: Tuple[Polynomial, ...]

    @property
    def degree(self) -> int:
        return max([b.degree for b in self.betas] + [0])

    def __len__(self) -> int:
        return len(self.betas)

    def to_model(self, system_hash: Optional[str] = None, report: Optional["SolveReport"] = None) -> CertificateFile:
        return CertificateFile(
            degree=self.degree,
            betas=[polynomial_to_terms(b) for b in self.betas],
            system_hash=system_hash,
            report=report.to_models() if report else [],
        )

    def to_json(self, system: Optional[PolySystem] = None, report: Optional["SolveReport"] = None) -> str:
        return dump_model(self.to_model(system.system_hash() if system else None, report))

    @classmethod
    def from_model(cls, model: CertificateFile, table: VariableTable) -> "Certificate":
        return cls(tuple(terms_to_polynomial(terms, table) for terms in model.betas))

    @classmethod
    def from_json(cls, text: str, table: VariableTable) -> "Certificate":
        return cls.from_model(load_model(CertificateFile, text), table)


@dataclass
class DegreeRecord:
    degree: int
    rows: int
    cols: int
    status: str
    seconds: float = 0.0


@dataclass
class SolveReport:
    records: List[DegreeRecord] = field(default_factory=list)
    final_status: str = NO_CERTIFICATE

    def add(self, record: DegreeRecord) -> None:
        expected = self.records[-1].degree + 1 if self.records else 0
        if record.degree != expected:
            raise StructuralError(f"degree records must ascend from 0 (expected {expected})")
        self.records.append(record)

    def to_models(self) -> List[DegreeRecordModel]:
        return [DegreeRecordModel(degree=r.degree, rows=r.rows, cols=r.cols, status=r.status,
                                  millis=int(r.seconds * 1000)) for r in self.records]

    def to_table(self) -> str:
        lines = [f"{'degree':>6} {'rows':>8} {'cols':>8} {'status':>10} {'ms':>8}"]
        for r in self.records:
            lines.append(f"{r.degree:>6} {r.rows:>8} {r.cols:>8} {r.status:>10} {int(r.seconds * 1000):>8}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["degree,rows,cols,status,millis"]
        lines.extend(f"{r.degree},{r.rows},{r.cols},{r.status},{int(r.seconds * 1000)}" for r in self.records)
        return "\n".join(lines) + "\n"


@dataclass
class NullaResult:
    certificate: Optional[Certificate]
    report: SolveReport
    bound: int

    @property
    def found(self) -> bool:
        return self.certificate is not None

    @property
    def degree(self) -> Optional[int]:
        return self.certificate.degree if self.certificate else None


@dataclass
class VerifyResult:
    ok: bool
    residual: Polynomial

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class LinearSystem:
    matrix: SparseRationalMatrix
    columns: ColumnMap
    row_monomials: List[Monomial]


# ---- linear system ----

def column_count(system: PolySystem, d: int, equations: Optional[Sequence[int]] = None) -> int:
    count = system.size if equations is None else len(equations)
    return count * comb(system.n_vars + d, d)


def assemble(system: PolySystem, d: int, equations: Sequence[int], target: Polynomial) -> LinearSystem:
    """Unknown coefficients of beta_i (i in equations) over degree <= d, balanced against target.

    Only monomials that occur in some product M * f_i or in the target get a
    row; the remaining rows are all zero with zero right-hand side.
    """
    col_monos = monomials_up_to(system.n_vars, d)
    entries: Dict[Monomial, Dict[int, Fraction]] = {}
    columns: ColumnMap = []
    for i in equations:
        f_terms = list(system.polys[i].items())
        for mono in col_monos:
            c = len(columns)
            columns.append((i, mono))
            for f_mono, coeff in f_terms:
                entries.setdefault(mono_mul(mono, f_mono), {})[c] = coeff
    for mono in target.monomials():
        entries.setdefault(mono, {})
    row_monos = sorted(entries, key=mono_key)
    rows = [entries[mono] for mono in row_monos]
    rhs = [target.coefficient(mono) for mono in row_monos]
    matrix = SparseRationalMatrix(len(row_monos), len(columns), rows, rhs)
    logger.debug("degree %d system: %d rows, %d cols, %d nonzeros", d, matrix.n_rows, matrix.n_cols, matrix.nnz())
    return LinearSystem(matrix, columns, row_monos)


def build_linear_system(system: PolySystem, d: int) -> Tuple[SparseRationalMatrix, ColumnMap]:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    linear = assemble(system, d, range(system.size), system.table.const(1))
    return linear.matrix, linear.columns


def betas_from_solution(system: PolySystem, columns: ColumnMap, solution: Sequence[Fraction]) -> List[Polynomial]:
    collected: List[Dict[Monomial, Fraction]] = [{} for _ in range(system.size)]
    for (i, mono), value in zip(columns, solution):
        if value:
            collected[i][mono] = value
    return [Polynomial(system.table, terms) for terms in collected]


def certificate_at_degree(system: PolySystem, d: int) -> Optional[Certificate]:
    """Single-degree solve; None when no certificate of degree <= d exists."""
    matrix, columns = build_linear_system(system, d)
    result = solve_particular(matrix)
    if not result.solved:
        return None
    return Certificate(tuple(betas_from_solution(system, columns, result.solution)))


def nulla_solve(system: PolySystem, degree_bound: int, max_columns: int = settings.MAX_COLUMNS,
                progress: bool = settings.PROGRESS) -> NullaResult:
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    report = SolveReport()
    for d in tqdm(range(degree_bound + 1), desc="NulLA degree", disable=not progress):
        cols = column_count(system, d)
        if cols > max_columns:
            report.final_status = REFUSED
            raise ResourceRefusal(f"degree {d} needs {cols} columns, cap is {max_columns}", report)
        start = time.perf_counter()
        matrix, columns = build_linear_system(system, d)
        result = solve_particular(matrix)
        elapsed = time.perf_counter() - start
        report.add(DegreeRecord(d, matrix.n_rows, matrix.n_cols, result.status, elapsed))
        logger.info("degree %d: %d x %d, %s (%.3fs)", d, matrix.n_rows, matrix.n_cols, result.status, elapsed)
        if result.solved:
            certificate = Certificate(tuple(betas_from_solution(system, columns, result.solution)))
            check = verify_certificate(system, certificate)
            if not check.ok:
                raise CertificateError(f"degree {d} solution does not verify; residual {check.residual}")
            report.final_status = CERTIFIED
            return NullaResult(certificate, report, degree_bound)
    report.final_status = NO_CERTIFICATE
    return NullaResult(None, report, degree_bound)


# ---- verification ----

def verify_certificate(system: PolySystem, certificate: Certificate) -> VerifyResult:
    if len(certificate.betas) != system.size:
        raise StructuralError(f"certificate has {len(certificate.betas)} betas, system has {system.size} equations")
    total = system.table.zero()
    for beta, f in zip(certificate.betas, system.polys):
        if not beta.is_zero():
            total = total + beta * f
    residual = total - 1
    return VerifyResult(residual.is_zero(), residual)


# ---- change of variables ----

def complement_substitution(source: VariableTable, target: VariableTable) -> Dict[int, Polynomial]:
    """The map y_i -> 1 - x_i between two tables of equal size."""
    if source.size != target.size:
        raise StructuralError("complement map needs tables of equal size")
    return {i: 1 - target.var(i) for i in range(source.size)}


def _check_affine_invertible(mapping: Dict[int, Polynomial], target: VariableTable) -> None:
    rows = []
    for var in sorted(mapping):
        image = mapping[var]
        if image.degree > 1:
            raise StructuralError(f"image of variable {var} is not affine")
        rows.append({mono[0][0]: coeff for mono, coeff in image.items() if mono})
    if len(rows) != target.size:
        raise StructuralError("map is not invertible: variable counts differ")
    matrix = SparseRationalMatrix(len(rows), target.size, rows, [Fraction(0)] * len(rows))
    if rank(matrix) < target.size:
        raise StructuralError("map is not invertible: linear part is singular")


def _align(transformed: Polynomial, wanted: Polynomial, i: int) -> Fraction:
    """Scalar c with transformed == c * wanted."""
    if transformed.is_zero() and wanted.is_zero():
        return Fraction(1)
    if transformed.is_zero() or wanted.is_zero():
        raise StructuralError(f"equation {i} does not match the target system")
    mono, coeff = next(wanted.items())
    factor = transformed.coefficient(mono) / coeff
    if factor == 0 or transformed != wanted.scale(factor):
        raise StructuralError(f"equation {i} is not a multiple of the target equation")
    return factor


def change_of_variables(certificate: Certificate, system: PolySystem, mapping: Dict[int, Polynomial],
                        target: Optional[PolySystem] = None) -> Tuple[Certificate, PolySystem]:
    """Substitute an invertible affine map into a certificate and its system.

    Without a target the transformed system is returned as is. With a target
    whose equations are scalar multiples of the transformed ones, the betas are
    rescaled to certify the target instead.
    """
    new_table = next(iter(mapping.values())).table if mapping else system.table
    full = {}
    for var in range(system.n_vars):
        if var in mapping:
            full[var] = mapping[var]
        elif new_table == system.table:
            full[var] = new_table.var(var)
        else:
            raise StructuralError(f"variable {system.table.name(var)} has no image")
    _check_affine_invertible(full, new_table)

    betas = [substitute(b, full) for b in certificate.betas]
    polys = [substitute(f, full) for f in system.polys]
    if target is not None:
        if target.size != system.size or target.table != new_table:
            raise StructuralError("target system does not match the transformed shape")
        betas = [b.scale(_align(f, g, i)) for i, (b, f, g) in enumerate(zip(betas, polys, target.polys))]
        out = target
    else:
        out = PolySystem(
            problem=system.problem,
            table=new_table,
            polys=tuple(polys),
            tags=system.tags,
            kind=system.kind,
            graph=system.graph,
            indicator_ids=new_table.indicator_ids(),
            params=dict(system.params, transformed=True),
        )
    result = Certificate(tuple(betas))
    check = verify_certificate(out, result)
    if not check.ok:
        raise CertificateError(f"transformed certificate does not verify; residual {check.residual}")
    return result, out


# ---- degree bound ----

def default_degree_bound(system: PolySystem, limits: OracleLimits = OracleLimits()) -> int:
    """Oracle-backed bound for the degree ascent.

    Systems with auxiliary variables (kcolor, edgecolor, hom) get the degree
    the enumerative completion reaches: max structure size plus the largest
    equation degree. Families that are not subset closed (regular, kregular)
    get at least the indicator count, which bounds any certificate of a
    Boolean system.
    """
    graph = system.graph
    try:
        if system.problem in (INDSET, VCOVER):
            return max_structure_size(enum_independent_sets(graph, limits))
        if system.problem in (MATCHING_V1, MATCHING_V2):
            return max_structure_size(enum_matchings(graph, limits)) + 1
        if system.problem == ECOVER:
            return max_structure_size(enum_cagefree_subgraphs(graph, limits)) + 1
        family = enumerate_family(system.kind, graph, limits)
        top = max_structure_size(family)
        if len(system.indicator_ids) < system.n_vars:
            return top + max(system.max_degree(), 1)
        if not is_subset_closed(family):
            return max(top + 1, len(system.indicator_ids))
        return top + 1
    except (OracleRefusal, StructuralError) as e:
        logger.info("degree bound falls back to indicator count: %s", e)
        if len(system.indicator_ids) < system.n_vars:
            return len(system.indicator_ids) + system.max_degree()
        return len(system.indicator_ids)
