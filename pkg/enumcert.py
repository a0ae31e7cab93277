#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
enumcert.py

Certificates built from the structure family instead of by degree search.

- structure_monomial_basis: one squarefree indicator monomial y_b per structure b
- invert_cardinality_form: beta_1 with f_1 * beta_1 = 1 modulo the other
  equations, solved over the structure basis with the rule
      y_i * y_b -> y_b            if i in b
      y_i * y_b -> y_(b + i)      if b + i is a structure
      y_i * y_b -> 0              otherwise
- complete_certificate: the remaining betas from one linear solve per degree
- matching_transform: perfect-matching certificate in Boolean/line-graph form
  rewritten for the vertex-equation form
- bipartite_degree_zero: the constant certificate for bipartite graphs with
  unequal color classes
- analyze: the comparison report behind `nulla analyze`
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import settings
from encoders import (MATCHING_V1, KREGULAR, PolySystem, encode_perfect_matching_v1,
                      encode_perfect_matching_v2)
from errors import (CertificateError, InfeasibilityError, NotSubsetClosed, ResourceRefusal,
                    StructuralError)
from graphs import Edge, Graph, bipartition
from linsolve import SparseRationalMatrix, solve_particular
from nulla import (Certificate, assemble, betas_from_solution, column_count, default_degree_bound,
                   nulla_solve, verify_certificate)
from oracles import (Member, OracleLimits, StructureFamily, enum_k_regular_subgraphs, enum_matchings,
                     enumerate_family, is_subset_closed, max_structure_size)
from poly import AUXILIARY, Monomial, Polynomial, format_rational, mono_from_vars, mono_key, mono_text

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructureBasis:
    family: StructureFamily
    members: Tuple[Member, ...]
    monomials: Tuple[Monomial, ...]

    def position(self) -> Dict[Member, int]:
        return {member: i for i, member in enumerate(self.members)}


# ---- basis and inversion ----

def structure_monomial_basis(system: PolySystem, limits: OracleLimits = OracleLimits()) -> StructureBasis:
    family = enumerate_family(system.kind, system.graph, limits)
    ids = system.indicator_ids
    if len(family.ground) != len(ids):
        raise StructuralError("structure ground set does not match the indicator variables")
    pairs = sorted(((mono_from_vars(ids[i] for i in member), member) for member in family.members),
                   key=lambda pair: mono_key(pair[0]))
    return StructureBasis(family, tuple(m for _, m in pairs), tuple(mono for mono, _ in pairs))


def invert_cardinality_form(system: PolySystem, basis: StructureBasis) -> Polynomial:
    if system.cardinality_index is None:
        raise StructuralError(f"{system.problem} system has no cardinality equation")
    closure = is_subset_closed(basis.family)
    if not closure:
        raise NotSubsetClosed(closure.witness)
    top = max_structure_size(basis.family)
    if system.m <= top:
        raise InfeasibilityError(f"a structure of size {top} >= m={system.m} exists; the system is feasible")

    position = basis.position()
    ground = len(system.indicator_ids)
    rows: List[Dict[int, Fraction]] = [{} for _ in basis.members]
    for col, member in enumerate(basis.members):
        rows[col][col] = Fraction(-system.m)
        for i in range(ground):
            if i in member:
                rows[col][col] += 1
            else:
                grown = position.get(member | {i})
                if grown is not None:
                    rows[grown][col] = rows[grown].get(col, 0) + 1
    rhs = [Fraction(1) if not member else Fraction(0) for member in basis.members]
    matrix = SparseRationalMatrix(len(rows), len(rows), rows, rhs)
    result = solve_particular(matrix)
    if not result.solved:
        raise CertificateError("cardinality form is not invertible over the structure basis")
    beta = Polynomial(system.table, dict(zip(basis.monomials, result.solution)))
    logger.info("inverted cardinality form: %d structures, degree %d", len(basis.members), beta.degree)
    return beta


def complete_certificate(system: PolySystem, beta1: Polynomial, degree_bound: Optional[int] = None,
                         max_columns: int = settings.MAX_COLUMNS) -> Certificate:
    """Solve for the companions of a fixed beta_1, ascending their degree from 0."""
    card = system.cardinality_index
    if card is None:
        raise StructuralError("completion needs a cardinality equation")
    rest = [i for i in range(system.size) if i != card]
    target = 1 - beta1 * system.polys[card]
    if degree_bound is None:
        degree_bound = beta1.degree + system.max_degree()
    reach = max((system.polys[i].degree for i in rest), default=-1)

    start = max(0, target.degree - reach) if reach >= 0 else degree_bound + 1
    for d in range(start, degree_bound + 1):
        cols = column_count(system, d, rest)
        if cols > max_columns:
            raise ResourceRefusal(f"completion at degree {d} needs {cols} columns, cap is {max_columns}")
        linear = assemble(system, d, rest, target)
        result = solve_particular(linear.matrix)
        if not result.solved:
            continue
        betas = betas_from_solution(system, linear.columns, result.solution)
        betas[card] = beta1
        certificate = Certificate(tuple(betas))
        check = verify_certificate(system, certificate)
        if not check.ok:
            raise CertificateError(f"completed certificate does not verify; residual {check.residual}")
        logger.info("completed certificate with companions of degree %d", d)
        return certificate

    if target.is_zero():
        betas = [system.table.zero()] * system.size
        betas[card] = beta1
        return Certificate(tuple(betas))
    raise CertificateError(f"no completion with companions up to degree {degree_bound}; raise the bound")


# ---- perfect matchings ----

def _designated_endpoint(edge: Edge) -> int:
    return edge[0]


def matching_transform(c2: Certificate, graph: Graph) -> Certificate:
    """Rewrite a Boolean/line-graph matching certificate for the vertex-equation system.

    With A the cardinality coefficient and P_e, Q_ef the Boolean and adjacency
    coefficients, every edge e is charged to its lower endpoint d(e):
        Delta_i     = A/2 + sum over d(e) = i of P_e x_e
        Theta_i(ef) = Q_ef - [d(e) = i] P_e - [d(f) = i] P_f
    using sum_i (sum_{e at i} x_e - 1) = 2 * (-|V|/2 + sum_e x_e) and
    x_e^2 - x_e = x_e * (sum_{f at i} x_f - 1) - sum_{f at i, f != e} x_e x_f.
    """
    v2 = encode_perfect_matching_v2(graph)
    if not verify_certificate(v2, c2):
        raise CertificateError("input certificate does not verify against the matching-v2 system")
    v1 = encode_perfect_matching_v1(graph)
    table = v1.table
    edges = graph.edges
    index = graph.edge_index()

    a_part = c2.betas[v2.cardinality_index]
    p_part: Dict[int, Polynomial] = {}
    q_part: Dict[Tuple[int, int], Polynomial] = {}
    for tag, beta in zip(v2.tags, c2.betas):
        if tag.role == "boolean":
            p_part[index[tag.items]] = beta
        elif tag.role == "adjacent":
            q_part[tag.items] = beta

    betas: List[Polynomial] = []
    for tag in v1.tags:
        if tag.role == "vertex":
            (v,) = tag.items
            delta = a_part.scale(Fraction(1, 2))
            for j, edge in enumerate(edges):
                if _designated_endpoint(edge) == v:
                    delta = delta + p_part[j] * table.var(j)
            betas.append(delta)
        else:
            v, a, b = tag.items
            e = index[(min(v, a), max(v, a))]
            f = index[(min(v, b), max(v, b))]
            theta = q_part[(min(e, f), max(e, f))]
            if _designated_endpoint(edges[e]) == v:
                theta = theta - p_part[e]
            if _designated_endpoint(edges[f]) == v:
                theta = theta - p_part[f]
            betas.append(theta)

    certificate = Certificate(tuple(betas))
    check = verify_certificate(v1, certificate)
    if not check.ok:
        raise CertificateError(f"transformed matching certificate does not verify; residual {check.residual}")
    return certificate


def split_matching_certificate(certificate: Certificate, v1: PolySystem) -> Tuple[Dict[int, Polynomial], Dict[Tuple[int, ...], Polynomial]]:
    """Vertex-equation coefficients keyed by vertex, pair-equation coefficients keyed by tag items."""
    deltas: Dict[int, Polynomial] = {}
    thetas: Dict[Tuple[int, ...], Polynomial] = {}
    for tag, beta in zip(v1.tags, certificate.betas):
        if tag.role == "vertex":
            deltas[tag.items[0]] = beta
        else:
            thetas[tag.items] = beta
    return deltas, thetas


def bipartite_degree_zero(graph: Graph) -> Optional[Certificate]:
    """Constant certificate for a connected bipartite graph with unequal classes.

    Each component's first vertex lands in class A, so on disconnected graphs
    a certificate whose per-component imbalances cancel under another
    coloring is not found.
    """
    parts = bipartition(graph)
    if parts is None or len(parts.class_a) == len(parts.class_b):
        return None
    larger, smaller = sorted((parts.class_a, parts.class_b), key=len, reverse=True)
    c = Fraction(1, len(larger) - len(smaller))
    v1 = encode_perfect_matching_v1(graph)
    betas = []
    for tag in v1.tags:
        if tag.role == "vertex":
            betas.append(v1.table.const(-c if tag.items[0] in larger else c))
        else:
            betas.append(v1.table.zero())
    certificate = Certificate(tuple(betas))
    if not verify_certificate(v1, certificate):
        raise CertificateError("bipartite constant certificate does not verify")
    return certificate


# ---- diagnostics ----

@dataclass
class EdgeCondition:
    holds: bool
    witness: Optional[Tuple[Edge, Edge, Edge]] = None


def k_regular_edge_condition(graph: Graph, k: int, limits: OracleLimits = OracleLimits()) -> EdgeCondition:
    """Is some edge {i, j} of a maximum k-regular subgraph flanked by edges
    {i, l1} and {l2, j} that lie in no maximum k-regular subgraph?"""
    family = enum_k_regular_subgraphs(graph, k, limits)
    top = max_structure_size(family)
    maximum = [member for member in family.members if len(member) == top]
    used = set().union(*maximum) if maximum else set()
    unused = [graph.edges[j] for j in range(graph.edge_count) if j not in used]
    for j in sorted(used):
        i, w = graph.edges[j]
        left = next((e for e in unused if i in e), None)
        right = next((e for e in unused if w in e and e != left), None)
        if left is not None and right is not None:
            return EdgeCondition(True, (graph.edges[j], left, right))
    return EdgeCondition(False)


def coefficient_sign(beta: Polynomial) -> str:
    signs = {coeff > 0 for _, coeff in beta.items()}
    if signs == {True}:
        return "positive"
    if signs == {False}:
        return "negative"
    return "mixed" if signs else "none"


# ---- analysis report ----

@dataclass
class AnalysisRow:
    structure: str
    monomial: str
    coefficient: str


@dataclass
class Claim:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AnalysisReport:
    problem: str
    kind: str
    rows: List[AnalysisRow] = field(default_factory=list)
    summary: Dict[str, str] = field(default_factory=dict)
    claims: List[Claim] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    downgraded: bool = False

    @property
    def passed(self) -> bool:
        return all(claim.passed for claim in self.claims)

    def to_text(self) -> str:
        lines = [f"problem: {self.problem}  kind: {self.kind}"]
        if self.downgraded:
            lines.append("report downgraded: empirical data only")
        if self.rows:
            width = max(len(r.structure) for r in self.rows + [AnalysisRow("structure", "", "")])
            mono_width = max(len(r.monomial) for r in self.rows + [AnalysisRow("", "monomial", "")])
            lines.append(f"{'structure':<{width}}  {'monomial':<{mono_width}}  coefficient")
            for r in self.rows:
                lines.append(f"{r.structure:<{width}}  {r.monomial:<{mono_width}}  {r.coefficient}")
        for key, value in self.summary.items():
            lines.append(f"{key}: {value}")
        for note in self.notes:
            lines.append(f"note: {note}")
        for claim in self.claims:
            status = "PASS" if claim.passed else "FAIL"
            lines.append(f"{status} {claim.name}" + (f" ({claim.detail})" if claim.detail else ""))
        return "\n".join(lines) + "\n"


def _nulla_degree(report: AnalysisReport, system: PolySystem, bound: int, max_columns: int) -> Optional[int]:
    try:
        result = nulla_solve(system, bound, max_columns=max_columns)
    except ResourceRefusal as e:
        report.summary["nulla degree"] = "refused"
        report.notes.append(str(e))
        return None
    if not result.found:
        report.summary["nulla degree"] = f"none up to {bound}"
        return None
    report.summary["nulla degree"] = str(result.degree)
    return result.degree


def _analyze_matching_v1(system: PolySystem, report: AnalysisReport, bound: int,
                         limits: OracleLimits, max_columns: int) -> AnalysisReport:
    graph = system.graph
    fast = bipartite_degree_zero(graph)
    if fast is not None:
        report.summary["bipartite fast path"] = "yes"
        report.summary["degree"] = "0"
        for tag, beta in zip(system.tags, fast.betas):
            if tag.role == "vertex":
                report.rows.append(AnalysisRow(f"vertex {tag.items[0]}", "1", format_rational(beta.constant_term())))
        nulla_degree = _nulla_degree(report, system, 0, max_columns)
        report.claims.append(Claim("bipartite degree zero", nulla_degree == 0, f"nulla degree {nulla_degree}"))
        return report

    report.summary["bipartite fast path"] = "no"
    nulla_degree = _nulla_degree(report, system, bound, max_columns)
    if nulla_degree is not None and nulla_degree == 0:
        report.claims.append(Claim("no degree-zero certificate without unequal bipartition", False))
    n = graph.n
    if graph.edge_count == n * (n - 1) // 2 and n % 2 == 1 and nulla_degree is not None:
        report.claims.append(Claim("odd clique degree", nulla_degree == n // 2, f"expected {n // 2}"))
    if n % 2 == 0 and graph.edge_count:
        v2 = encode_perfect_matching_v2(graph)
        try:
            basis = structure_monomial_basis(v2, limits)
            c2 = complete_certificate(v2, invert_cardinality_form(v2, basis), max_columns=max_columns)
        except InfeasibilityError as e:
            report.notes.append(str(e))
            return report
        transformed = matching_transform(c2, graph)
        deltas, thetas = split_matching_certificate(transformed, system)
        top = max_structure_size(enum_matchings(graph, limits))
        delta_degree = max(d.degree for d in deltas.values())
        theta_degree = max((t.degree for t in thetas.values()), default=-1)
        report.summary["delta degree"] = str(delta_degree)
        report.summary["theta degree"] = str(theta_degree)
        report.summary["transformed degree"] = str(transformed.degree)
        report.claims.append(Claim("delta degree equals maximum matching size",
                                   all(d.degree == top for d in deltas.values()), f"max matching {top}"))
        present = all(d.coefficient(mono) != 0 for d in deltas.values() for mono in basis.monomials)
        report.claims.append(Claim("every matching monomial in every delta", present))
        report.claims.append(Claim("theta degree at most delta degree", theta_degree <= delta_degree))
    return report


def analyze(system: PolySystem, degree_bound: Optional[int] = None, limits: OracleLimits = OracleLimits(),
            max_columns: int = settings.MAX_COLUMNS) -> AnalysisReport:
    report = AnalysisReport(system.problem, system.kind.describe())
    bound = degree_bound if degree_bound is not None else default_degree_bound(system, limits)
    if system.problem == MATCHING_V1:
        return _analyze_matching_v1(system, report, bound, limits, max_columns)

    basis = structure_monomial_basis(system, limits)
    family = basis.family
    report.summary["family size"] = str(len(family))
    closure = is_subset_closed(family)
    if not closure:
        report.downgraded = True
        if closure.witness is not None:
            outer, inner = closure.witness
            report.notes.append(f"not subset closed: {family.format_member(outer)} present, "
                                f"{family.format_member(inner)} missing")
        else:
            report.notes.append("not subset closed: empty structure missing")
        if family.members:
            report.summary["max structure size"] = str(max_structure_size(family))
        if system.problem == KREGULAR:
            condition = k_regular_edge_condition(system.graph, system.kind.k, limits)
            report.summary["edge condition"] = "holds" if condition.holds else "fails"
            if condition.witness:
                report.notes.append("edge condition witness: " + ", ".join(f"{u}-{v}" for u, v in condition.witness))
        _nulla_degree(report, system, bound, max_columns)
        return report

    beta1 = invert_cardinality_form(system, basis)
    names = system.table.names
    for member, mono in zip(basis.members, basis.monomials):
        report.rows.append(AnalysisRow(family.format_member(member), mono_text(mono, names) or "1",
                                       format_rational(beta1.coefficient(mono))))
    support = set(beta1.monomials())
    equal = support == set(basis.monomials)
    sign = coefficient_sign(beta1)
    report.summary["support size"] = str(len(support))
    report.summary["equal"] = "yes" if equal else "no"
    report.summary["common sign"] = sign
    report.claims.append(Claim("support equals structure family", equal))
    report.claims.append(Claim("common sign", sign in ("positive", "negative"), sign))

    try:
        certificate = complete_certificate(system, beta1, max_columns=max_columns)
    except (CertificateError, ResourceRefusal) as e:
        report.notes.append(str(e))
        report.claims.append(Claim("completion verifies", False))
        return report
    report.summary["degree"] = str(certificate.degree)
    report.claims.append(Claim("completion verifies", True))

    nulla_degree = _nulla_degree(report, system, bound, max_columns)
    indicator_only = all(role != AUXILIARY for _, role in system.table.entries)
    if nulla_degree is not None and indicator_only:
        report.claims.append(Claim("degree match", nulla_degree == certificate.degree,
                                   f"{certificate.degree} vs {nulla_degree}"))
    elif not indicator_only:
        report.notes.append("degree match not asserted: system has auxiliary variables")
    return report
