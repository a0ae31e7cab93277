#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
encoders.py

Polynomial systems for graph decision problems. Each encoder returns a
PolySystem whose equation order is fixed (certificate files index the
coefficient polynomials by position):

  indset       Boolean(v)..., edge(u,v)..., cardinality
  kcolor       cardinality, Boolean(e)..., root(v)..., mixed(e)...
  edgecolor    cardinality, Boolean(e)..., edge_power(e)..., inverse(v)...
  hom          cardinality, Boolean(e)..., vertex_assign(v)..., edge_assign(e)..., label(h)...
  regular      cardinality, Boolean(e)..., degree_equal(v, w)...
  kregular     cardinality, Boolean(e)..., degree(v)...
  vcover       Boolean(v)..., edge(u,v) or cover(u,v)..., cardinality
  ecover       cardinality, Boolean(e)..., cage(v) or covered(v)...
  matching-v1  vertex(v)..., pair(v, j, k)...
  matching-v2  Boolean(e)..., adjacent(e, f)..., cardinality

Variables are named x{v} / y{v} for vertices and x{u}_{v} / y{u}_{v} for edges
(u < v); indicator variables come first in every table.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from errors import EncodingError, FormatError, StructuralError
from formats import (SystemFile, TagModel, VariableModel, content_hash, dump_model,
                     load_model, polynomial_to_terms, terms_to_polynomial)
from graphs import Graph, line_graph
from oracles import Structure, StructureKind
from poly import AUXILIARY, INDICATOR, Polynomial, VariableTable, product

logger = logging.getLogger(__name__)

INDSET = "indset"
KCOLOR = "kcolor"
EDGECOLOR = "edgecolor"
HOM = "hom"
REGULAR = "regular"
KREGULAR = "kregular"
VCOVER = "vcover"
ECOVER = "ecover"
MATCHING_V1 = "matching-v1"
MATCHING_V2 = "matching-v2"

PROBLEMS = (INDSET, KCOLOR, EDGECOLOR, HOM, REGULAR, KREGULAR, VCOVER, ECOVER, MATCHING_V1, MATCHING_V2)

SUBSET = "subset"
ORIGINAL = "original"


@dataclass(frozen=True)
class EquationTag:
    role: str
    items: Tuple[int, ...] = ()

    def label(self) -> str:
        if not self.items:
            return self.role
        return f"{self.role}({','.join(str(i) for i in self.items)})"


@dataclass(frozen=True, eq=False)
class PolySystem:
    problem: str
    table: VariableTable
    polys: Tuple[Polynomial, ...]
    tags: Tuple[EquationTag, ...]
    kind: StructureKind
    graph: Graph
    indicator_ids: Tuple[int, ...]
    cardinality_index: Optional[int] = None
    m: Optional[int] = None
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.tags) != len(self.polys):
            raise StructuralError("every equation needs a tag")
        for p in self.polys:
            if p.table != self.table:
                raise StructuralError("equation over a foreign variable table")
        for var in self.indicator_ids:
            if self.table.role(var) != INDICATOR:
                raise StructuralError(f"{self.table.name(var)} is not an indicator variable")
        if self.cardinality_index is not None:
            expected = cardinality_form(self.table, self.indicator_ids, self.m)
            if self.polys[self.cardinality_index] != expected:
                raise StructuralError("cardinality equation is not -m + sum of indicators")

    # ---- shape ----

    @property
    def size(self) -> int:
        return len(self.polys)

    @property
    def n_vars(self) -> int:
        return self.table.size

    def max_degree(self) -> int:
        return max((p.degree for p in self.polys), default=0)

    def cardinality(self) -> Optional[Polynomial]:
        if self.cardinality_index is None:
            return None
        return self.polys[self.cardinality_index]

    def label(self, i: int) -> str:
        return self.tags[i].label()

    def indices_with_role(self, role: str) -> List[int]:
        return [i for i, tag in enumerate(self.tags) if tag.role == role]

    def target_size(self) -> Optional[int]:
        """Structure size whose existence makes the system feasible."""
        if self.cardinality_index is not None:
            return self.m
        if self.problem == MATCHING_V1 and self.graph.n % 2 == 0:
            return self.graph.n // 2
        return None

    # ---- files ----

    def to_model(self) -> SystemFile:
        return SystemFile(
            problem=self.problem,
            kind=self.kind.structure.value,
            variables=[VariableModel(name=name, role=role) for name, role in self.table.entries],
            polys=[polynomial_to_terms(p) for p in self.polys],
            tags=[TagModel(role=tag.role, items=list(tag.items)) for tag in self.tags],
            cardinality_index=self.cardinality_index,
            m=self.m,
            params=self.params,
        )

    def to_json(self) -> str:
        return dump_model(self.to_model())

    def system_hash(self) -> str:
        return content_hash(self.to_json())

    @classmethod
    def from_json(cls, text: str) -> "PolySystem":
        return cls.from_model(load_model(SystemFile, text))

    @classmethod
    def from_model(cls, model: SystemFile) -> "PolySystem":
        try:
            table = VariableTable(tuple((v.name, v.role) for v in model.variables))
            polys = tuple(terms_to_polynomial(terms, table) for terms in model.polys)
            tags = tuple(EquationTag(t.role, tuple(t.items)) for t in model.tags)
            graph = _graph_from_param(model.params.get("graph"))
            target = _graph_from_param(model.params.get("target")) if "target" in model.params else None
            kind = StructureKind(Structure(model.kind), k=model.params.get("k"), target=target)
            if model.problem == EDGECOLOR:
                kind = StructureKind(Structure.EDGE_COLORABLE, k=max(graph.max_degree(), 1))
            return cls(
                problem=model.problem,
                table=table,
                polys=polys,
                tags=tags,
                kind=kind,
                graph=graph,
                indicator_ids=table.indicator_ids(),
                cardinality_index=model.cardinality_index,
                m=model.m,
                params=model.params,
            )
        except (KeyError, TypeError, ValueError, StructuralError) as e:
            raise FormatError(f"inconsistent system file: {e}") from e


# ---- building blocks ----

def _graph_param(graph: Graph) -> Dict[str, Any]:
    return {"n": graph.n, "edges": [list(edge) for edge in graph.edges]}


def _graph_from_param(data: Any) -> Graph:
    if not isinstance(data, dict):
        raise FormatError("system file lacks its graph")
    return Graph(int(data["n"]), tuple(tuple(edge) for edge in data["edges"]))


def vertex_names(graph: Graph, prefix: str) -> List[str]:
    return [f"{prefix}{v}" for v in graph.vertices]


def edge_names(graph: Graph, prefix: str) -> List[str]:
    return [f"{prefix}{u}_{v}" for u, v in graph.edges]


def cardinality_form(table: VariableTable, indicator_ids: Tuple[int, ...], m: int) -> Polynomial:
    """-m + sum of the indicator variables, constant first."""
    total = table.const(-m)
    for var in indicator_ids:
        total = total + table.var(var)
    return total


def boolean(table: VariableTable, var: int) -> Polynomial:
    x = table.var(var)
    return x * x - x


def _incident_sum(graph: Graph, table: VariableTable, v: int, offset: int = 0) -> Polynomial:
    index = graph.edge_index()
    total = table.zero()
    for edge in graph.incident_edges(v):
        total = total + table.var(offset + index[edge])
    return total


def _check_m(m: int, upper: Optional[int] = None, what: str = "") -> None:
    if m is None or m < 0:
        raise EncodingError("m must be a nonnegative integer")
    if upper is not None and m > upper:
        raise EncodingError(f"m={m} exceeds {what} ({upper})")


def _system(problem: str, graph: Graph, table: VariableTable, equations: List[Tuple[Polynomial, EquationTag]],
            kind: StructureKind, indicator_count: int, m: Optional[int], params: Dict[str, Any]) -> PolySystem:
    polys = tuple(p for p, _ in equations)
    tags = tuple(t for _, t in equations)
    card = next((i for i, t in enumerate(tags) if t.role == "cardinality"), None)
    params = dict(params, graph=_graph_param(graph))
    system = PolySystem(
        problem=problem,
        table=table,
        polys=polys,
        tags=tags,
        kind=kind,
        graph=graph,
        indicator_ids=tuple(range(indicator_count)),
        cardinality_index=card,
        m=m if card is not None else None,
        params=params,
    )
    logger.info("encoded %s: %d variables, %d equations", problem, table.size, len(polys))
    return system


def _independent_set_shape(problem: str, graph: Graph, prefix: str, m: int, kind: StructureKind,
                            params: Dict[str, Any], edge_rule=None) -> PolySystem:
    table = VariableTable.build(vertex_names(graph, prefix))
    x = [table.var(i) for i in range(graph.n)]
    equations = [(boolean(table, i), EquationTag("boolean", (v,))) for i, v in enumerate(graph.vertices)]
    for u, v in graph.edges:
        if edge_rule is None:
            equations.append((x[u - 1] * x[v - 1], EquationTag("edge", (u, v))))
        else:
            equations.append(edge_rule(x[u - 1], x[v - 1], u, v))
    equations.append((cardinality_form(table, tuple(range(graph.n)), m), EquationTag("cardinality")))
    return _system(problem, graph, table, equations, kind, graph.n, m, params)


# ---- encoders ----

def encode_independent_set(graph: Graph, m: int) -> PolySystem:
    _check_m(m)
    return _independent_set_shape(INDSET, graph, "x", m, StructureKind(Structure.INDEPENDENT_SET), {"m": m})


def encode_k_colorable_subgraph(graph: Graph, k: int, m: int) -> PolySystem:
    if k is None or k < 1:
        raise EncodingError("k must be at least 1")
    _check_m(m)
    table = VariableTable.build(edge_names(graph, "y")).extended(vertex_names(graph, "x"), AUXILIARY)
    e = graph.edge_count
    y = [table.var(j) for j in range(e)]
    x = [table.var(e + i) for i in range(graph.n)]
    equations = [(cardinality_form(table, tuple(range(e)), m), EquationTag("cardinality"))]
    equations += [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    equations += [(x[v - 1] ** k - 1, EquationTag("root", (v,))) for v in graph.vertices]
    for j, (u, v) in enumerate(graph.edges):
        mixed = table.zero()
        for a in range(k):
            mixed = mixed + x[u - 1] ** (k - 1 - a) * x[v - 1] ** a
        equations.append((y[j] * mixed, EquationTag("mixed", (u, v))))
    kind = StructureKind(Structure.K_COLORABLE, k=k)
    return _system(KCOLOR, graph, table, equations, kind, e, m, {"m": m, "k": k})


def encode_edge_chromatic(graph: Graph, m: int) -> PolySystem:
    _check_m(m)
    delta = graph.max_degree()
    hubs = [v for v in graph.vertices if graph.degree(v) >= 2]
    table = (VariableTable.build(edge_names(graph, "y"))
             .extended(edge_names(graph, "x"), AUXILIARY)
             .extended([f"s{v}" for v in hubs], AUXILIARY))
    e = graph.edge_count
    index = graph.edge_index()
    y = [table.var(j) for j in range(e)]
    x = [table.var(e + j) for j in range(e)]
    equations = [(cardinality_form(table, tuple(range(e)), m), EquationTag("cardinality"))]
    equations += [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    equations += [(y[j] * (x[j] ** delta - 1), EquationTag("edge_power", edge)) for j, edge in enumerate(graph.edges)]
    for h, v in enumerate(hubs):
        incident = [index[edge] for edge in graph.incident_edges(v)]
        differences = [x[a] - x[b] for a, b in combinations(incident, 2)]
        s = table.var(2 * e + h)
        equations.append((s * product(differences, table) - 1, EquationTag("inverse", (v,))))
    kind = StructureKind(Structure.EDGE_COLORABLE, k=max(delta, 1))
    return _system(EDGECOLOR, graph, table, equations, kind, e, m, {"m": m})


def homomorphism_label(v: int) -> int:
    """Pinned value of the target-vertex variable x_v; pairwise sums stay distinct."""
    return 2 ** (v - 1)


def encode_graph_homomorphism(graph: Graph, target: Graph, m: int) -> PolySystem:
    if target.n == 0:
        raise EncodingError("target graph needs at least one vertex")
    _check_m(m)
    table = (VariableTable.build(edge_names(graph, "y"))
             .extended(vertex_names(graph, "z"), AUXILIARY)
             .extended(vertex_names(target, "x"), AUXILIARY))
    e = graph.edge_count
    y = [table.var(j) for j in range(e)]
    z = [table.var(e + i) for i in range(graph.n)]
    labels = [table.var(e + graph.n + i) for i in range(target.n)]
    equations = [(cardinality_form(table, tuple(range(e)), m), EquationTag("cardinality"))]
    equations += [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    for v in graph.vertices:
        choices = product([z[v - 1] - label for label in labels], table)
        equations.append((_incident_sum(graph, table, v) * choices, EquationTag("vertex_assign", (v,))))
    for j, (u, v) in enumerate(graph.edges):
        targets = [z[u - 1] + z[v - 1] - labels[a - 1] - labels[b - 1] for a, b in target.edges]
        equations.append((y[j] * product(targets, table), EquationTag("edge_assign", (u, v))))
    for h in target.vertices:
        equations.append((labels[h - 1] - homomorphism_label(h), EquationTag("label", (h,))))
    kind = StructureKind(Structure.HOMOMORPHIC, target=target)
    return _system(HOM, graph, table, equations, kind, e, m, {"m": m, "target": _graph_param(target)})


def encode_regular_spanning_subgraph(graph: Graph, m: int, all_pairs: bool = False) -> PolySystem:
    _check_m(m)
    table = VariableTable.build(edge_names(graph, "y"))
    e = graph.edge_count
    equations = [(cardinality_form(table, tuple(range(e)), m), EquationTag("cardinality"))]
    equations += [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    degree = {v: _incident_sum(graph, table, v) for v in graph.vertices}
    if all_pairs:
        pairs = list(combinations(graph.vertices, 2))
    else:
        pairs = [(v, v + 1) for v in range(1, graph.n)]
    for v, w in pairs:
        equations.append((degree[v] - degree[w], EquationTag("degree_equal", (v, w))))
    kind = StructureKind(Structure.REGULAR)
    return _system(REGULAR, graph, table, equations, kind, e, m, {"m": m, "all_pairs": all_pairs})


def encode_k_regular_subgraph(graph: Graph, k: int, m: int) -> PolySystem:
    if k is None or k < 1:
        raise EncodingError("k must be at least 1")
    _check_m(m)
    table = VariableTable.build(edge_names(graph, "y"))
    e = graph.edge_count
    equations = [(cardinality_form(table, tuple(range(e)), m), EquationTag("cardinality"))]
    equations += [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    for v in graph.vertices:
        d = _incident_sum(graph, table, v)
        equations.append((d * (d - k), EquationTag("degree", (v,))))
    kind = StructureKind(Structure.K_REGULAR, k=k)
    return _system(KREGULAR, graph, table, equations, kind, e, m, {"m": m, "k": k})


def encode_vertex_cover(graph: Graph, m: int, form: str = SUBSET) -> PolySystem:
    _check_m(m, graph.n, "vertex count")
    params = {"m": m, "form": form}
    if form == SUBSET:
        kind = StructureKind(Structure.INDEPENDENT_SET)
        return _independent_set_shape(VCOVER, graph, "y", graph.n - m, kind, params)
    if form == ORIGINAL:
        def cover(xu, xv, u, v):
            return ((xu - 1) * (xv - 1), EquationTag("cover", (u, v)))
        kind = StructureKind(Structure.VERTEX_COVER)
        return _independent_set_shape(VCOVER, graph, "x", m, kind, params, edge_rule=cover)
    raise EncodingError(f"unknown form {form!r}")


def encode_edge_cover(graph: Graph, m: int, form: str = SUBSET) -> PolySystem:
    e = graph.edge_count
    _check_m(m, e, "edge count")
    if form not in (SUBSET, ORIGINAL):
        raise EncodingError(f"unknown form {form!r}")
    subset = form == SUBSET
    table = VariableTable.build(edge_names(graph, "y" if subset else "x"))
    index = graph.edge_index()
    target = e - m if subset else m
    equations = [(cardinality_form(table, tuple(range(e)), target), EquationTag("cardinality"))]
    equations += [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    for v in graph.vertices:
        incident = [table.var(index[edge]) for edge in graph.incident_edges(v)]
        if subset:
            equations.append((product(incident, table), EquationTag("cage", (v,))))
        else:
            equations.append((product([y - 1 for y in incident], table), EquationTag("covered", (v,))))
    kind = StructureKind(Structure.CAGE_FREE if subset else Structure.EDGE_COVER)
    return _system(ECOVER, graph, table, equations, kind, e, target, {"m": m, "form": form})


def encode_perfect_matching_v1(graph: Graph) -> PolySystem:
    table = VariableTable.build(edge_names(graph, "x"))
    index = graph.edge_index()
    equations = [(_incident_sum(graph, table, v) - 1, EquationTag("vertex", (v,))) for v in graph.vertices]
    for v in graph.vertices:
        for a, b in combinations(sorted(graph.neighbors(v)), 2):
            e1 = index[(min(v, a), max(v, a))]
            e2 = index[(min(v, b), max(v, b))]
            equations.append((table.var(e1) * table.var(e2), EquationTag("pair", (v, a, b))))
    kind = StructureKind(Structure.MATCHING)
    return _system(MATCHING_V1, graph, table, equations, kind, graph.edge_count, None, {})


def encode_perfect_matching_v2(graph: Graph) -> PolySystem:
    if graph.n % 2:
        raise EncodingError(f"matching-v2 needs an even vertex count (got {graph.n}); use matching-v1")
    table = VariableTable.build(edge_names(graph, "x"))
    lgraph, _ = line_graph(graph)
    x = [table.var(j) for j in range(graph.edge_count)]
    equations = [(boolean(table, j), EquationTag("boolean", edge)) for j, edge in enumerate(graph.edges)]
    equations += [(x[a - 1] * x[b - 1], EquationTag("adjacent", (a - 1, b - 1))) for a, b in lgraph.edges]
    m = graph.n // 2
    equations.append((cardinality_form(table, tuple(range(graph.edge_count)), m), EquationTag("cardinality")))
    kind = StructureKind(Structure.MATCHING)
    return _system(MATCHING_V2, graph, table, equations, kind, graph.edge_count, m, {})


def encode(problem: str, graph: Graph, m: Optional[int] = None, k: Optional[int] = None,
           target: Optional[Graph] = None, form: str = SUBSET, all_pairs: bool = False) -> PolySystem:
    """Dispatch on the CLI problem name."""
    if problem == INDSET:
        return encode_independent_set(graph, m)
    if problem == KCOLOR:
        return encode_k_colorable_subgraph(graph, k, m)
    if problem == EDGECOLOR:
        return encode_edge_chromatic(graph, m)
    if problem == HOM:
        if target is None:
            raise EncodingError("hom needs a target graph")
        return encode_graph_homomorphism(graph, target, m)
    if problem == REGULAR:
        return encode_regular_spanning_subgraph(graph, m, all_pairs=all_pairs)
    if problem == KREGULAR:
        return encode_k_regular_subgraph(graph, k, m)
    if problem == VCOVER:
        return encode_vertex_cover(graph, m, form)
    if problem == ECOVER:
        return encode_edge_cover(graph, m, form)
    if problem == MATCHING_V1:
        return encode_perfect_matching_v1(graph)
    if problem == MATCHING_V2:
        return encode_perfect_matching_v2(graph)
    raise EncodingError(f"unknown problem {problem!r}")
