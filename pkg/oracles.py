#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
oracles.py

Brute-force enumerators for every structure family the encoders model.
These are the ground truth certificates get checked against, so they stay
deliberately simple: exhaustive searches over subsets, colorings or vertex
maps, guarded by hard size limits.

Members are frozensets of 0-based ground indices: vertex i is index i-1,
edge j is the j-th edge of graph.edges.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import settings
from errors import OracleRefusal, StructuralError
from graphs import Graph

logger = logging.getLogger(__name__)

Member = FrozenSet[int]


class Structure(Enum):
    INDEPENDENT_SET = "IndependentSet"
    MATCHING = "Matching"
    K_COLORABLE = "KColorableSubgraph"
    HOMOMORPHIC = "HomomorphicSubgraph"
    REGULAR = "RegularSpanningSubgraph"
    K_REGULAR = "KRegularSubgraph"
    VERTEX_COVER = "VertexCover"
    EDGE_COVER = "EdgeCover"
    CAGE_FREE = "CageFreeSubgraph"
    EDGE_COLORABLE = "EdgeColorableSubgraph"


VERTEX_STRUCTURES = {Structure.INDEPENDENT_SET, Structure.VERTEX_COVER}


@dataclass(frozen=True)
class StructureKind:
    structure: Structure
    k: Optional[int] = None
    target: Optional[Graph] = None

    @property
    def over_vertices(self) -> bool:
        return self.structure in VERTEX_STRUCTURES

    def describe(self) -> str:
        text = self.structure.value
        if self.k is not None:
            text += f"(k={self.k})"
        if self.target is not None:
            text += f"(H: {self.target.n} vertices, {self.target.edge_count} edges)"
        return text


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = settings.MAX_VERTICES
    max_edges: int = settings.MAX_EDGES
    max_assignments: int = settings.MAX_ASSIGNMENTS


@dataclass(frozen=True)
class StructureFamily:
    ground: Tuple[str, ...]
    members: FrozenSet[Member]
    kind: Optional[StructureKind] = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, member) -> bool:
        return frozenset(member) in self.members

    def sorted_members(self) -> List[Member]:
        return sorted(self.members, key=lambda s: (len(s), sorted(s)))

    def format_member(self, member: Member) -> str:
        return "{" + ", ".join(self.ground[i] for i in sorted(member)) + "}"


@dataclass(frozen=True)
class ClosureCheck:
    closed: bool
    witness: Optional[Tuple[Member, Member]] = None

    def __bool__(self) -> bool:
        return self.closed


# ---- helpers ----

def vertex_labels(graph: Graph) -> Tuple[str, ...]:
    return tuple(f"x{v}" for v in graph.vertices)


def edge_labels(graph: Graph) -> Tuple[str, ...]:
    return tuple(f"x{u}_{v}" for u, v in graph.edges)


def _guard(name: str, value: int, actual: int) -> None:
    if actual > value:
        raise OracleRefusal(name, value, actual)


def _guard_vertices(graph: Graph, limits: OracleLimits) -> None:
    _guard("max_vertices", limits.max_vertices, graph.n)


def _guard_edges(graph: Graph, limits: OracleLimits) -> None:
    _guard("max_edges", limits.max_edges, graph.edge_count)


def _bits(mask: int) -> Member:
    members = []
    i = 0
    while mask:
        if mask & 1:
            members.append(i)
        mask >>= 1
        i += 1
    return frozenset(members)


def _incidence(graph: Graph) -> List[int]:
    """Per vertex (0-based), the mask of incident edges."""
    masks = [0] * graph.n
    for j, (u, v) in enumerate(graph.edges):
        masks[u - 1] |= 1 << j
        masks[v - 1] |= 1 << j
    return masks


def _conflict_free(count: int, conflicts: List[int]) -> List[int]:
    """All masks over `count` elements containing no conflicting pair."""
    found: List[int] = []

    def grow(i: int, mask: int, blocked: int) -> None:
        if i == count:
            found.append(mask)
            return
        grow(i + 1, mask, blocked)
        if not blocked >> i & 1:
            grow(i + 1, mask | 1 << i, blocked | conflicts[i])

    grow(0, 0, 0)
    return found


def _downsets(maximal: Iterable[int]) -> Set[int]:
    closed: Set[int] = set()
    for top in set(maximal):
        if top in closed:
            continue
        sub = top
        while True:
            closed.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & top
    return closed


def _filtered(count: int, keep: Callable[[int], bool]) -> List[int]:
    return [mask for mask in range(1 << count) if keep(mask)]


def _family(labels: Tuple[str, ...], masks: Iterable[int], kind: StructureKind) -> StructureFamily:
    members = frozenset(_bits(mask) for mask in masks)
    logger.info("enumerated %d members of %s", len(members), kind.describe())
    return StructureFamily(labels, members, kind)


# ---- enumerators ----

def enum_independent_sets(graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    _guard_vertices(graph, limits)
    conflicts = [0] * graph.n
    for u, v in graph.edges:
        conflicts[u - 1] |= 1 << (v - 1)
        conflicts[v - 1] |= 1 << (u - 1)
    masks = _conflict_free(graph.n, conflicts)
    return _family(vertex_labels(graph), masks, StructureKind(Structure.INDEPENDENT_SET))


def _matching_masks(graph: Graph) -> List[int]:
    incidence = _incidence(graph)
    conflicts = []
    for j, (u, v) in enumerate(graph.edges):
        conflicts.append((incidence[u - 1] | incidence[v - 1]) & ~(1 << j))
    return _conflict_free(graph.edge_count, conflicts)


def enum_matchings(graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    _guard_edges(graph, limits)
    return _family(edge_labels(graph), _matching_masks(graph), StructureKind(Structure.MATCHING))


def _map_masks(graph: Graph, colors: int, allowed: Callable[[int, int], bool], limits: OracleLimits) -> Set[int]:
    """Edge masks kept by some vertex map into `colors` values."""
    _guard("max_assignments", limits.max_assignments, colors ** graph.n)
    tops = set()
    for assignment in product(range(colors), repeat=graph.n):
        mask = 0
        for j, (u, v) in enumerate(graph.edges):
            if allowed(assignment[u - 1], assignment[v - 1]):
                mask |= 1 << j
        tops.add(mask)
    return _downsets(tops)


def enum_k_colorable_subgraphs(graph: Graph, k: int, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    if k is None or k < 1:
        raise StructuralError("k must be at least 1")
    _guard_edges(graph, limits)
    masks = _map_masks(graph, k, lambda a, b: a != b, limits)
    return _family(edge_labels(graph), masks, StructureKind(Structure.K_COLORABLE, k=k))


def enum_homomorphic_subgraphs(graph: Graph, target: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    if target is None or target.n == 0:
        raise StructuralError("target graph needs at least one vertex")
    _guard_edges(graph, limits)
    masks = _map_masks(graph, target.n, lambda a, b: target.has_edge(a + 1, b + 1), limits)
    return _family(edge_labels(graph), masks, StructureKind(Structure.HOMOMORPHIC, target=target))


def _degrees(incidence: List[int], mask: int) -> List[int]:
    return [bin(inc & mask).count("1") for inc in incidence]


def enum_regular_subgraphs(graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    _guard_edges(graph, limits)
    incidence = _incidence(graph)
    masks = _filtered(graph.edge_count, lambda mask: len(set(_degrees(incidence, mask))) <= 1)
    return _family(edge_labels(graph), masks, StructureKind(Structure.REGULAR))


def enum_k_regular_subgraphs(graph: Graph, k: int, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    if k is None or k < 1:
        raise StructuralError("k must be at least 1")
    _guard_edges(graph, limits)
    incidence = _incidence(graph)
    masks = _filtered(graph.edge_count, lambda mask: all(d in (0, k) for d in _degrees(incidence, mask)))
    return _family(edge_labels(graph), masks, StructureKind(Structure.K_REGULAR, k=k))


def enum_vertex_covers(graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    _guard_vertices(graph, limits)
    edges = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in graph.edges]
    masks = _filtered(graph.n, lambda mask: all(mask & edge for edge in edges))
    return _family(vertex_labels(graph), masks, StructureKind(Structure.VERTEX_COVER))


def enum_edge_covers(graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    _guard_edges(graph, limits)
    incidence = _incidence(graph)
    masks = _filtered(graph.edge_count, lambda mask: all(mask & inc for inc in incidence))
    return _family(edge_labels(graph), masks, StructureKind(Structure.EDGE_COVER))


def enum_cagefree_subgraphs(graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    _guard_edges(graph, limits)
    incidence = _incidence(graph)
    masks = _filtered(graph.edge_count, lambda mask: all(inc & ~mask for inc in incidence))
    return _family(edge_labels(graph), masks, StructureKind(Structure.CAGE_FREE))


def enum_edge_colorable_subgraphs(graph: Graph, k: int, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    """Edge subsets admitting a proper k-edge-coloring, i.e. unions of k matchings."""
    if k is None or k < 1:
        raise StructuralError("k must be at least 1")
    _guard_edges(graph, limits)
    matchings = _matching_masks(graph)
    unions = {0}
    for _ in range(k):
        unions = {base | m for base in unions for m in matchings}
    return _family(edge_labels(graph), unions, StructureKind(Structure.EDGE_COLORABLE, k=k))


def enumerate_family(kind: StructureKind, graph: Graph, limits: OracleLimits = OracleLimits()) -> StructureFamily:
    structure = kind.structure
    if structure is Structure.INDEPENDENT_SET:
        return enum_independent_sets(graph, limits)
    if structure is Structure.MATCHING:
        return enum_matchings(graph, limits)
    if structure is Structure.K_COLORABLE:
        return enum_k_colorable_subgraphs(graph, kind.k, limits)
    if structure is Structure.HOMOMORPHIC:
        return enum_homomorphic_subgraphs(graph, kind.target, limits)
    if structure is Structure.REGULAR:
        return enum_regular_subgraphs(graph, limits)
    if structure is Structure.K_REGULAR:
        return enum_k_regular_subgraphs(graph, kind.k, limits)
    if structure is Structure.VERTEX_COVER:
        return enum_vertex_covers(graph, limits)
    if structure is Structure.EDGE_COVER:
        return enum_edge_covers(graph, limits)
    if structure is Structure.CAGE_FREE:
        return enum_cagefree_subgraphs(graph, limits)
    if structure is Structure.EDGE_COLORABLE:
        return enum_edge_colorable_subgraphs(graph, kind.k, limits)
    raise StructuralError(f"no oracle for {structure}")


# ---- family queries ----

def is_subset_closed(family: StructureFamily) -> ClosureCheck:
    if frozenset() not in family.members:
        smallest = family.sorted_members()
        if not smallest:
            return ClosureCheck(False, None)
        outer = smallest[0]
        return ClosureCheck(False, (outer, outer - {min(outer)}))
    for member in family.sorted_members():
        for i in sorted(member):
            inner = member - {i}
            if inner not in family.members:
                return ClosureCheck(False, (member, inner))
    return ClosureCheck(True)


def max_structure_size(family: StructureFamily) -> int:
    if not family.members:
        raise StructuralError("empty structure family")
    return max(len(member) for member in family.members)


def size_counts(family: StructureFamily) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for member in family.members:
        counts[len(member)] = counts.get(len(member), 0) + 1
    return dict(sorted(counts.items()))
