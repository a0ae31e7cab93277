#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
graphs.py

Finite simple graphs on vertices 1..n, the two text formats they are read
from, and the structure queries the encoders and oracles need.

Edge list format:   first line "n m", then m lines "u v"
DIMACS format:      "c ..." comments, one "p edge n m" line, then "e u v" lines
"""

import logging
import os
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from errors import GraphParseError, StructuralError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

DIMACS_EXTENSIONS = (".dimacs", ".col")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Edge, ...]
    _adjacency: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise StructuralError("vertex count must be nonnegative")
        seen = set()
        adjacency: List[set] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise StructuralError(f"edge {u}-{v} outside 1..{self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise StructuralError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adjacency[u].add(v)
            adjacency[v].add(u)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adjacency", tuple(frozenset(a) for a in adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, tuple(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        if not 1 <= v <= self.n:
            raise StructuralError(f"vertex {v} outside 1..{self.n}")
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def incident_edges(self, v: int) -> List[Edge]:
        return [(min(v, w), max(v, w)) for w in sorted(self.neighbors(v))]

    def edge_index(self) -> Dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return 1 <= u <= self.n and v in self._adjacency[u]


@dataclass(frozen=True)
class Bipartition:
    class_a: FrozenSet[int]
    class_b: FrozenSet[int]


# ---- parsing ----

def _int_fields(parts: List[str], line_no: int) -> List[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(parts)!r}", line_no) from None


def _build(n: int, edges: List[Tuple[int, int, int]]) -> Graph:
    seen = set()
    for u, v, line_no in edges:
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line_no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"vertex out of range 1..{n} in edge {u} {v}", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key[0]} {key[1]}", line_no)
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def parse_edge_list(text: str) -> Graph:
    rows = [(i, line.split()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not rows:
        raise GraphParseError("empty input", 1)
    header_no, header = rows[0]
    if len(header) != 2:
        raise GraphParseError("header must be 'n m'", header_no)
    n, m = _int_fields(header, header_no)
    if n < 0 or m < 0:
        raise GraphParseError("negative counts in header", header_no)
    edges = []
    for line_no, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphParseError("edge line must be 'u v'", line_no)
        u, v = _int_fields(parts, line_no)
        edges.append((u, v, line_no))
    if len(edges) != m:
        last = rows[-1][0]
        raise GraphParseError(f"header announces {m} edges, found {len(edges)}", last)
    return _build(n, edges)


def parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    m = 0
    edges = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("second problem line", line_no)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphParseError("problem line must be 'p edge n m'", line_no)
            n, m = _int_fields(parts[2:], line_no)
            if n < 0 or m < 0:
                raise GraphParseError("negative counts in problem line", line_no)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", line_no)
            if len(parts) != 3:
                raise GraphParseError("edge line must be 'e u v'", line_no)
            u, v = _int_fields(parts[1:], line_no)
            edges.append((u, v, line_no))
        else:
            raise GraphParseError(f"unknown line type {parts[0]!r}", line_no)
    if n is None:
        raise GraphParseError("missing problem line 'p edge n m'")
    if len(edges) != m:
        logger.warning("DIMACS header announces %d edges, found %d", m, len(edges))
    return _build(n, edges)


def serialize_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def serialize_dimacs(graph: Graph) -> str:
    lines = [f"p edge {graph.n} {graph.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str, fmt: Optional[str] = None) -> Graph:
    """Read a graph file; format is guessed from the extension when not given."""
    if fmt is None:
        fmt = "dimacs" if os.path.splitext(path)[1].lower() in DIMACS_EXTENSIONS else "edgelist"
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphParseError(f"unknown graph format {fmt!r}")


# ---- queries ----

def neighbors(graph: Graph, v: int) -> FrozenSet[int]:
    return graph.neighbors(v)


def bipartition(graph: Graph) -> Optional[Bipartition]:
    """Two-coloring by BFS; each component's lowest vertex is colored A."""
    color: Dict[int, int] = {}
    for root in graph.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(graph.neighbors(v)):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    class_a = frozenset(v for v, c in color.items() if c == 0)
    class_b = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(class_a, class_b)


def line_graph(graph: Graph) -> Tuple[Graph, Tuple[Edge, ...]]:
    """Line graph plus the map from its vertex i+1 to the i-th edge of G."""
    edge_map = graph.edges
    l_edges = []
    for i, j in combinations(range(len(edge_map)), 2):
        if set(edge_map[i]) & set(edge_map[j]):
            l_edges.append((i + 1, j + 1))
    return Graph(len(edge_map), tuple(l_edges)), edge_map


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == graph.n


# ---- named graphs ----

def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise StructuralError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center numbered 1."""
    return Graph(leaves + 1, tuple((1, v) for v in range(2, leaves + 2)))


def _canonical(n: int, edges: Tuple[Edge, ...]) -> Tuple[Edge, ...]:
    best = None
    for perm in permutations(range(1, n + 1)):
        relabeled = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


def nonisomorphic_graphs(n: int) -> List[Graph]:
    """One representative per isomorphism class of graphs on n vertices."""
    if n > 6:
        raise StructuralError("isomorphism sweep limited to 6 vertices")
    pairs = list(combinations(range(1, n + 1), 2))
    found = set()
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        found.add(_canonical(n, edges))
    ordered = sorted(found, key=lambda edges: (len(edges), edges))
    return [Graph(n, edges) for edges in ordered]
