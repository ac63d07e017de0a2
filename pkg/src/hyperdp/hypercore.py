"""Hypergraph data model, validation and structural classification.

Vertices are the integers ``0..n-1``.  Edges are kept as strictly ascending
tuples and their position in ``Hypergraph.edges`` is a persistent identity:
covers, boundary profiles and the search code all address edges by index.

Cycles are Berge cycles (distinct edges linked by distinct vertices).  They
are only detected for linear hypergraphs, where every cycle of the bipartite
vertex/edge incidence graph is such a cycle, so the number of independent
cycles is the cycle rank of that incidence graph.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import (
    DuplicateEdge,
    EdgeContainment,
    EdgeTooSmall,
    EmptyVertexSet,
    IndexOutOfRange,
    InvalidHypergraph,
    OutOfRangeVertex,
)

FOREST = "forest"
HYPERTREE = "hypertree"
UNICYCLIC = "unicyclic"
MULTICYCLIC = "multicyclic"
NONLINEAR = "nonlinear-unclassified"


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph on vertices ``0..n-1``.

    Construction validates: every edge has at least two vertices in range,
    no edge repeats and no edge contains another.  Edges are sorted
    internally; their order in the list is preserved.
    """

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = int(self.n)
        if n <= 0:
            raise EmptyVertexSet(f"vertex count must be positive, got {self.n}")
        edges = []
        for j, raw in enumerate(self.edges):
            e = tuple(sorted(int(v) for v in raw))
            if len(set(e)) != len(e):
                raise InvalidHypergraph(f"edge {j} repeats a vertex: {list(raw)}")
            if len(e) < 2:
                raise EdgeTooSmall(f"edge {j} has fewer than 2 vertices: {list(raw)}")
            if e[0] < 0 or e[-1] >= n:
                raise OutOfRangeVertex(f"edge {j} has a vertex outside [0, {n})")
            edges.append(e)
        seen = {}
        for j, e in enumerate(edges):
            if e in seen:
                raise DuplicateEdge(f"edges {seen[e]} and {j} are equal")
            seen[e] = j
        sets = [frozenset(e) for e in edges]
        for a, b in combinations(range(len(sets)), 2):
            if sets[a] <= sets[b] or sets[b] <= sets[a]:
                raise EdgeContainment(f"edges {a} and {b}: one contains the other")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def uniform_r(self) -> Optional[int]:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def incident_edges(self, v: int) -> list[int]:
        return [j for j, e in enumerate(self.edges) if v in e]

    def is_linear(self) -> bool:
        sets = [set(e) for e in self.edges]
        return all(len(a & b) <= 1 for a, b in combinations(sets, 2))

    def digest(self) -> str:
        """Stable content hash of ``(n, sorted edge list)``, used as a cache key."""
        payload = json.dumps([self.n, sorted(self.edges)], separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def validate(raw_vertex_count, raw_edge_list) -> Hypergraph:
    return Hypergraph(raw_vertex_count, tuple(tuple(e) for e in raw_edge_list))


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    component_count: int
    uniform_r: Optional[int]
    linear: bool
    incidence_rank: int
    classification: str
    cycle_length: Optional[int] = None
    cycle_edges: Optional[tuple[int, ...]] = None
    # cycle_vertices[i] is the vertex linking cycle_edges[i] and cycle_edges[i+1]
    cycle_vertices: Optional[tuple[int, ...]] = field(default=None)

    def to_json(self) -> dict:
        out = {
            "connected": self.connected,
            "component_count": self.component_count,
            "uniform_r": self.uniform_r,
            "linear": self.linear,
            "incidence_rank": self.incidence_rank,
            "classification": self.classification,
        }
        if self.cycle_edges is not None:
            out["cycle_length"] = self.cycle_length
            out["cycle_edges"] = list(self.cycle_edges)
            out["cycle_vertices"] = list(self.cycle_vertices)
        return out


def _incidence_labels(H: Hypergraph):
    """Component labels of the incidence graph (vertex nodes first, then edges)."""
    rows, cols = [], []
    for j, e in enumerate(H.edges):
        for v in e:
            rows.append(v)
            cols.append(H.n + j)
    size = H.n + H.m
    adj = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    return connected_components(adj, directed=False)


def components(H: Hypergraph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components as ``(vertices, edge indices)``, ordered by lowest vertex.

    Isolated vertices form singleton components.
    """
    _, labels = _incidence_labels(H)
    verts: dict[int, list[int]] = {}
    for v in range(H.n):
        verts.setdefault(int(labels[v]), []).append(v)
    edges: dict[int, list[int]] = {}
    for j in range(H.m):
        edges.setdefault(int(labels[H.n + j]), []).append(j)
    comps = [(tuple(vs), tuple(edges.get(lab, ()))) for lab, vs in verts.items()]
    return sorted(comps, key=lambda c: c[0][0])


def subhypergraph(H: Hypergraph, vertices: Sequence[int], edge_ids: Sequence[int]):
    """Relabel ``vertices`` to ``0..len-1`` and keep the given edges.

    Returns ``(sub, vertex_map)`` where ``vertex_map[i]`` is the original id
    of new vertex ``i``.  Edge ``t`` of ``sub`` is ``H.edges[edge_ids[t]]``.
    """
    vertex_map = tuple(sorted(vertices))
    index = {v: i for i, v in enumerate(vertex_map)}
    sub = Hypergraph(len(vertex_map), tuple(tuple(index[v] for v in H.edges[j]) for j in edge_ids))
    return sub, vertex_map


def delete_edge(H: Hypergraph, j: int) -> Hypergraph:
    """Remove edge ``j``; keeps all ``n`` vertices.

    Surviving edges keep their relative order, so edge ``i > j`` becomes
    edge ``i - 1`` and edges below ``j`` keep their index.
    """
    if not 0 <= j < H.m:
        raise IndexOutOfRange(f"edge index {j} not in [0, {H.m})")
    return Hypergraph(H.n, H.edges[:j] + H.edges[j + 1:])


def _find_unique_cycle(H: Hypergraph):
    """Edges and linking vertices of the only cycle of a unicyclic linear H."""
    deg = {("v", v): 0 for v in range(H.n)}
    deg.update({("e", j): len(e) for j, e in enumerate(H.edges)})
    adj = {node: set() for node in deg}
    for j, e in enumerate(H.edges):
        for v in e:
            adj[("v", v)].add(("e", j))
            adj[("e", j)].add(("v", v))
            deg[("v", v)] += 1
    # peel leaves until only the cycle survives
    alive = set(deg)
    stack = [node for node in alive if deg[node] <= 1]
    while stack:
        node = stack.pop()
        if node not in alive:
            continue
        alive.discard(node)
        for nb in adj[node]:
            if nb in alive:
                deg[nb] -= 1
                if deg[nb] <= 1:
                    stack.append(nb)
    cyc_edges = sorted(j for kind, j in alive if kind == "e")
    start = cyc_edges[0]
    nbrs = {j: sorted(v for kind, v in adj[("e", j)] & alive) for j in cyc_edges}
    order, links = [start], []
    prev_vertex = None
    current = start
    while True:
        # two linking vertices per cycle edge; walk towards the smaller-index neighbour first
        choices = [v for v in nbrs[current] if v != prev_vertex]
        if prev_vertex is None:
            def other_edge(v):
                return next(j for kind, j in adj[("v", v)] & alive if kind == "e" and j != current)
            choices.sort(key=other_edge)
        v = choices[0]
        nxt = next(j for kind, j in adj[("v", v)] & alive if kind == "e" and j != current)
        links.append(v)
        if nxt == start:
            break
        order.append(nxt)
        prev_vertex, current = v, nxt
    return tuple(order), tuple(links)


def classify(H: Hypergraph) -> StructureReport:
    ncomp, _ = _incidence_labels(H)
    linear = H.is_linear()
    rank = sum(len(e) for e in H.edges) - (H.n + H.m) + ncomp
    connected = ncomp == 1
    base = dict(
        connected=connected,
        component_count=ncomp,
        uniform_r=H.uniform_r,
        linear=linear,
        incidence_rank=rank,
    )
    if not linear:
        return StructureReport(classification=NONLINEAR, **base)
    if rank == 0:
        return StructureReport(classification=HYPERTREE if connected else FOREST, **base)
    if rank == 1 and connected:
        cyc, links = _find_unique_cycle(H)
        return StructureReport(
            classification=UNICYCLIC,
            cycle_length=len(cyc),
            cycle_edges=cyc,
            cycle_vertices=links,
            **base,
        )
    return StructureReport(classification=MULTICYCLIC, **base)


def attachment_order(H: Hypergraph, j: int, report: Optional[StructureReport] = None) -> tuple[int, ...]:
    """Vertex order of edge ``j`` used by boundary profiles and extremal covers.

    For a cycle edge of a unicyclic hypergraph the two vertices shared with
    the rest of the cycle come first (the one linking to the preceding cycle
    edge, then the one linking to the following edge); remaining vertices
    follow in ascending order.  Any other edge keeps its sorted order.
    """
    if not 0 <= j < H.m:
        raise IndexOutOfRange(f"edge index {j} not in [0, {H.m})")
    report = report or classify(H)
    e = H.edges[j]
    if report.classification != UNICYCLIC or j not in report.cycle_edges:
        return e
    pos = report.cycle_edges.index(j)
    links = report.cycle_vertices
    first, second = links[pos - 1], links[pos]
    return (first, second) + tuple(v for v in e if v not in (first, second))


# file formats -------------------------------------------------------------

def parse_hypergraph(text: str) -> Hypergraph:
    """Parse either the JSON form or the terse ``n=`` / ``e=`` line form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        try:
            return validate(data["n"], data["edges"])
        except KeyError as exc:
            raise InvalidHypergraph(f"missing field {exc}") from None
    n = None
    edges = []
    for lineno, line in enumerate(stripped.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in ("n", "e"):
            raise InvalidHypergraph(f"line {lineno}: expected 'n=' or 'e=', got {line!r}")
        try:
            nums = [int(tok) for tok in value.split()]
        except ValueError:
            raise InvalidHypergraph(f"line {lineno}: non-integer token") from None
        if key == "n":
            if n is not None or len(nums) != 1:
                raise InvalidHypergraph(f"line {lineno}: bad vertex count line")
            n = nums[0]
        else:
            edges.append(nums)
    if n is None:
        raise InvalidHypergraph("missing 'n=' line")
    return validate(n, edges)


def load_hypergraph(path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def format_terse(H: Hypergraph) -> str:
    lines = [f"n={H.n}"] + ["e=" + " ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"
