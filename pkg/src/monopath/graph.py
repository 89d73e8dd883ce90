"""Oriented-graph core: representation, induced subgraphs, underlying
components, topological orders, and the k-special predicate.

An oriented graph has no self-loops and, for every unordered vertex pair, at
most one of the two directed edges.  Vertex ids are dense integers 0..N-1.
Graphs are immutable after construction and all operations here are pure, so
concurrent readers are safe.

Conventions used package-wide:
  * path length counts EDGES (a path on p vertices has length p-1);
  * edges are kept in canonical lexicographic (u, v) order;
  * a set of vertices is "k-special" when its induced subgraph is acyclic
    and every connected component of the underlying (undirected) induced
    graph has at most k vertices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BidirectedPairError,
    CyclicError,
    DuplicateEdgeError,
    SelfLoopError,
    VertexOutOfRangeError,
)

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


@dataclass(frozen=True)
class OrientedGraph:
    """Immutable oriented graph with both adjacency directions precomputed."""

    vertex_count: int
    edges: tuple[Edge, ...]
    out_neighbours: tuple[tuple[int, ...], ...]
    in_neighbours: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_neighbours[u]

    def underlying_neighbours(self, v: int) -> tuple[int, ...]:
        """Neighbours ignoring direction; no duplicates (graph is oriented)."""
        return tuple(sorted(self.out_neighbours[v] + self.in_neighbours[v]))

    def underlying_degree(self, v: int) -> int:
        return len(self.out_neighbours[v]) + len(self.in_neighbours[v])


@dataclass(frozen=True)
class SpecialSet:
    """A vertex set recorded as k-special: acyclic induced subgraph, every
    underlying component of order at most k."""

    members: VertexSet
    k: int

    def __len__(self) -> int:
        return len(self.members)


def as_vertex_set(vertices: Iterable[int], vertex_count: int | None = None) -> VertexSet:
    """Sorted duplicate-free tuple of vertex ids, range-checked if asked."""
    members = tuple(sorted(set(vertices)))
    if vertex_count is not None:
        for v in members:
            if not 0 <= v < vertex_count:
                raise VertexOutOfRangeError(
                    f"vertex {v} outside 0..{vertex_count - 1}", vertex=v
                )
    return members


def build_graph(vertex_count: int, edge_list: Iterable[Edge]) -> OrientedGraph:
    """Validate and canonicalise an edge list into an OrientedGraph.

    Rejects self-loops, duplicate edges, bidirected pairs and out-of-range
    endpoints; each error names the offending edge.
    """
    if vertex_count < 0:
        raise VertexOutOfRangeError(f"negative vertex count {vertex_count}")
    seen: set[Edge] = set()
    for u, v in edge_list:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexOutOfRangeError(
                f"edge ({u}, {v}) outside 0..{vertex_count - 1}", edge=[u, v]
            )
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", edge=[u, v])
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", edge=[u, v])
        if (v, u) in seen:
            raise BidirectedPairError(
                f"both ({v}, {u}) and ({u}, {v}) present", edge=[u, v]
            )
        seen.add((u, v))
    edges = tuple(sorted(seen))
    outs: list[list[int]] = [[] for _ in range(vertex_count)]
    ins: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        outs[u].append(v)
        ins[v].append(u)
    return OrientedGraph(
        vertex_count=vertex_count,
        edges=edges,
        out_neighbours=tuple(tuple(a) for a in outs),
        in_neighbours=tuple(tuple(sorted(a)) for a in ins),
    )


def induced_subgraph(
    g: OrientedGraph, vertices: Iterable[int]
) -> tuple[OrientedGraph, dict[int, int]]:
    """Subgraph on the given vertices plus the order-preserving relabel map.

    The map sends each kept original id to its new id 0..|s|-1; the inverse
    is positional (new id i corresponds to the i-th smallest kept vertex).
    """
    members = as_vertex_set(vertices, g.vertex_count)
    relabel = {v: i for i, v in enumerate(members)}
    edges = [
        (relabel[u], relabel[v])
        for u in members
        for v in g.out_neighbours[u]
        if v in relabel
    ]
    return build_graph(len(members), edges), relabel


def underlying_components(g: OrientedGraph, vertices: Iterable[int]) -> list[VertexSet]:
    """Connected components of the underlying graph induced on ``vertices``.

    Returned sorted by smallest member; together they partition the input.
    """
    members = as_vertex_set(vertices, g.vertex_count)
    member_set = set(members)
    seen: set[int] = set()
    components: list[VertexSet] = []
    for start in members:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.out_neighbours[v] + g.in_neighbours[v]:
                if w in member_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(tuple(sorted(comp)))
    return components


def topological_order(g: OrientedGraph) -> VertexSet:
    """Deterministic topological order (smallest id among available sources).

    Raises CyclicError carrying one directed cycle witness when none exists.
    """
    indeg = [len(g.in_neighbours[v]) for v in range(g.vertex_count)]
    ready = [v for v in range(g.vertex_count) if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in g.out_neighbours[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) < g.vertex_count:
        remaining = {v for v in range(g.vertex_count) if indeg[v] > 0}
        raise CyclicError("graph contains a directed cycle", _find_cycle(g, remaining))
    return tuple(order)


def _find_cycle(g: OrientedGraph, remaining: set[int]) -> tuple[int, ...]:
    """Walk smallest out-neighbours inside ``remaining`` until a repeat.

    Every vertex in ``remaining`` has an out-neighbour in ``remaining`` (they
    all have positive residual in-degree after Kahn peeling), so the walk
    must close a cycle.
    """
    start = min(remaining)
    walk = [start]
    position = {start: 0}
    while True:
        v = walk[-1]
        nxt = min(w for w in g.out_neighbours[v] if w in remaining)
        if nxt in position:
            return tuple(walk[position[nxt] :] + [nxt])
        position[nxt] = len(walk)
        walk.append(nxt)


def is_acyclic_subset(g: OrientedGraph, members: Sequence[int]) -> bool:
    """Whether the induced subgraph on ``members`` has no directed cycle."""
    member_set = set(members)
    indeg = {v: 0 for v in members}
    for v in members:
        for w in g.out_neighbours[v]:
            if w in member_set:
                indeg[w] += 1
    stack = [v for v in members if indeg[v] == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in g.out_neighbours[v]:
            if w in member_set:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
    return removed == len(member_set)


def is_k_special(g: OrientedGraph, vertices: Iterable[int], k: int) -> bool:
    """True iff the induced subgraph is acyclic and every underlying component
    has at most k vertices."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    members = as_vertex_set(vertices, g.vertex_count)
    if not is_acyclic_subset(g, members):
        return False
    return all(len(comp) <= k for comp in underlying_components(g, members))
