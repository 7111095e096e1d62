"""Bit-labelled model of the hypercube Q_n and the folded hypercube FQ_n.

Vertices are the integers 0..2^n - 1 read as n-bit strings; two vertices
are adjacent when their labels differ in exactly one bit. The folded
variant adds the perfect matching that joins every vertex to its bitwise
complement, so every vertex has degree n + 1 instead of n.

Adjacency is derived on demand from XOR masks. No adjacency lists are
materialized, which keeps a topology O(1) in memory regardless of
dimension and makes instances safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MIN_DIMENSION = 2
MAX_DIMENSION = 20  # 2^20 vertices; whole-graph traversal stays in memory

#: Dimension tag used for matching edges joining complementary vertices.
COMPLEMENT = "complement"

Edge = tuple[int, int]
VertexSet = frozenset[int]


def to_bits(v: int, n: int) -> str:
    """Binary string u_n u_{n-1} ... u_1 of a vertex label."""
    return format(v, f"0{n}b")


def from_bits(bits: str) -> int:
    return int(bits, 2)


@dataclass(frozen=True)
class CubeTopology:
    """Immutable Q_n (folded=False) or FQ_n (folded=True) graph.

    All queries are read-only and reentrant; instances can be shared
    freely across threads or processes.
    """

    n: int
    folded: bool = True

    def __post_init__(self):
        if not MIN_DIMENSION <= self.n <= MAX_DIMENSION:
            raise ValueError(
                f"dimension must be in [{MIN_DIMENSION}, {MAX_DIMENSION}], got {self.n}"
            )

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    @property
    def edge_count(self) -> int:
        base = self.n << (self.n - 1)
        return base + (1 << (self.n - 1)) if self.folded else base

    @property
    def degree(self) -> int:
        """Common degree of every vertex (the graph is regular)."""
        return self.n + 1 if self.folded else self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return v

    def complement(self, v: int) -> int:
        return self.check_vertex(v) ^ self.full_mask

    def neighbors(self, v: int) -> list[int]:
        """Neighbors in deterministic order: ascending flip dimension,
        then the complement partner last (folded only)."""
        self.check_vertex(v)
        out = [v ^ (1 << i) for i in range(self.n)]
        if self.folded:
            out.append(v ^ self.full_mask)
        return out

    def is_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        x = u ^ v
        if x != 0 and (x & (x - 1)) == 0:
            return True
        return self.folded and x == self.full_mask

    def edges(self) -> Iterator[Edge]:
        """All edges as canonical (min, max) pairs, ascending."""
        for v in range(self.vertex_count):
            for u in self.neighbors(v):
                if v < u:
                    yield (v, u)

    def edge_dimension(self, u: int, v: int) -> int | str:
        """Flip dimension in 1..n of an edge, or the complement tag."""
        if not self.is_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        x = u ^ v
        if x == self.full_mask and self.folded and self.n > 1:
            return COMPLEMENT
        return x.bit_length()


def build_topology(n: int, folded: bool) -> CubeTopology:
    """Construct Q_n or FQ_n; raises ValueError outside the dimension cap."""
    return CubeTopology(n=n, folded=folded)


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def as_vertex_set(topo: CubeTopology, members: Iterable[int]) -> VertexSet:
    """Normalize and validate a collection of vertex labels."""
    out = frozenset(members)
    for v in out:
        topo.check_vertex(v)
    return out


class EdgeCut:
    """A canonical set of edges of one topology, meant for removal.

    Edges are stored as (min, max) pairs; construction validates that
    every pair is an actual edge of the owning topology.
    """

    __slots__ = ("edges",)

    def __init__(self, topo: CubeTopology, pairs: Iterable[Edge]):
        canon = set()
        for u, v in pairs:
            if not topo.is_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the topology")
            canon.add(canonical_edge(u, v))
        self.edges: frozenset[Edge] = frozenset(canon)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __contains__(self, pair: Edge) -> bool:
        u, v = pair
        return canonical_edge(u, v) in self.edges

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeCut) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"EdgeCut({len(self.edges)} edges)"


@dataclass(frozen=True)
class ComponentProfile:
    """Connected-component census: count, sizes (descending), and the
    number of isolated (size-1) components."""

    count: int
    sizes: tuple[int, ...]
    isolated_count: int

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "ComponentProfile":
        ordered = tuple(sorted(sizes, reverse=True))
        return cls(
            count=len(ordered),
            sizes=ordered,
            isolated_count=sum(1 for s in ordered if s == 1),
        )


def induced_degree_sum(topo: CubeTopology, members: Iterable[int]) -> int:
    """Sum of degrees inside the induced subgraph on the given vertices.

    Equals twice the number of induced edges, hence always even.
    """
    x = as_vertex_set(topo, members)
    return sum(1 for v in x for u in topo.neighbors(v) if u in x)


def boundary(topo: CubeTopology, members: Iterable[int]) -> EdgeCut:
    """Edges with exactly one endpoint in the given set.

    Satisfies |boundary(X)| = degree * |X| - induced_degree_sum(X).
    """
    x = as_vertex_set(topo, members)
    if not x:
        raise ValueError("boundary of the empty set is undefined")
    if len(x) == topo.vertex_count:
        raise ValueError("boundary of the full vertex set is undefined")
    pairs = [
        canonical_edge(v, u) for v in x for u in topo.neighbors(v) if u not in x
    ]
    return EdgeCut(topo, pairs)


def components_after_removal(topo: CubeTopology, cut: EdgeCut) -> ComponentProfile:
    """Component profile of the graph after deleting the cut edges.

    Whole-graph BFS with the cut held as a membership-testable set; cut
    sizes are small relative to the edge count, so this is the cheap
    direction.
    """
    removed = cut.edges if isinstance(cut, EdgeCut) else EdgeCut(topo, cut).edges
    seen = bytearray(topo.vertex_count)
    sizes = []
    for start in range(topo.vertex_count):
        if seen[start]:
            continue
        seen[start] = 1
        size = 0
        stack = [start]
        while stack:
            v = stack.pop()
            size += 1
            for u in topo.neighbors(v):
                if not seen[u] and canonical_edge(v, u) not in removed:
                    seen[u] = 1
                    stack.append(u)
        sizes.append(size)
    return ComponentProfile.from_sizes(sizes)
