"""Simple undirected graphs on integer nodes, edge-list I/O, and exhaustive
enumeration of tiny graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

# Exhaustive enumeration stops here: n = 6 already means 2^15 graphs.
MAX_ENUMERATION_NODES = 6

VertexSubset = tuple  # strictly increasing tuple of distinct node indices


class EdgeListError(ValueError):
    """Malformed edge-list input; knows the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NotACliqueError(ValueError):
    """A vertex subset that was claimed to be a clique is not one."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on nodes 0..n-1.

    Edges are held as a frozenset of (u, v) pairs with u < v; any iterable
    of pairs (in either orientation) is accepted at construction and
    normalized. Self-loops and out-of-range endpoints are rejected.
    """

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"node count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}: simple graphs only")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs, u < v: the canonical order."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitmask per node."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()


def pair_count(n: int) -> int:
    """Number of candidate node pairs in a graph of size n: n(n-1)/2."""
    if n < 0:
        raise ValueError(f"node count must be non-negative, got {n}")
    return n * (n - 1) // 2


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Every candidate pair (u, v) with u < v, in lexicographic order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def vertex_subset(members: Iterable[int]) -> VertexSubset:
    """Normalize members to a strictly increasing tuple; duplicates are an error."""
    out = tuple(sorted(members))
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"duplicate member {a} in vertex subset")
    return out


def _check_members(graph: Graph, members: VertexSubset) -> None:
    if members and (members[0] < 0 or members[-1] >= graph.n):
        raise ValueError(f"vertex subset {list(members)} out of range for n={graph.n}")


def is_clique(graph: Graph, members: Iterable[int]) -> bool:
    """True iff every pair within the subset is an edge; vacuous for size <= 1."""
    subset = vertex_subset(members)
    _check_members(graph, subset)
    if len(subset) <= 1:
        return True
    mask = 0
    for v in subset:
        mask |= 1 << v
    adjacency = graph.adjacency
    return all(adjacency[v] & mask == mask ^ (1 << v) for v in subset)


def clique_pairs(members: Iterable[int]) -> set[tuple[int, int]]:
    """All pairs within the subset."""
    subset = vertex_subset(members)
    return {(u, v) for i, u in enumerate(subset) for v in subset[i + 1 :]}


def remove_clique_edges(graph: Graph, members: Iterable[int]) -> Graph:
    """Drop every pair within a clique, leaving the remainder graph.

    The subset must actually be a clique: silently dropping absent edges
    would make the inverse (add_clique_edges) reconstruct the wrong graph.
    """
    subset = vertex_subset(members)
    if not is_clique(graph, subset):
        raise NotACliqueError(f"{list(subset)} is not a clique of the graph")
    return Graph(graph.n, graph.edges - clique_pairs(subset))


def add_clique_edges(graph: Graph, members: Iterable[int]) -> Graph:
    """Insert every pair within the subset; inverse of remove_clique_edges."""
    subset = vertex_subset(members)
    _check_members(graph, subset)
    return Graph(graph.n, set(graph.edges) | clique_pairs(subset))


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    One "u v" pair per line; lines starting with '#' are comments and blank
    lines are skipped. An optional leading "n <count>" directive fixes the
    node count; otherwise it is one past the largest index seen (0 for no
    edges). Duplicate edges, in either orientation, are merged silently.
    """
    declared_n = None
    edges: list[tuple[int, int]] = []
    max_index = -1
    at_first_content = True
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if at_first_content and parts[0] == "n":
            at_first_content = False
            if len(parts) != 2:
                raise EdgeListError(line_no, "directive must be 'n <count>'")
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise EdgeListError(line_no, f"bad node count {parts[1]!r}") from None
            if declared_n < 0:
                raise EdgeListError(line_no, "node count must be non-negative")
            continue
        at_first_content = False
        if len(parts) != 2:
            raise EdgeListError(line_no, f"expected two node indices, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(line_no, f"bad node index in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(line_no, "node indices must be non-negative")
        if u == v:
            raise EdgeListError(line_no, f"self-loop '{u} {v}': simple graphs only")
        if declared_n is not None and max(u, v) >= declared_n:
            raise EdgeListError(
                line_no, f"node index {max(u, v)} out of range for declared n={declared_n}"
            )
        if u > v:
            u, v = v, u
        edges.append((u, v))
        max_index = max(max_index, v)
    n = declared_n if declared_n is not None else max_index + 1
    return Graph(n, edges)


def format_edge_list(graph: Graph) -> str:
    """Serialize to edge-list text: the "n <count>" directive, then sorted edges."""
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edge_list())
    return "\n".join(lines) + "\n"


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield each of the 2^(n(n-1)/2) labeled simple graphs on n nodes once.

    Guarded at n <= 6; beyond that the count is astronomically large.
    """
    if n > MAX_ENUMERATION_NODES:
        raise ValueError(f"enumeration is limited to n <= {MAX_ENUMERATION_NODES}, got {n}")
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, (pair for i, pair in enumerate(pairs) if mask >> i & 1))
