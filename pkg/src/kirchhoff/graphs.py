"""Simple undirected graphs and complete multipartite constructions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class DisconnectedGraphError(ValueError):
    """Raised when an invariant is undefined for a disconnected graph."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("vertex count must be positive")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def is_connected(self) -> bool:
        return len(self._component(0)) == self.n

    def component_count(self) -> int:
        seen: set[int] = set()
        count = 0
        for v in range(self.n):
            if v not in seen:
                seen |= self._component(v)
                count += 1
        return count

    def _component(self, start: int) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class VertexLocator:
    """Position of a vertex inside a multipartite graph: 0-based part and offset."""

    part: int
    offset: int


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, in the order given.

    Formulas for resistance and Kirchhoff indices are symmetric in the parts,
    but vertex numbering (and hence matrix layout) follows the given order, so
    the input order is preserved and `canonical()` sorts when identity of the
    partition matters.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition must have at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("all parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def canonical(self) -> "PartitionSpec":
        return PartitionSpec(tuple(sorted(self.parts, reverse=True)))

    def compressed(self) -> list[tuple[int, int]]:
        """Distinct part sizes ascending with multiplicities."""
        out: list[tuple[int, int]] = []
        for p in sorted(self.parts):
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def edge_count(self) -> int:
        n = self.n
        return (n * n - sum(p * p for p in self.parts)) // 2

    def part_start(self, part: int) -> int:
        return sum(self.parts[:part])

    def vertex_index(self, loc: VertexLocator) -> int:
        if not (0 <= loc.part < self.r and 0 <= loc.offset < self.parts[loc.part]):
            raise ValueError(f"locator {loc} invalid for parts {self.parts}")
        return self.part_start(loc.part) + loc.offset

    def locate(self, v: int) -> VertexLocator:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range")
        for i, p in enumerate(self.parts):
            if v < p:
                return VertexLocator(i, v)
            v -= p
        raise AssertionError("unreachable")

    @classmethod
    def parse(cls, text: str) -> "PartitionSpec":
        """Parse the spec grammar: comma-separated "p" or "p^a" terms."""
        parts: list[int] = []
        for term in text.split(","):
            term = term.strip()
            if not term:
                raise ValueError(f"empty term in partition spec {text!r}")
            if "^" in term:
                base, _, exp = term.partition("^")
                p, a = int(base), int(exp)
            else:
                p, a = int(term), 1
            if p < 1 or a < 1:
                raise ValueError(f"invalid term {term!r} in partition spec")
            parts.extend([p] * a)
        return cls(tuple(parts))

    def __str__(self) -> str:
        out = []
        i = 0
        while i < self.r:
            j = i
            while j < self.r and self.parts[j] == self.parts[i]:
                j += 1
            mult = j - i
            out.append(f"{self.parts[i]}^{mult}" if mult > 1 else str(self.parts[i]))
            i = j
        return ",".join(out)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_multipartite(spec: PartitionSpec) -> Graph:
    """K_{p_1,...,p_r}: vertices numbered consecutively by part; u~v iff
    the two vertices lie in different parts."""
    bounds = []
    start = 0
    for p in spec.parts:
        bounds.append((start, start + p))
        start += p
    edges = []
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1 :]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(spec.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges; h's vertices are shifted by g.n."""
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    edges.extend((u, v + g.n) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


def complement(g: Graph) -> Graph:
    edges = (
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    )
    return Graph(g.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    return Graph(g.n + h.n, edges)


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: first non-blank line is n, then one "u v" per line.

    Duplicate and reversed pairs are tolerated; self-loops are rejected.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}")
    edges = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return Graph(n, edges)
