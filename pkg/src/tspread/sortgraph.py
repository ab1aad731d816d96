"""Sorted graphs and chordality with checkable certificates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

from .borel import GeneratorSet, is_sortable
from .errors import InvalidInput, PreconditionViolation
from .monomial import sort_indices

__all__ = [
    "SortedGraph",
    "ChordalityCertificate",
    "PEO",
    "INDUCED_CYCLE",
    "build_sorted_graph",
    "is_chordal",
    "verify_certificate",
    "is_freiman_via_chordality",
]

PEO = "perfect-elimination-ordering"
INDUCED_CYCLE = "induced-cycle"


@dataclass(frozen=True)
class SortedGraph:
    """Simple graph over an ordered vertex list with a dense adjacency matrix.

    Vertices are usually Monomials in descending lex order, but any hashable
    labels work, which is what the randomized tests rely on.
    """

    vertices: tuple[Hashable, ...]
    adjacency: tuple[tuple[bool, ...], ...]
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InvalidInput("duplicate vertices")
        if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
            raise InvalidInput("adjacency must be a square matrix over the vertices")
        for i in range(n):
            if self.adjacency[i][i]:
                raise InvalidInput(f"self-loop at {self.vertices[i]}")
            for j in range(i + 1, n):
                if self.adjacency[i][j] != self.adjacency[j][i]:
                    raise InvalidInput("adjacency must be symmetric")
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def from_edges(cls, vertices: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]) -> SortedGraph:
        pos = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        adj = [[False] * n for _ in range(n)]
        for a, b in edges:
            if a not in pos or b not in pos:
                raise InvalidInput(f"edge ({a}, {b}) uses an unknown vertex")
            i, j = pos[a], pos[b]
            if i != j:
                adj[i][j] = adj[j][i] = True
        return cls(tuple(vertices), tuple(tuple(r) for r in adj))

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, v: Hashable) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise InvalidInput(f"unknown vertex {v}") from None

    def neighbors(self, i: int) -> list[int]:
        row = self.adjacency[i]
        return [j for j in range(len(row)) if row[j]]

    def has_edge(self, a: Hashable, b: Hashable) -> bool:
        return self.adjacency[self.position(a)][self.position(b)]

    def edges(self) -> list[tuple[Hashable, Hashable]]:
        n = len(self.vertices)
        return [
            (self.vertices[i], self.vertices[j])
            for i in range(n)
            for j in range(i + 1, n)
            if self.adjacency[i][j]
        ]

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return all(self.adjacency[i][j] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class ChordalityCertificate:
    kind: str
    ordering: tuple = ()
    cycle: tuple = ()

    @property
    def chordal(self) -> bool:
        return self.kind == PEO


def build_sorted_graph(gens: GeneratorSet) -> SortedGraph:
    verts = gens.ordered()
    keys = [v.indices for v in verts]
    n = len(verts)
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        a = keys[i]
        for j in range(i + 1, n):
            b = keys[j]
            # a < b as tuples means a is lex greater, so sorted means sort = (a, b)
            if sort_indices(a, b) == (a, b):
                adj[i][j] = adj[j][i] = True
    return SortedGraph(tuple(verts), tuple(tuple(r) for r in adj))


def _mcs_order(g: SortedGraph) -> list[int]:
    """Maximum cardinality search visit order; ties go to the earliest vertex."""
    n = len(g)
    weight = [0] * n
    visited = [False] * n
    order: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in g.neighbors(best):
            if not visited[w]:
                weight[w] += 1
    return order


def _induced_cycle_through(
    g: SortedGraph, v: int, a: int, b: int, allowed: Optional[set[int]] = None
) -> Optional[list[int]]:
    """Shortest a-b path avoiding N[v] (except a, b), closed through v.

    a and b are non-adjacent neighbours of v; a shortest path is chordless and
    its interior misses N(v), so v + path is an induced cycle of length >= 4.
    """
    adj = g.adjacency
    n = len(g)
    blocked = {w for w in range(n) if adj[v][w]} | {v}
    blocked -= {a, b}
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in g.neighbors(x):
            if y in prev or y in blocked:
                continue
            if allowed is not None and y not in allowed and y != b:
                continue
            prev[y] = x
            queue.append(y)
    if b not in prev:
        return None
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    return [v] + path


def _find_induced_cycle(g: SortedGraph, peo: list[int]) -> list[int]:
    adj = g.adjacency
    rank = {v: r for r, v in enumerate(peo)}
    # Anchored at the first PEO failure, searching among later vertices.
    for v in peo:
        later = [w for w in g.neighbors(v) if rank[w] > rank[v]]
        for a, b in combinations(later, 2):
            if not adj[a][b]:
                allowed = {w for w in range(len(g)) if rank[w] > rank[v]}
                cyc = _induced_cycle_through(g, v, a, b, allowed)
                if cyc is not None:
                    return cyc
    # Exhaustive fallback: every induced cycle passes some v with such a pair.
    for v in range(len(g)):
        for a, b in combinations(g.neighbors(v), 2):
            if not adj[a][b]:
                cyc = _induced_cycle_through(g, v, a, b)
                if cyc is not None:
                    return cyc
    raise AssertionError("PEO check failed but no induced cycle was found")


def _first_peo_violation(g: SortedGraph, peo: list[int]) -> Optional[int]:
    adj = g.adjacency
    rank = {v: r for r, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.neighbors(v) if rank[w] > rank[v]]
        if not later:
            continue
        parent = min(later, key=rank.__getitem__)
        if any(w != parent and not adj[parent][w] for w in later):
            return v
    return None


def is_chordal(g: SortedGraph) -> ChordalityCertificate:
    visit = _mcs_order(g)
    peo = visit[::-1]
    if _first_peo_violation(g, peo) is None:
        return ChordalityCertificate(PEO, ordering=tuple(g.vertices[i] for i in peo))
    cyc = _find_induced_cycle(g, peo)
    return ChordalityCertificate(INDUCED_CYCLE, cycle=tuple(g.vertices[i] for i in cyc))


def verify_certificate(g: SortedGraph, cert: ChordalityCertificate) -> bool:
    """Check a certificate against g's adjacency, independently of is_chordal."""
    adj = g.adjacency
    if cert.kind == PEO:
        order = [g.position(v) for v in cert.ordering]
        if sorted(order) != list(range(len(g))):
            return False
        for r, v in enumerate(order):
            later = [w for w in order[r + 1:] if adj[v][w]]
            for a, b in combinations(later, 2):
                if not adj[a][b]:
                    return False
        return True
    if cert.kind == INDUCED_CYCLE:
        cyc = [g.position(v) for v in cert.cycle]
        m = len(cyc)
        if m < 4 or len(set(cyc)) != m:
            return False
        for i in range(m):
            for j in range(i + 1, m):
                consecutive = j == i + 1 or (i == 0 and j == m - 1)
                if adj[cyc[i]][cyc[j]] != consecutive:
                    return False
        return True
    raise InvalidInput(f"unknown certificate kind {cert.kind!r}")


def is_freiman_via_chordality(gens: GeneratorSet) -> tuple[bool, ChordalityCertificate]:
    if not is_sortable(gens):
        raise PreconditionViolation("generator set is not sortable")
    cert = is_chordal(build_sorted_graph(gens))
    return cert.chordal, cert
