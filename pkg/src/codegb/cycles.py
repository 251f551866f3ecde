"""Cycle spaces of simple graphs as binary codes, minimal cycles and bases.

Edge ``j`` (0-based, in input order) is coordinate ``j`` of the code, i.e.
variable ``x_{j+1}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .code import BinaryCode, BinaryMatrix, IncrementalSpan, pack, unpack
from .groebner import (
    Binomial,
    GroebnerBasis,
    binomial_codeword,
    compute_gb,
    min_weight_codewords,
)
from .term import mask_key


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= self.vertex_count:
                    raise ValueError(f"vertex {x} outside 1..{self.vertex_count}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def components(self) -> int:
        parent = list(range(self.vertex_count + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.vertex_count
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count

    def betti_number(self) -> int:
        return self.m - self.vertex_count + self.components()

    def edges_of(self, cycle) -> list[tuple[int, int]]:
        return [e for e, b in zip(self.edges, cycle) if b]


@dataclass(frozen=True)
class CycleBasis:
    cycles: tuple[tuple[int, ...], ...]
    total_length: int


def incidence_check_matrix(g: Graph) -> BinaryMatrix:
    """``m x |V|`` edge-vertex incidence matrix; ``c`` is a cycle iff ``cH = 0``."""
    return BinaryMatrix(tuple((1 << (u - 1)) | (1 << (v - 1)) for u, v in g.edges), g.vertex_count)


def cycle_space_code(g: Graph) -> BinaryCode:
    if g.m == 0:
        raise ValueError("a graph without edges has no cycle space")
    return BinaryCode.from_check(incidence_check_matrix(g))


def fundamental_cycle_basis(g: Graph) -> BinaryMatrix:
    """One cycle per non-tree edge of a BFS forest.

    Each component's tree is rooted at its lowest vertex and neighbours are
    explored in edge-input order.
    """
    adj: dict[int, list[tuple[int, int]]] = {x: [] for x in range(1, g.vertex_count + 1)}
    for j, (u, v) in enumerate(g.edges):
        adj[u].append((v, j))
        adj[v].append((u, j))
    parent_edge: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    parent: dict[int, int] = {}
    tree_edges = set()
    for root in range(1, g.vertex_count + 1):
        if root in depth:
            continue
        depth[root] = 0
        parent_edge[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, j in adj[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    parent_edge[y] = j
                    tree_edges.add(j)
                    queue.append(y)
    rows = []
    for j, (u, v) in enumerate(g.edges):
        if j in tree_edges:
            continue
        cyc = 1 << j
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            cyc ^= 1 << parent_edge[a]
            a = parent[a]
        rows.append(cyc)
    return BinaryMatrix(tuple(rows), g.m)


# ------------------------------------------------------------- basis order

def precedence_key(g: Binomial):
    """Sort key for the cycle order: head degree, codeword weight, head, tail."""
    n = g.head.n
    return (g.degree, sum(binomial_codeword(g)), mask_key(g.head.mask, n), mask_key(g.tail.mask, n))


def precedes(g1: Binomial, g2: Binomial) -> bool:
    return precedence_key(g1) < precedence_key(g2)


def minimal_cycles(g: Graph, gb: GroebnerBasis | None = None) -> tuple[int, set[tuple[int, ...]]]:
    """Girth and every shortest cycle, via the minimal-weight codewords of ``G_T``."""
    code = cycle_space_code(g)
    if code.k == 0:
        raise ValueError("the graph has no cycles")
    gb = gb or compute_gb(code)
    return min_weight_codewords(gb)


def greedy_cycle_basis(gb: GroebnerBasis) -> CycleBasis:
    """Greedy independent extraction from the ``c_g`` sorted by :func:`precedes`."""
    k = gb.code.k
    span = IncrementalSpan()
    chosen = []
    for b in sorted(gb.elements, key=precedence_key):
        if len(span) == k:
            break
        v = pack(binomial_codeword(b))
        if v and span.add(v):
            chosen.append(unpack(v, gb.n))
    return CycleBasis(tuple(chosen), sum(sum(c) for c in chosen))


def minimal_cycle_basis(g: Graph, gb: GroebnerBasis | None = None) -> CycleBasis:
    if g.m == 0:
        return CycleBasis((), 0)
    code = cycle_space_code(g)
    if code.k == 0:
        return CycleBasis((), 0)
    return greedy_cycle_basis(gb or compute_gb(code))


def oracle_minimal_basis_length(c: BinaryCode, max_k: int = 16) -> int:
    """Matroid greedy over every nonzero codeword sorted by (weight, degrevlex)."""
    if c.k > max_k:
        raise ValueError(f"exhaustive basis search needs k <= {max_k}, got {c.k}")
    words = sorted((m for m in c.codeword_masks() if m), key=lambda m: mask_key(m, c.n))
    span = IncrementalSpan()
    total = 0
    for m in words:
        if len(span) == c.k:
            break
        if span.add(m):
            total += m.bit_count()
    return total
