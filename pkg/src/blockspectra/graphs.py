"""Simple undirected graphs with exact distances, blocks, and isomorphism tests.

Vertices are always labeled 0..n-1. Adjacency is stored as one Python int
bitmask per vertex, which keeps complement, BFS, and block routines exact and
cheap at the scales this package targets (n up to a few hundred).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "BlockDecomposition",
    "from_edge_list",
    "complement",
    "bfs_distances",
    "diameter",
    "is_connected",
    "block_decomposition",
    "is_clique_tree",
    "are_isomorphic",
    "parse_edge_list",
    "format_edge_list",
]


class GraphError(ValueError):
    """Invalid graph input or violated operation precondition."""


def _bits(mask):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    rows[v] is the neighbor bitmask of v. Instances compare and hash by
    labeled structure, so they can key dicts and sets directly.
    """

    def __init__(self, n, rows):
        n = int(n)
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = rows

    @cached_property
    def m(self):
        return sum(r.bit_count() for r in self.rows) // 2

    @cached_property
    def degrees(self):
        return tuple(r.bit_count() for r in self.rows)

    @cached_property
    def edges(self):
        out = []
        for u in range(self.n):
            higher = self.rows[u] >> (u + 1)
            for off in _bits(higher):
                out.append((u, u + 1 + off))
        return tuple(out)

    def degree(self, v):
        return self.rows[v].bit_count()

    def neighbors(self, v):
        return tuple(_bits(self.rows[v]))

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _graph_from_pairs(n, pairs):
    """Build a Graph from trusted (u, v) pairs without validation."""
    rows = [0] * n
    for u, v in pairs:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def from_edge_list(n, edges):
    """Build a Graph from an explicit edge list, validating every pair."""
    n = int(n)
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    rows = [0] * n
    seen = set()
    for e in edges:
        u, v = e
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(key)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complement(g):
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    return Graph(g.n, (full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def bfs_distances(g):
    """All-pairs shortest-path matrix; unreachable pairs get np.inf."""
    n = g.n
    rows = g.rows
    d = np.full((n, n), np.inf)
    for s in range(n):
        d[s, s] = 0.0
        visited = 1 << s
        frontier = 1 << s
        level = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            nxt &= ~visited
            level += 1
            for v in _bits(nxt):
                d[s, v] = level
            visited |= nxt
            frontier = nxt
    return d

def diameter(g):
    """Largest finite distance, or math.inf when g is disconnected."""
    if not is_connected(g):
        return math.inf
    return int(bfs_distances(g).max())


def is_connected(g):
    visited = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~visited
        visited |= nxt
    return visited.bit_count() == g.n


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as vertex sets), cut vertices, and the block count s."""

    blocks: tuple
    cut_vertices: frozenset
    s: int


def block_decomposition(g):
    """Decompose a connected graph into blocks and cut vertices.

    Iterative DFS lowpoint algorithm; edges are stacked and popped as a block
    whenever a child subtree cannot reach above its attachment point. A K1
    input yields zero blocks.
    """
    if not is_connected(g):
        raise GraphError("block decomposition requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack = []
    blocks = []
    cuts = set()

    disc[0] = low[0] = 0
    clock = 1
    root_children = 0
    stack = [(0, iter(g.neighbors(0)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent[v]:
                continue
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = clock
                clock += 1
                edge_stack.append((v, w))
                if v == 0:
                    root_children += 1
                stack.append((w, iter(g.neighbors(w))))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        u = stack[-1][0]
        if low[v] < low[u]:
            low[u] = low[v]
        if low[v] >= disc[u]:
            comp = set()
            while True:
                e = edge_stack.pop()
                comp.update(e)
                if e == (u, v):
                    break
            blocks.append(frozenset(comp))
            if u != 0:
                cuts.add(u)
    if root_children >= 2:
        cuts.add(0)
    blocks.sort(key=lambda b: tuple(sorted(b)))
    return BlockDecomposition(tuple(blocks), frozenset(cuts), len(blocks))


def is_clique_tree(g):
    """True iff g is connected and every block induces a complete subgraph."""
    if not is_connected(g):
        return False
    for block in block_decomposition(g).blocks:
        bmask = 0
        for v in block:
            bmask |= 1 << v
        for v in block:
            need = bmask ^ (1 << v)
            if g.rows[v] & need != need:
                return False
    return True


def _refined_colors(g):
    """Stable vertex coloring from iterated neighbor-color refinement.

    Color labels are assigned by sorting the refinement keys, so two
    isomorphic graphs always receive identical color multisets. Cached per
    graph instance.
    """
    cached = g.__dict__.get("_colors")
    if cached is not None:
        return cached
    colors = list(g.degrees)
    classes = len(set(colors))
    for _ in range(g.n):
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.rows[v]))))
            for v in range(g.n)
        ]
        relabel = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [relabel[k] for k in keys]
        new_classes = len(set(colors))
        if new_classes == classes:
            break
        classes = new_classes
    result = tuple(colors)
    g.__dict__["_colors"] = result
    return result


def _iso_signature(g):
    """Cheap isomorphism invariant used to bucket candidates before pairwise tests."""
    return (g.n, g.m, tuple(sorted(_refined_colors(g))))


def are_isomorphic(g, h):
    """Exact isomorphism test by color refinement plus backtracking.

    Intended for small graphs (n up to about 12); the refinement prefilter
    rejects almost all non-isomorphic pairs before any search happens.
    """
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    cg = _refined_colors(g)
    ch = _refined_colors(h)
    if sorted(cg) != sorted(ch):
        return False

    n = g.n
    by_color = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)
    # Most-constrained g-vertices first.
    order = sorted(range(n), key=lambda v: (len(by_color[cg[v]]), cg[v], v))
    mapping = [-1] * n
    used = [False] * n
    assigned = []

    def extend(i):
        if i == n:
            return True
        v = order[i]
        for c in by_color[cg[v]]:
            if used[c]:
                continue
            ok = True
            for u in assigned:
                if (g.rows[v] >> u) & 1 != (h.rows[c] >> mapping[u]) & 1:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = c
            used[c] = True
            assigned.append(v)
            if extend(i + 1):
                return True
            assigned.pop()
            used[c] = False
            mapping[v] = -1
        return False

    return extend(0)


def format_edge_list(g):
    """Serialize to the text format: header `n m`, then one `u v` line per edge.

    Edges are written with u < v in lexicographic order, LF endings.
    """
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    """Parse the edge-list text format; tolerant of edge order and orientation."""
    tokens = [line.strip() for line in text.splitlines()]
    tokens = [line for line in tokens if line]
    if not tokens:
        raise GraphError("empty edge-list input")
    head = tokens[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {tokens[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"header must be two integers, got {tokens[0]!r}") from None
    if len(tokens) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(tokens) - 1} lines follow")
    edges = []
    for line in tokens[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"edge line must be two integers, got {line!r}") from None
        edges.append((min(u, v), max(u, v)))
    return from_edge_list(n, edges)
