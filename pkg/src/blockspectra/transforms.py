"""Graph surgeries: moving an end clique between cut vertices, completing
blocks to cliques, and deleting block edges.

These are the operations the extremal arguments compose; selection policies
(which clique to move where) live in the verify module, keeping the surgery
itself reusable.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, block_decomposition, is_clique_tree, is_connected

__all__ = ["end_cliques", "move_clique", "complete_blocks", "delete_block_edges"]


def end_cliques(g, decomp=None):
    """All (block, end cut vertex) pairs: blocks containing exactly one cut vertex.

    A single-block graph has no cut vertices and therefore no end cliques.
    """
    if decomp is None:
        decomp = block_decomposition(g)
    out = []
    for block in decomp.blocks:
        cuts_in_block = [v for v in sorted(block) if v in decomp.cut_vertices]
        if len(cuts_in_block) == 1:
            out.append((block, cuts_in_block[0]))
    return out


def move_clique(g, K, v, w):
    """Detach the end clique K from its cut vertex v and reattach it at w.

    Removes every edge from v into K - {v} and joins each vertex of K - {v}
    to w instead; internal edges of K - {v} stay. The result is a clique tree
    with the same block-size multiset. w = v returns g unchanged.
    """
    if not is_clique_tree(g):
        raise GraphError("move_clique requires a clique tree")
    decomp = block_decomposition(g)
    K = frozenset(K)
    if K not in decomp.blocks:
        raise GraphError(f"{sorted(K)} is not a block of the graph")
    cuts_in_block = [u for u in sorted(K) if u in decomp.cut_vertices]
    if len(cuts_in_block) != 1:
        raise GraphError(f"{sorted(K)} is not an end clique (cut vertices: {cuts_in_block})")
    if v != cuts_in_block[0]:
        raise GraphError(f"vertex {v} is not the end cut vertex of {sorted(K)}")
    if w not in decomp.cut_vertices:
        raise GraphError(f"vertex {w} is not a cut vertex")
    others = K - {v}
    if w in others:
        raise GraphError(f"target vertex {w} lies inside the moved clique")
    if w == v:
        return g
    rows = list(g.rows)
    for u in others:
        rows[v] &= ~(1 << u)
        rows[u] &= ~(1 << v)
        rows[w] |= 1 << u
        rows[u] |= 1 << w
    return Graph(g.n, rows)


def complete_blocks(g):
    """Add every missing edge inside each block, turning g into a clique tree.

    The result keeps the same blocks-as-vertex-sets and the same cut
    vertices; clique trees are fixed points.
    """
    decomp = block_decomposition(g)  # rejects disconnected input
    rows = list(g.rows)
    for block in decomp.blocks:
        bmask = 0
        for u in block:
            bmask |= 1 << u
        for u in block:
            rows[u] |= bmask & ~(1 << u)
    return Graph(g.n, rows)


def delete_block_edges(g, edges):
    """Remove the given edges; rejects removals that disconnect the graph."""
    rows = list(g.rows)
    seen = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"edge ({u},{v}) listed twice")
        seen.add(key)
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge of the graph")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    out = Graph(g.n, rows)
    if not is_connected(out):
        raise GraphError("deleting those edges disconnects the graph")
    return out
