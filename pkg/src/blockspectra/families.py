"""Constructors and enumerators for clique trees, trees, and small connected graphs.

A clique tree here is a connected graph whose blocks are all complete
(standard "block graph"); the clique path and clique star are its extremal
shapes. Enumerators yield exactly one representative per isomorphism class,
deduplicated by refinement signatures plus pairwise isomorphism tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Graph,
    GraphError,
    _graph_from_pairs,
    _iso_signature,
    are_isomorphic,
)

__all__ = [
    "CliqueTreeSpec",
    "realize",
    "clique_path",
    "clique_star",
    "path_graph",
    "complete_graph",
    "broom",
    "enumerate_trees",
    "enumerate_connected_graphs",
    "enumerate_clique_trees",
    "random_clique_tree",
    "parse_family_spec",
]


@dataclass(frozen=True)
class CliqueTreeSpec:
    """Gluing recipe for a clique tree.

    sizes lists the s clique orders (each >= 2). attachments holds, for each
    clique i >= 2 in order, the pair (j, v): clique i is glued to vertex v of
    the already-realized clique j, making v a cut vertex. Realized vertex
    labels run left to right, the shared vertex first within each new clique.
    """

    s: int
    sizes: tuple
    attachments: tuple


def realize(spec):
    """Build the graph a CliqueTreeSpec describes, validating every attachment."""
    if spec.s != len(spec.sizes):
        raise GraphError(f"spec declares s={spec.s} but lists {len(spec.sizes)} sizes")
    if len(spec.attachments) != spec.s - 1:
        raise GraphError(
            f"spec needs {spec.s - 1} attachments for s={spec.s}, got {len(spec.attachments)}"
        )
    cliques = []
    pairs = []
    total = 0
    for i, size in enumerate(spec.sizes):
        size = int(size)
        if size < 2:
            raise GraphError(f"clique size must be >= 2, got {size}")
        if i == 0:
            verts = tuple(range(size))
            total = size
        else:
            j, v = spec.attachments[i - 1]
            if not 0 <= j < i:
                raise GraphError(f"clique {i} attaches to clique {j}, not yet realized")
            if v not in cliques[j]:
                raise GraphError(f"attachment vertex {v} is not in clique {j}")
            verts = (v,) + tuple(range(total, total + size - 1))
            total += size - 1
        cliques.append(verts)
        pairs.extend(itertools.combinations(verts, 2))
    return _graph_from_pairs(total, pairs)


def clique_path(sizes):
    """Chain of cliques, consecutive pairs sharing one cut vertex."""
    sizes = tuple(int(x) for x in sizes)
    if not sizes:
        raise GraphError("clique path needs at least one clique")
    for size in sizes:
        if size < 2:
            raise GraphError(f"clique size must be >= 2, got {size}")
    attachments = []
    last = sizes[0] - 1
    total = sizes[0]
    for size in sizes[1:]:
        attachments.append((len(attachments), last))
        last = total + size - 2
        total += size - 1
    return realize(CliqueTreeSpec(len(sizes), sizes, tuple(attachments)))


def clique_star(end_sizes, bridge_size, last_size):
    """Central clique holding adjacent cut vertices w=0 and w'=1, end cliques
    at w, one clique at w'. Diameter is exactly 3."""
    end_sizes = tuple(int(x) for x in end_sizes)
    if not end_sizes:
        raise GraphError("clique star needs at least one end clique at w")
    sizes = (int(bridge_size),) + end_sizes + (int(last_size),)
    if sizes[0] < 2:
        raise GraphError(f"clique size must be >= 2, got {sizes[0]}")
    attachments = tuple((0, 0) for _ in end_sizes) + ((0, 1),)
    return realize(CliqueTreeSpec(len(sizes), sizes, attachments))


def path_graph(n):
    n = int(n)
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return _graph_from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    n = int(n)
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return _graph_from_pairs(n, itertools.combinations(range(n), 2))


def broom(n):
    """T(n-3,1): the path 0-1-2 with n-3 pendant vertices attached at 0."""
    n = int(n)
    if n < 4:
        raise GraphError(f"broom needs n >= 4, got {n}")
    pairs = [(0, 1), (1, 2)] + [(0, v) for v in range(3, n)]
    return _graph_from_pairs(n, pairs)


def _dedup_insert(buckets, g):
    """Insert g into signature buckets unless an isomorphic copy is present."""
    bucket = buckets.setdefault(_iso_signature(g), [])
    for h in bucket:
        if are_isomorphic(g, h):
            return False
    bucket.append(g)
    return True


def _add_leaf(t, v):
    rows = list(t.rows) + [1 << v]
    rows[v] |= 1 << t.n
    return Graph(t.n + 1, rows)


@lru_cache(maxsize=None)
def _tree_classes(n):
    if n < 1:
        raise GraphError(f"tree enumeration needs n >= 1, got {n}")
    if n > 12:
        raise GraphError(f"tree enumeration capped at n = 12, got {n}")
    if n == 1:
        return (Graph(1, (0,)),)
    out = []
    buckets = {}
    for t in _tree_classes(n - 1):
        for v in range(t.n):
            g = _add_leaf(t, v)
            if _dedup_insert(buckets, g):
                out.append(g)
    return tuple(out)


def enumerate_trees(n):
    """One representative per isomorphism class of trees on n vertices."""
    yield from _tree_classes(int(n))


def _attach_vertex(g, mask):
    rows = list(g.rows) + [mask]
    for v in range(g.n):
        if (mask >> v) & 1:
            rows[v] |= 1 << g.n
    return Graph(g.n + 1, rows)


@lru_cache(maxsize=None)
def _connected_classes(n):
    if n < 1:
        raise GraphError(f"connected enumeration needs n >= 1, got {n}")
    if n > 7:
        raise GraphError(f"connected-graph enumeration capped at n = 7, got {n}")
    if n == 1:
        return (Graph(1, (0,)),)
    out = []
    buckets = {}
    # every connected graph arises by attaching its last non-cut vertex
    for g in _connected_classes(n - 1):
        for mask in range(1, 1 << g.n):
            h = _attach_vertex(g, mask)
            if _dedup_insert(buckets, h):
                out.append(h)
    return tuple(out)


def enumerate_connected_graphs(n):
    """One representative per isomorphism class of connected graphs, n <= 7."""
    yield from _connected_classes(int(n))


def _size_multisets(total, s, minimum=2):
    """Nondecreasing s-tuples of ints >= minimum summing to total, lex order."""
    if s == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (s - 1) + 1):
        for rest in _size_multisets(total - first, s - 1, first):
            yield (first,) + rest


def _glue_clique(g, v, size):
    n2 = g.n + size - 1
    rows = list(g.rows) + [0] * (size - 1)
    verts = [v] + list(range(g.n, n2))
    for a, b in itertools.combinations(verts, 2):
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n2, rows)


@lru_cache(maxsize=None)
def _clique_tree_classes(n, s):
    if n > 12:
        raise GraphError(f"clique-tree enumeration capped at n = 12, got n={n}")
    if s < 1 or n < s + 1:
        raise GraphError(f"no clique tree has n={n} vertices and s={s} blocks")
    out = []
    for sizes in _size_multisets(n + s - 1, s):
        # states: (signature, remaining multiset) -> graphs, grown one clique at a time
        level = {}
        remaining = list(sizes)
        for a in sorted(set(sizes)):
            rem = tuple(_removed(remaining, a))
            bucket = level.setdefault((_iso_signature(complete_graph(a)), rem), [])
            bucket.append(complete_graph(a))
        for _ in range(s - 1):
            nxt = {}
            for (sig, rem), bucket in level.items():
                for g in bucket:
                    for a in sorted(set(rem)):
                        rem2 = tuple(_removed(rem, a))
                        for v in range(g.n):
                            h = _glue_clique(g, v, a)
                            key = (_iso_signature(h), rem2)
                            hb = nxt.setdefault(key, [])
                            if not any(are_isomorphic(h, x) for x in hb):
                                hb.append(h)
            level = nxt
        for (sig, rem), bucket in level.items():
            out.extend(bucket)
    return tuple(out)


def _removed(seq, value):
    out = list(seq)
    out.remove(value)
    return out


def enumerate_clique_trees(n, s):
    """One representative per isomorphism class of clique trees with n vertices
    and s blocks; empty parameters are rejected rather than silently empty."""
    yield from _clique_tree_classes(int(n), int(s))


def random_clique_tree(n, s, seed):
    """Random clique tree, uniform over gluing specs (not isomorphism classes).

    Block sizes come from a uniform stars-and-bars composition of the size
    budget; each later clique attaches at a vertex drawn uniformly from the
    partial graph. Deterministic for a fixed (n, s, seed).
    """
    n, s = int(n), int(s)
    if s < 1 or n < s + 1:
        raise GraphError(f"no clique tree has n={n} vertices and s={s} blocks")
    rng = random.Random(seed)
    extra = n - s - 1
    if s == 1:
        sizes = [n]
    else:
        bars = sorted(rng.sample(range(extra + s - 1), s - 1))
        sizes = []
        prev = -1
        for b in bars:
            sizes.append(2 + (b - prev - 1))
            prev = b
        sizes.append(2 + (extra + s - 2 - prev))
    # attachments need the realized owner clique of each vertex
    owner = [0] * sizes[0]
    total = sizes[0]
    attachments = []
    for i in range(1, s):
        v = rng.randrange(total)
        attachments.append((owner[v], v))
        owner.extend([i] * (sizes[i] - 1))
        total += sizes[i] - 1
    return realize(CliqueTreeSpec(s, tuple(sizes), tuple(attachments)))


def _parse_int(token, what):
    try:
        return int(token)
    except ValueError:
        raise GraphError(f"{what} must be an integer, got {token!r}") from None


def parse_family_spec(text):
    """Build a graph from a family spec string.

    Grammar: path:n | complete:n | broom:n | cliquepath:n1,n2,... |
    cliquestar:e1,e2,...;bridge;last
    """
    name, sep, rest = text.partition(":")
    if not sep or not rest.strip():
        raise GraphError(f"family spec must look like 'name:args', got {text!r}")
    name = name.strip().lower()
    rest = rest.strip()
    if name == "path":
        return path_graph(_parse_int(rest, "path order"))
    if name == "complete":
        return complete_graph(_parse_int(rest, "complete-graph order"))
    if name == "broom":
        return broom(_parse_int(rest, "broom order"))
    if name == "cliquepath":
        sizes = [_parse_int(t, "clique size") for t in rest.split(",")]
        return clique_path(sizes)
    if name == "cliquestar":
        parts = rest.split(";")
        if len(parts) != 3:
            raise GraphError(
                f"cliquestar spec needs 'ends;bridge;last', got {text!r}"
            )
        ends = [_parse_int(t, "end-clique size") for t in parts[0].split(",")]
        bridge = _parse_int(parts[1], "bridge-clique size")
        last = _parse_int(parts[2], "last-clique size")
        return clique_star(ends, bridge, last)
    raise GraphError(f"unknown family {name!r}")
