"""Exhaustive enumeration of connected graphs up to isomorphism.

Vertex augmentation: every connected graph on n vertices arises by
attaching a new vertex (nonempty neighborhood) to some connected graph
on n-1 vertices, because every connected graph has a non-cut vertex.
Children are deduplicated by canonical certificate and emitted in
canonical form, so each isomorphism class appears exactly once.

The internal enumerator tops out at n = 10 (n = 11 class counts are out
of desk scope); an optional max-degree cap prunes the augmentation for
bounded-degree sweeps such as the cubic n = 10 run.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph import Graph, canonical_form

ENUMERATION_CAP = 10

#: Published counts of connected graphs up to isomorphism, used by tests.
CONNECTED_GRAPH_COUNTS = {
    1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11_117, 9: 261_080,
}


def _children(parent: Graph, max_degree: int | None):
    """All one-vertex connected extensions of parent (labeled)."""
    n = parent.n
    if max_degree is None:
        attach = list(range(n))
        cap = n
    else:
        attach = [v for v in range(n) if parent.degree(v) < max_degree]
        cap = max_degree
    base = list(parent.adj_masks)
    for k in range(1, min(cap, len(attach)) + 1):
        for subset in combinations(attach, k):
            masks = [int(m) for m in base] + [0]
            newbit = 1 << n
            for v in subset:
                masks[v] |= newbit
                masks[n] |= 1 << v
            yield Graph.from_adj_masks(masks)


def connected_graphs(n: int, max_degree: int | None = None) -> Iterator[Graph]:
    """Stream one canonical representative per connected isomorphism
    class on n vertices (optionally with all degrees <= max_degree)."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"internal enumerator supports 1 <= n <= {ENUMERATION_CAP}")
    if n == 1:
        yield Graph(1)
        return
    layer = [Graph(1)]
    for size in range(2, n + 1):
        seen = set()
        next_layer = [] if size < n else None
        for parent in layer:
            for child in _children(parent, max_degree):
                cert, perm = canonical_form(child)
                if cert in seen:
                    continue
                seen.add(cert)
                old_to_new = [0] * child.n
                for pos, old in enumerate(perm):
                    old_to_new[old] = pos
                canon = child.relabel(old_to_new)
                if size == n:
                    yield canon
                else:
                    next_layer.append(canon)
        layer = next_layer


def count_connected_graphs(n: int, max_degree: int | None = None) -> int:
    return sum(1 for _ in connected_graphs(n, max_degree))
