"""Graph, cycle, and path value types plus the graph6 codec.

Vertices are dense integer ids 0..n-1 and adjacency lives in per-vertex
bitmasks, which keeps adjacency queries O(1) and feeds the search
kernels directly.  All three types are immutable after construction and
safe to share across workers.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import kernels

#: Hard vertex cap: every vertex set must fit in an int64 bitmask.
MAX_VERTICES = 32

#: Isomorphism checks are only supported at desk scale.
ISO_MAX_VERTICES = 12


class Graph6Error(ValueError):
    """Base class for graph6 decode failures."""


class Graph6LengthError(Graph6Error):
    """Record too short/long for its declared vertex count."""


class Graph6TrailingBitsError(Graph6Error):
    """Padding bits after the upper triangle are not all zero."""


class Graph6CharacterError(Graph6Error):
    """Byte outside the printable graph6 range 63..126."""


class Graph6SizeError(Graph6Error):
    """Declared vertex count exceeds the implementation cap."""


class Graph:
    """Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges)."""

    __slots__ = ("n", "_adj", "_adj_tuple")

    def __init__(self, n: int, edges=()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", np.array(adj, dtype=np.int64))
        object.__setattr__(self, "_adj_tuple", tuple(adj))

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adj_masks(cls, masks) -> "Graph":
        g = cls.__new__(cls)
        masks = [int(m) for m in masks]
        object.__setattr__(g, "n", len(masks))
        object.__setattr__(g, "_adj", np.array(masks, dtype=np.int64))
        object.__setattr__(g, "_adj_tuple", tuple(masks))
        return g

    @property
    def adj_masks(self) -> np.ndarray:
        """Per-vertex neighbor bitmasks (int64 array; do not mutate)."""
        return self._adj

    def neighbor_mask(self, v: int) -> int:
        return self._adj_tuple[v]

    def neighbors(self, v: int) -> tuple:
        return tuple(u for u in range(self.n) if (self._adj_tuple[v] >> u) & 1)

    def degree(self, v: int) -> int:
        return bin(self._adj_tuple[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj_tuple[u] >> v) & 1)

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if (self._adj_tuple[u] >> v) & 1]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self._adj_tuple == other._adj_tuple)

    def __hash__(self):
        return hash((self.n, self._adj_tuple))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# graph6 codec (dense format only; 6-bit big-endian upper triangle, offset 63)

def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 record; raises a distinct Graph6Error subclass
    for each kind of malformation the format definition distinguishes."""
    if isinstance(line, bytes):
        data = line.rstrip(b"\r\n")
    else:
        data = line.rstrip("\r\n").encode("ascii", errors="surrogateescape")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6LengthError("empty graph6 record")
    if data[:1] in (b":", b";", b"&"):
        raise Graph6Error("sparse6/digraph6 headers are not supported")
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6CharacterError(f"byte {byte} outside graph6 range 63..126")
    if data[0] == 126:
        # multi-byte n; always over our cap
        raise Graph6SizeError("vertex count over implementation cap")
    n = data[0] - 63
    if n < 1:
        raise Graph6LengthError("graph6 record declares zero vertices")
    if n > MAX_VERTICES:
        raise Graph6SizeError(f"vertex count {n} over cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise Graph6LengthError(
            f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}")
    bits = 0
    for byte in body:
        bits = (bits << 6) | (byte - 63)
    pad = nbytes * 6 - nbits
    if pad and (bits & ((1 << pad) - 1)):
        raise Graph6TrailingBitsError("nonzero padding bits in graph6 record")
    bits >>= pad
    edges = []
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> k) & 1:
                edges.append((u, v))
            k -= 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode g under its current labeling; inverse of parse_graph6."""
    n = g.n
    bits = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            bits = (bits << 1) | (1 if g.has_edge(u, v) else 0)
    nbytes = (nbits + 5) // 6
    bits <<= nbytes * 6 - nbits
    out = [chr(63 + n)]
    for i in range(nbytes - 1, -1, -1):
        out.append(chr(63 + ((bits >> (6 * i)) & 63)))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Edge-list text: one "u v" pair per line, 0-based, '#' comments."""
    edges = []
    top = -1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' pair, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise ValueError("vertex ids must be non-negative")
        edges.append((u, v))
        top = max(top, u, v)
    if top < 0:
        raise ValueError("edge list is empty")
    return Graph(top + 1, edges)


# ---------------------------------------------------------------------------
# constructions and basic operations

def petersen() -> Graph:
    """Kneser construction: vertices are 2-subsets of {1..5}, edges join
    disjoint pairs."""
    pairs = list(combinations(range(1, 6), 2))
    edges = []
    for i, a in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            if not set(a) & set(pairs[j]):
                edges.append((i, j))
    return Graph(10, edges)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def delete_vertices(g: Graph, s) -> tuple:
    """Induced subgraph on V(g)\\s, relabeled densely.

    Returns (subgraph, old_to_new) where old_to_new maps every retained
    original id to its new id; the caller inverts it to translate
    witnesses back.
    """
    s = set(s)
    if not s <= set(range(g.n)):
        raise ValueError("deletion set contains vertices outside the graph")
    keep = [v for v in range(g.n) if v not in s]
    if not keep:
        raise ValueError("cannot delete every vertex")
    old_to_new = {v: i for i, v in enumerate(keep)}
    edges = [(old_to_new[u], old_to_new[v]) for u, v in g.edges()
             if u in old_to_new and v in old_to_new]
    return Graph(len(keep), edges), old_to_new


def component_count(g: Graph) -> int:
    full = (1 << g.n) - 1
    return int(kernels._component_count(g.adj_masks, full))


def components(g: Graph) -> list:
    """Connected components as sorted vertex lists."""
    seen = set()
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for v in g.neighbors(u):
                if v not in comp:
                    comp.add(v)
                    frontier.append(v)
        seen |= comp
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return component_count(g) == 1


def canonical_form(g: Graph) -> tuple:
    """Canonical certificate (hashable) and the relabeling achieving it.

    Returns (cert, perm) where perm[new_position] = old_vertex and two
    graphs have equal certs iff they are isomorphic.
    """
    words, perm = kernels._canonical_form(g.adj_masks, g.n)
    cert = (g.n,) + tuple(int(w) for w in words)
    return cert, [int(p) for p in perm]


def canonical_relabel(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    _, perm = canonical_form(g)
    # perm[pos] = old vertex; relabel wants old -> new
    old_to_new = [0] * g.n
    for pos, old in enumerate(perm):
        old_to_new[old] = pos
    return g.relabel(old_to_new)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test at desk scale (n <= 12)."""
    if g.n > ISO_MAX_VERTICES or h.n > ISO_MAX_VERTICES:
        raise ValueError(f"isomorphism test limited to n <= {ISO_MAX_VERTICES}")
    if g.n != h.n:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != \
            sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g)[0] == canonical_form(h)[0]


# ---------------------------------------------------------------------------
# oriented cycle / path value types

class Cycle:
    """Oriented cycle given as a vertex sequence.

    Lengths 1 and 2 are the degenerate vertex/edge forms; rotation
    arithmetic requires length >= 3.
    """

    __slots__ = ("vertices", "_pos")

    def __init__(self, g: Graph, vertices):
        vs = tuple(int(v) for v in vertices)
        if not vs:
            raise ValueError("cycle needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        for v in vs:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} outside graph")
        if len(vs) == 2:
            if not g.has_edge(vs[0], vs[1]):
                raise ValueError("degenerate 2-cycle requires an edge")
        elif len(vs) >= 3:
            for i, u in enumerate(vs):
                if not g.has_edge(u, vs[(i + 1) % len(vs)]):
                    raise ValueError(
                        f"consecutive cycle vertices {u}, {vs[(i + 1) % len(vs)]}"
                        " are not adjacent")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(vs)})

    def __setattr__(self, *_):
        raise AttributeError("Cycle is immutable")

    def __len__(self):
        # |C| = edge count = vertex count for length >= 3; degenerate
        # forms have lengths 1 and 2 by convention
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._pos

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Cycle({list(self.vertices)})"

    def position(self, v: int) -> int:
        return self._pos[v]

    def vertex_set(self) -> set:
        return set(self.vertices)

    def step(self, x: int, h: int) -> int:
        """x^{+h} for h > 0, x^{-|h|} for h < 0 along the orientation."""
        if len(self.vertices) < 3:
            raise ValueError("rotation arithmetic requires length >= 3")
        if x not in self._pos:
            raise ValueError(f"vertex {x} not on cycle")
        return self.vertices[(self._pos[x] + h) % len(self.vertices)]

    def arc_length(self, u: int, v: int) -> int:
        """Edge count of u ->C-> v along the orientation."""
        if len(self.vertices) < 3:
            raise ValueError("rotation arithmetic requires length >= 3")
        return (self._pos[v] - self._pos[u]) % len(self.vertices)

    def arc(self, u: int, v: int) -> list:
        """Vertices of u ->C-> v inclusive, along the orientation."""
        k = self.arc_length(u, v)
        i = self._pos[u]
        n = len(self.vertices)
        return [self.vertices[(i + j) % n] for j in range(k + 1)]

    def reversed(self, g: Graph) -> "Cycle":
        return Cycle(g, tuple(reversed(self.vertices)))

    def canonical(self) -> "Cycle":
        """Lexicographically least rotation/reflection (same object shape)."""
        vs = self.vertices
        if len(vs) < 3:
            best = min(vs), *sorted(vs)[1:]
            out = Cycle.__new__(Cycle)
            object.__setattr__(out, "vertices", tuple(sorted(vs)))
            object.__setattr__(out, "_pos",
                               {v: i for i, v in enumerate(sorted(vs))})
            return out
        n = len(vs)
        cands = []
        for seq in (vs, tuple(reversed(vs))):
            for r in range(n):
                cands.append(seq[r:] + seq[:r])
        best = min(cands)
        out = Cycle.__new__(Cycle)
        object.__setattr__(out, "vertices", best)
        object.__setattr__(out, "_pos", {v: i for i, v in enumerate(best)})
        return out


class Path:
    """Oriented path given as a vertex sequence; |P| = edge count."""

    __slots__ = ("vertices",)

    def __init__(self, g: Graph, vertices):
        vs = tuple(int(v) for v in vertices)
        if not vs:
            raise ValueError("path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("path vertices must be distinct")
        for v in vs:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} outside graph")
        for u, v in zip(vs, vs[1:]):
            if not g.has_edge(u, v):
                raise ValueError(f"consecutive path vertices {u}, {v} not adjacent")
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, *_):
        raise AttributeError("Path is immutable")

    def __len__(self):
        return len(self.vertices) - 1

    def __contains__(self, v):
        return v in self.vertices

    def __eq__(self, other):
        return isinstance(other, Path) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Path({list(self.vertices)})"

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def vertex_set(self) -> set:
        return set(self.vertices)

    def reversed(self, g: Graph) -> "Path":
        return Path(g, tuple(reversed(self.vertices)))


def cycle_step(c: Cycle, x: int, h: int) -> int:
    return c.step(x, h)
