"""Exact graph parameters: minimum degree, connectivity, toughness,
circumference — each with a witness and an independent brute-force
oracle for cross-checking.

All toughness arithmetic is exact rational; the optimized searches live
in the kernels module, the oracles here are deliberately naive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import kernels
from .graph import Graph, Cycle, Path, delete_vertices, is_connected
from .rational import ExactRational


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def connectivity(g: Graph) -> int:
    """Vertex connectivity via Menger (max disjoint paths over
    non-adjacent pairs); n-1 for complete graphs, 0 when disconnected."""
    return int(kernels._vertex_connectivity(g.adj_masks, g.n))


def connectivity_oracle(g: Graph) -> int:
    """Definition-level oracle: smallest vertex set whose removal
    disconnects the graph, by subset enumeration."""
    if not is_connected(g):
        return 0
    full_edges = g.n * (g.n - 1) // 2
    if g.edge_count() == full_edges:
        return g.n - 1
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            rest = [v for v in range(g.n) if v not in cut]
            if len(rest) < 2:
                continue
            sub, _ = delete_vertices(g, cut)
            from .graph import component_count
            if component_count(sub) > 1:
                return k
    return g.n - 1


def toughness(g: Graph) -> tuple:
    """(tau, witness) with tau exact; witness is a minimizing cut as a
    sorted vertex list, or None when tau is infinite (complete graphs).
    Disconnected graphs give (0, []) with the empty cut."""
    size, comps, mask = kernels._toughness_scan(g.adj_masks, g.n)
    size, comps, mask = int(size), int(comps), int(mask)
    if comps == 0:
        return ExactRational.infinity(), None
    witness = [v for v in range(g.n) if (mask >> v) & 1]
    return ExactRational(size, comps), witness


def toughness_oracle(g: Graph) -> ExactRational:
    """Full subset enumeration straight off the definition; exact."""
    best = None
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            rest = [v for v in range(g.n) if v not in cut]
            if len(rest) < 2:
                continue
            sub, _ = delete_vertices(g, cut)
            from .graph import component_count
            comps = component_count(sub)
            if comps > 1:
                r = Fraction(k, comps)
                if best is None or r < best:
                    best = r
    if best is None:
        return ExactRational.infinity()
    return ExactRational.from_fraction(best)


def is_t_tough(g: Graph, t: ExactRational) -> bool:
    if t.is_infinite:
        raise ValueError("t must be finite")
    tau, _ = toughness(g)
    return tau >= t


def _search_order(g: Graph):
    """Highest-degree start vertex first, ids ascending on ties."""
    return np.array(sorted(range(g.n), key=lambda v: (-g.degree(v), v)),
                    dtype=np.int64)


def _degenerate_circumference(g: Graph):
    # no cycle of length >= 3: 2 with an edge witness, else 1
    for u, v in g.edges():
        return 2, Cycle(g, (u, v)).canonical()
    return 1, Cycle(g, (0,))


def circumference(g: Graph) -> tuple:
    """(length, witness Cycle) of a longest cycle.

    Branch-and-bound DFS; acyclic graphs follow the degenerate
    convention (an edge counts as a 2-cycle, a vertex as a 1-cycle).
    """
    ln, wit = kernels._longest_cycle(g.adj_masks, g.n, _search_order(g))
    ln = int(ln)
    if ln < 3:
        return _degenerate_circumference(g)
    return ln, Cycle(g, [int(v) for v in wit]).canonical()


def circumference_oracle(g: Graph) -> int:
    """Subset-DP cross-oracle (length only), exact for n <= 20."""
    ln = int(kernels._circumference_dp(g.adj_masks, g.n))
    if ln < 3:
        return _degenerate_circumference(g)[0]
    return ln


def is_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        raise ValueError("hamiltonicity requires n >= 3")
    return circumference(g)[0] == g.n


def is_dominating_cycle(g: Graph, c: Cycle) -> bool:
    """True iff G \\ C is edgeless."""
    if c.vertex_set() == set(range(g.n)):
        return True
    sub, _ = delete_vertices(g, c.vertex_set())
    return sub.edge_count() == 0


def _longest_paths_in(h: Graph, cap: int | None = None):
    """All maximum-length paths of h (deduplicated up to reversal).

    Small-graph DFS; h is the off-cycle remainder so it stays tiny.
    """
    best_len = 0
    out = []
    truncated = False

    def record(seq):
        nonlocal best_len, out
        ln = len(seq) - 1
        if ln > best_len:
            best_len = ln
            out = []
        if ln == best_len:
            rev = tuple(reversed(seq))
            key = min(tuple(seq), rev)
            out.append(key)

    def dfs(seq, visited):
        nonlocal truncated
        extended = False
        for w in h.neighbors(seq[-1]):
            if w in visited:
                continue
            extended = True
            seq.append(w)
            visited.add(w)
            dfs(seq, visited)
            visited.remove(w)
            seq.pop()
        if not extended:
            record(seq)

    for v in range(h.n):
        dfs([v], {v})
    uniq = sorted(set(out))
    if cap is not None and len(uniq) > cap:
        uniq = uniq[:cap]
        truncated = True
    return best_len, [Path(h, seq) for seq in uniq], truncated


def longest_path_outside(g: Graph, c: Cycle) -> Path | None:
    """A longest path of G \\ C in g's labels, or None when C spans g.
    Deterministic: lexicographically least among the longest."""
    outside = set(range(g.n)) - c.vertex_set()
    if not outside:
        return None
    sub, old_to_new = delete_vertices(g, c.vertex_set())
    new_to_old = {v: k for k, v in old_to_new.items()}
    _, paths, _ = _longest_paths_in(sub)
    seqs = sorted(tuple(new_to_old[v] for v in p.vertices) for p in paths)
    best = min(seqs[0], tuple(reversed(seqs[0])))
    return Path(g, best)


def all_longest_paths_outside(g: Graph, c: Cycle, cap: int = 10_000):
    """Every longest path of G \\ C (up to reversal), plus a truncation flag."""
    outside = set(range(g.n)) - c.vertex_set()
    if not outside:
        return [], False
    sub, old_to_new = delete_vertices(g, c.vertex_set())
    new_to_old = {v: k for k, v in old_to_new.items()}
    _, paths, truncated = _longest_paths_in(sub, cap=cap)
    out = []
    for p in paths:
        seq = tuple(new_to_old[v] for v in p.vertices)
        out.append(Path(g, min(seq, tuple(reversed(seq)))))
    return sorted(out, key=lambda p: p.vertices), truncated


def enumerate_longest_cycles(g: Graph, cap: int = 10_000) -> tuple:
    """All longest cycles up to rotation/reflection, truncated at cap.

    Returns (cycles, truncated).  Exhaustive DFS; intended for n <= 12.
    """
    target, _ = circumference(g)
    if target < 3:
        return [circumference(g)[1]], False
    found = set()
    truncated = False
    n = g.n

    # cycles anchored at their minimum vertex; reflection killed by
    # requiring second vertex < last vertex
    def dfs(a, seq, visited):
        nonlocal truncated
        if truncated:
            return
        if len(seq) == target:
            if g.has_edge(seq[-1], a) and seq[1] < seq[-1]:
                found.add(tuple(seq))
                if len(found) > cap:
                    truncated = True
            return
        u = seq[-1]
        for w in g.neighbors(u):
            if w <= a or w in visited:
                continue
            # prune: enough fresh vertices reachable and anchor reachable
            seq.append(w)
            visited.add(w)
            if len(seq) == target or _can_complete(a, seq, visited):
                dfs(a, seq, visited)
            visited.remove(w)
            seq.pop()

    def _can_complete(a, seq, visited):
        need = target - len(seq)
        allowed = [v for v in range(a + 1, n) if v not in visited]
        if len(allowed) < need:
            return False
        return True

    for a in range(n):
        dfs(a, [a], {a})
        if truncated:
            break
    cycles = sorted(found)
    if len(cycles) > cap:
        cycles = cycles[:cap]
        truncated = True
    return [Cycle(g, seq) for seq in cycles], truncated


@dataclass(frozen=True)
class InvariantReport:
    """The headline parameter vector (n, delta, kappa, c, tau)."""
    n: int
    delta: int
    kappa: int
    circumference: int
    circumference_witness: Cycle
    toughness: ExactRational
    toughness_witness: list | None
    hamiltonian: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "kappa": self.kappa,
            "circumference": self.circumference,
            "circumference_witness": list(self.circumference_witness.vertices),
            "toughness": self.toughness.to_json(),
            "toughness_witness": (None if self.toughness_witness is None
                                  else list(self.toughness_witness)),
            "hamiltonian": self.hamiltonian,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def invariant_report(g: Graph) -> InvariantReport:
    delta = min_degree(g)
    kappa = connectivity(g)
    c, cyc = circumference(g)
    tau, cut = toughness(g)
    return InvariantReport(
        n=g.n, delta=delta, kappa=kappa,
        circumference=c, circumference_witness=cyc,
        toughness=tau, toughness_witness=cut,
        hamiltonian=(g.n >= 3 and c == g.n),
    )
