"""Segment decomposition of a (longest cycle, outside path) pair and
executable checkers for the structural lemmas and claims.

A decomposition fixes a longest cycle C with orientation, a path
P = x -> y in G \\ C, the attachment vertices xi_1..xi_s (the cycle
neighborhoods of x and y in cyclic order), the elementary segments
I_i = xi_i ->C-> xi_{i+1} and their interiors.  Intermediate paths join
interiors of two distinct segments while avoiding C and P internally.

Checkers test the contrapositive statements (distance condition implies
non-adjacency, hypothesis implies length bound); the constructive cycle
surgeries live in the extension module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, Cycle, Path, delete_vertices, write_graph6
from .invariants import (
    all_longest_paths_outside,
    circumference,
    connectivity,
    enumerate_longest_cycles,
    min_degree,
)


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class SegmentDecomposition:
    """Attachments, segments and interiors of a (C, P) pair."""
    graph: Graph
    cycle: Cycle
    path: Path
    xi: tuple                 # attachment vertices in cyclic order
    segments: tuple           # tuple of vertex tuples, xi_i .. xi_{i+1}
    interiors: tuple          # tuple of vertex tuples, strictly between
    p_bar: int
    sigma1: int               # |N_C(x) \ N_C(y)|
    sigma2: int               # |N_C(y) \ N_C(x)|
    shared: int               # |N_C(x) ∩ N_C(y)|

    @property
    def s(self) -> int:
        return len(self.xi)

    def segment_length(self, i: int) -> int:
        """|I_i| = edge count of the segment arc."""
        if self.s == 1:
            return len(self.cycle)
        return self.cycle.arc_length(self.xi[i], self.xi[(i + 1) % self.s])

    def nc_equal(self) -> bool:
        return self.sigma1 == 0 and self.sigma2 == 0

    def interior_index(self, v: int) -> int:
        for i, inter in enumerate(self.interiors):
            if v in inter:
                return i
        raise ValueError(f"vertex {v} is not in any segment interior")


@dataclass(frozen=True)
class IntermediatePath:
    """Path z -> w joining interiors of two distinct segments; internal
    vertices avoid C and P."""
    path: Path
    seg_a: int
    seg_b: int

    @property
    def z(self):
        return self.path.start

    @property
    def w(self):
        return self.path.end

    def __len__(self):
        return len(self.path)

    def is_edge(self) -> bool:
        return len(self.path) == 1


@dataclass
class LemmaVerdict:
    """Outcome of one checkable statement on one configuration.

    holds <=> (not hypothesis_met) or bound_observed >= bound_required.
    Claim-style checks count configurations: observed = satisfied,
    required = eligible.
    """
    lemma: str
    hypothesis_met: bool
    bound_required: int
    bound_observed: int
    holds: bool
    context: dict = field(default_factory=dict)

    def to_json(self, graph6: str | None = None) -> dict:
        return {
            "lemma": self.lemma,
            "graph6": graph6,
            "hypothesis_met": self.hypothesis_met,
            "bound_required": self.bound_required,
            "bound_observed": self.bound_observed,
            "holds": self.holds,
            "witness": self.context.get("witness"),
        }

    def to_json_line(self, graph6: str | None = None) -> str:
        return json.dumps(self.to_json(graph6), sort_keys=True)


def _verdict(lemma, met, required, observed, **context):
    holds = (not met) or observed >= required
    return LemmaVerdict(lemma, met, required, observed, holds, dict(context))


def decompose(g: Graph, c: Cycle, p: Path) -> SegmentDecomposition:
    """Elementary segments on C created by N_C(x) ∪ N_C(y)."""
    if len(c) < 3:
        raise DecompositionError("decomposition requires a real cycle")
    cset = c.vertex_set()
    if cset & p.vertex_set():
        raise DecompositionError("path intersects the cycle")
    x, y = p.start, p.end
    ncx = {v for v in cset if g.has_edge(x, v)}
    ncy = {v for v in cset if g.has_edge(y, v)}
    attach = ncx | ncy
    if not attach:
        raise DecompositionError("path ends have no cycle attachments")
    xi = tuple(v for v in c.vertices if v in attach)
    s = len(xi)
    segments = []
    interiors = []
    for i in range(s):
        a = xi[i]
        b = xi[(i + 1) % s]
        if s == 1:
            seg = list(c.vertices[c.position(a):] + c.vertices[:c.position(a)]) + [a]
        else:
            seg = c.arc(a, b)
        segments.append(tuple(seg))
        interiors.append(tuple(v for v in seg[1:-1] if v not in attach))
    return SegmentDecomposition(
        graph=g, cycle=c, path=p, xi=xi,
        segments=tuple(segments), interiors=tuple(interiors),
        p_bar=len(p),
        sigma1=len(ncx - ncy), sigma2=len(ncy - ncx), shared=len(ncx & ncy),
    )


def intermediate_paths(g: Graph, d: SegmentDecomposition, a: int, b: int,
                       max_internal: int | None = 0) -> list:
    """All intermediate paths between I_a* and I_b* with at most
    max_internal internal vertices (None = unbounded), deduplicated up
    to reversal."""
    s = d.s
    if not (0 <= a < s and 0 <= b < s):
        raise IndexError("segment index out of range")
    if a == b:
        raise ValueError("intermediate paths join distinct segments")
    forbidden = d.cycle.vertex_set() | d.path.vertex_set()
    free = [v for v in range(g.n) if v not in forbidden]
    ia = set(d.interiors[a])
    ib = set(d.interiors[b])
    limit = len(free) if max_internal is None else min(max_internal, len(free))
    out = []

    for z in sorted(ia):
        # DFS over internal vertices only
        def dfs(seq, visited):
            u = seq[-1]
            for w in g.neighbors(u):
                if w in ib:
                    out.append(tuple(seq) + (w,))
            if len(seq) - 1 < limit:
                for w in g.neighbors(u):
                    if w in visited or w in forbidden or w not in free:
                        continue
                    seq.append(w)
                    visited.add(w)
                    dfs(seq, visited)
                    visited.remove(w)
                    seq.pop()

        dfs([z], {z})
    # a-side start means no reversal duplicates within one (a, b) call,
    # but normalize orientation anyway for (b, a) symmetry
    paths = []
    for seq in sorted(set(out)):
        paths.append(IntermediatePath(Path(g, seq), a, b))
    return paths


def upsilon(g: Graph, d: SegmentDecomposition, a: int, b: int) -> list:
    """The full intermediate-path set between I_a and I_b."""
    return intermediate_paths(g, d, a, b, max_internal=None)


def has_independent_pair(paths) -> bool:
    """True iff the (all-edge) collection contains two edges sharing no
    endpoint."""
    for p in paths:
        if not p.is_edge():
            raise ValueError("independent-pair test requires single edges")
    for i, p in enumerate(paths):
        for q in paths[i + 1:]:
            if not ({p.z, p.w} & {q.z, q.w}):
                return True
    return False


# ---------------------------------------------------------------------------
# lemma checkers

def check_lemma1(g: Graph, c: Cycle, p: Path) -> LemmaVerdict:
    """Length bound for longest cycles when the outside-path ends attach
    differently (3*delta + max(sigma1, sigma2) - 1 at p_bar = 1,
    max(2*p_bar + 8, 4*delta - 2*p_bar) at p_bar >= 2)."""
    cset = c.vertex_set()
    x, y = p.start, p.end
    ncx = {v for v in cset if g.has_edge(x, v)}
    ncy = {v for v in cset if g.has_edge(y, v)}
    p_bar = len(p)
    met = (p_bar >= 1 and len(ncx) >= 2 and len(ncy) >= 2 and ncx != ncy)
    if not met:
        return _verdict("lemma1", False, 0, len(c))
    delta = min_degree(g)
    sigma1 = len(ncx - ncy)
    sigma2 = len(ncy - ncx)
    if p_bar == 1:
        required = 3 * delta + max(sigma1, sigma2) - 1
    else:
        required = max(2 * p_bar + 8, 4 * delta - 2 * p_bar)
    return _verdict("lemma1", True, required, len(c),
                    witness={"p": list(p.vertices), "c": list(c.vertices)})


def check_lemma2(g: Graph, c: Cycle, p: Path) -> list:
    """Segment-pair length bounds under shared attachments:
    (a1) per intermediate path L: |I_a| + |I_b| >= 2*p_bar + 2|L| + 4;
    (a2) all-edge Upsilon of size i in {1,2,3}: >= 2*p_bar + i + 5;
    (a3) two independent intermediate edges: >= 2*p_bar + 8.
    """
    cset = c.vertex_set()
    x, y = p.start, p.end
    ncx = {v for v in cset if g.has_edge(x, v)}
    ncy = {v for v in cset if g.has_edge(y, v)}
    if not (ncx == ncy and len(ncx) >= 2):
        return [_verdict("lemma2", False, 0, 0)]
    d = decompose(g, c, p)
    p_bar = d.p_bar
    out = []
    for a in range(d.s):
        for b in range(a + 1, d.s):
            ups = upsilon(g, d, a, b)
            if not ups:
                continue
            pair_len = d.segment_length(a) + d.segment_length(b)
            for L in ups:
                out.append(_verdict(
                    "lemma2a1", True, 2 * p_bar + 2 * len(L) + 4, pair_len,
                    witness={"a": a, "b": b, "L": list(L.path.vertices)}))
            if all(L.is_edge() for L in ups):
                i = len(ups)
                if i in (1, 2, 3):
                    out.append(_verdict(
                        "lemma2a2", True, 2 * p_bar + i + 5, pair_len,
                        witness={"a": a, "b": b, "i": i}))
                if has_independent_pair(ups):
                    out.append(_verdict(
                        "lemma2a3", True, 2 * p_bar + 8, pair_len,
                        witness={"a": a, "b": b}))
    if not out:
        return [_verdict("lemma2", False, 0, 0)]
    return out


def check_lemma3(g: Graph, cycle_cap: int = 10_000,
                 path_cap: int = 10_000) -> LemmaVerdict:
    """Either |C| >= kappa * (delta + 1) or some longest outside path
    attaches with both ends at >= 2 cycle vertices (per longest cycle)."""
    c_len, _ = circumference(g)
    if c_len < 3 or c_len == g.n:
        # no longest cycle leaves vertices outside: disjunction vacuous
        return _verdict("lemma3", False, 0, 0)
    kappa = connectivity(g)
    delta = min_degree(g)
    required = kappa * (delta + 1)
    cycles, _ = enumerate_longest_cycles(g, cap=cycle_cap)
    met = False
    holds = True
    for c in cycles:
        if c.vertex_set() == set(range(g.n)):
            continue  # Hamilton case: disjunction vacuous
        met = True
        if c_len >= required:
            continue
        paths, _ = all_longest_paths_outside(g, c, cap=path_cap)
        ok = False
        for p in paths:
            cset = c.vertex_set()
            ncx = sum(1 for v in cset if g.has_edge(p.start, v))
            ncy = sum(1 for v in cset if g.has_edge(p.end, v))
            if ncx >= 2 and ncy >= 2:
                ok = True
                break
        if not ok:
            holds = False
    v = LemmaVerdict("lemma3", met, required, c_len,
                     (not met) or holds, {})
    return v


def check_claims_1_2(g: Graph, d: SegmentDecomposition) -> list:
    """Distance-eligible configurations force non-adjacency.

    Claim 1: if |xi_a ->C-> y| + |xi_b ->C-> z| <= p_bar + 2 (or the
    reflected condition) for interior vertices y, z of distinct
    segments, then yz is a non-edge.
    Claim 2: if xi_a^- xi_b^+ is an edge and y in I_f* sits within
    p_bar + 1 of xi_f (with a, b, f in cyclic order), then y xi_a and
    y xi_b are non-edges.
    Counts: observed = satisfied configurations, required = eligible.
    """
    met = d.nc_equal()
    if not met:
        return [_verdict("claim1", False, 0, 0), _verdict("claim2", False, 0, 0)]
    c = d.cycle
    p_bar = d.p_bar
    s = d.s
    eligible1 = satisfied1 = 0
    viol1 = None
    for a in range(s):
        for b in range(s):
            if a == b:
                continue
            xa, xb = d.xi[a], d.xi[b]
            xa1, xb1 = d.xi[(a + 1) % s], d.xi[(b + 1) % s]
            for y in d.interiors[a]:
                for z in d.interiors[b]:
                    fwd = c.arc_length(xa, y) + c.arc_length(xb, z)
                    bwd = c.arc_length(y, xa1) + c.arc_length(z, xb1)
                    if fwd <= p_bar + 2 or bwd <= p_bar + 2:
                        eligible1 += 1
                        if not g.has_edge(y, z):
                            satisfied1 += 1
                        elif viol1 is None:
                            viol1 = [y, z]
    eligible2 = satisfied2 = 0
    viol2 = None
    if s >= 3:
        for a in range(s):
            for b in range(s):
                for f in range(s):
                    if len({a, b, f}) != 3:
                        continue
                    # cyclic order a, b, f along the orientation
                    if not (c.arc_length(d.xi[a], d.xi[b])
                            < c.arc_length(d.xi[a], d.xi[f])):
                        continue
                    xam = c.step(d.xi[a], -1)
                    xbp = c.step(d.xi[b], +1)
                    if not g.has_edge(xam, xbp):
                        continue
                    for y in d.interiors[f]:
                        if c.arc_length(d.xi[f], y) <= p_bar + 1:
                            for other in (d.xi[a], d.xi[b]):
                                eligible2 += 1
                                if not g.has_edge(y, other):
                                    satisfied2 += 1
                                elif viol2 is None:
                                    viol2 = [y, other]
    out = [
        _verdict("claim1", met and eligible1 > 0, eligible1, satisfied1,
                 witness=viol1),
        _verdict("claim2", met and eligible2 > 0, eligible2, satisfied2,
                 witness=viol2),
    ]
    return out


def _pairwise_claims(d: SegmentDecomposition, cap: int, floor: int,
                     tag: str) -> list:
    """Shared sub-claim battery: pairwise segment-length sums are capped
    at ``cap``; extremal segments force the others down to ``floor``."""
    lens = [d.segment_length(i) for i in range(d.s)]
    out = []
    # (1) pairwise sums <= cap
    eligible = satisfied = 0
    for i in range(d.s):
        for j in range(i + 1, d.s):
            eligible += 1
            if lens[i] + lens[j] <= cap:
                satisfied += 1
    out.append(_verdict(f"{tag}.1", eligible > 0, eligible, satisfied))
    # (2) a pair meeting the cap exactly forces every other segment to floor
    eligible = satisfied = 0
    for i in range(d.s):
        for j in range(i + 1, d.s):
            if lens[i] + lens[j] == cap:
                for k in range(d.s):
                    if k in (i, j):
                        continue
                    eligible += 1
                    if lens[k] == floor:
                        satisfied += 1
    out.append(_verdict(f"{tag}.2", eligible > 0, eligible, satisfied))
    # (3) one segment of length cap - floor forces the others to floor
    eligible = satisfied = 0
    for i in range(d.s):
        if lens[i] == cap - floor:
            for k in range(d.s):
                if k == i:
                    continue
                eligible += 1
                if lens[k] == floor:
                    satisfied += 1
    out.append(_verdict(f"{tag}.3", eligible > 0, eligible, satisfied))
    # (4) at most three segments exceed the floor
    long_count = sum(1 for ln in lens if ln >= floor + 1)
    out.append(_verdict(f"{tag}.4", True, 1, 1 if long_count <= 3 else 0))
    # (5) three segments above the floor are all exactly floor + 1
    eligible = satisfied = 0
    longs = [ln for ln in lens if ln >= floor + 1]
    if len(longs) >= 3:
        for ln in longs:
            eligible += 1
            if ln == floor + 1:
                satisfied += 1
    out.append(_verdict(f"{tag}.5", eligible > 0, eligible, satisfied))
    return out


def check_claims_3_4(report, d: SegmentDecomposition) -> list:
    """Arithmetic segment-length consequences, gated on tau > 1 and
    c <= 2*delta + 3 (with p_bar = 0, s = delta for the first battery
    and p_bar = 1, s = delta - 1 for the second)."""
    from .rational import ExactRational

    tau_gate = report.toughness > ExactRational(1)
    c_gate = report.circumference <= 2 * report.delta + 3
    out = []
    if tau_gate and c_gate and d.p_bar == 0 and d.s == report.delta:
        out.extend(_pairwise_claims(d, cap=7, floor=2, tag="claim3"))
    else:
        out.append(_verdict("claim3", False, 0, 0))
    if tau_gate and c_gate and d.p_bar == 1 and d.s == report.delta - 1:
        out.extend(_pairwise_claims(d, cap=9, floor=3, tag="claim4"))
    else:
        out.append(_verdict("claim4", False, 0, 0))
    return out


class VossPreconditionError(ValueError):
    pass


def check_voss(g: Graph, t: int, witnesses) -> bool:
    """Hamiltonian graph with t vertices of degree >= t: every vertex
    pair is joined by a path of length >= t."""
    from .invariants import is_hamiltonian

    witnesses = list(witnesses)
    if len(witnesses) != t:
        raise VossPreconditionError(f"need exactly {t} witness vertices")
    for v in witnesses:
        if g.degree(v) < t:
            raise VossPreconditionError(f"witness {v} has degree < {t}")
    if not is_hamiltonian(g):
        raise VossPreconditionError("graph is not hamiltonian")

    def longest_between(u, v):
        best = 0

        def dfs(cur, visited, ln):
            nonlocal best
            if cur == v:
                best = max(best, ln)
                return
            for w in g.neighbors(cur):
                if w not in visited:
                    visited.add(w)
                    dfs(w, visited, ln + 1)
                    visited.remove(w)

        dfs(u, {u}, 0)
        return best

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if longest_between(u, v) < t:
                return False
    return True


# ---------------------------------------------------------------------------
# extreme-pair enumeration for the corpus suites

def extreme_pairs(g: Graph, cycle_cap: int = 10_000, path_cap: int = 10_000):
    """Yield every (longest cycle, longest outside path) pair.

    Returns (pairs, sampled): sampled is True when either cap tripped
    and the graph was downgraded from exhaustive to sampled mode.
    """
    c_len, _ = circumference(g)
    if c_len < 3 or c_len == g.n:
        return [], False
    cycles, trunc_c = enumerate_longest_cycles(g, cap=cycle_cap)
    sampled = trunc_c
    pairs = []
    for c in cycles:
        if c.vertex_set() == set(range(g.n)):
            continue
        paths, trunc_p = all_longest_paths_outside(g, c, cap=path_cap)
        sampled = sampled or trunc_p
        for p in paths:
            pairs.append((c, p))
    return pairs, sampled
