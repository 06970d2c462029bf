"""Bitmask kernels behind the exact-search hot loops.

Graphs arrive as an int64 array of per-vertex neighbor bitmasks
(vertex cap 32, so every mask fits comfortably in an int64).  The
functions here are written in a numba-compilable subset of Python; when
numba is available and ``TOUGH_CYCLES_NO_NUMBA`` is unset they are
compiled with ``@njit(cache=True)``, otherwise the same source runs as
plain Python.  ``benchmarks/bench_kernels.py`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLE_ENV = "TOUGH_CYCLES_NO_NUMBA"

USING_NUMBA = False
if not os.environ.get(_DISABLE_ENV):
    try:
        from numba import njit as _njit

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a soft dependency
        pass

if USING_NUMBA:
    def _jit(fn):
        return _njit(cache=True)(fn)
else:
    def _jit(fn):
        return fn


@_jit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@_jit
def _component_count(adj, vmask):
    """Number of connected components of the subgraph induced on vmask."""
    count = 0
    remaining = vmask
    while remaining:
        count += 1
        start = remaining & (-remaining)
        seen = start
        frontier = start
        while frontier:
            v = 0
            f = frontier
            nxt = 0
            while f:
                bit = f & (-f)
                f ^= bit
                v = 0
                b = bit
                while b > 1:
                    b >>= 1
                    v += 1
                nxt |= adj[v] & remaining & ~seen
            seen |= nxt
            frontier = nxt
        remaining &= ~seen
    return count


@_jit
def _reach_mask(adj, start_bit, allowed):
    """Vertices reachable from start_bit through allowed (start included)."""
    seen = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & (-f)
            f ^= bit
            v = 0
            b = bit
            while b > 1:
                b >>= 1
                v += 1
            nxt |= adj[v] & allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@_jit
def _canonical_form(adj, n):
    """Canonical vertex ordering maximizing the per-level adjacency words.

    Builds an ordering position by position; the word at position k is
    the k-bit adjacency pattern of the new vertex against positions
    0..k-1, and the certificate is the level-word sequence.  At every
    level only vertices attaining the maximal word can extend a maximal
    certificate, so the search branches over ties only.  Two orderings
    yield equal certificates iff the graphs are isomorphic under the
    corresponding relabelings.

    Returns (best_words, best_perm); best_words[k] is the k-bit word.
    """
    best_words = np.zeros(n, dtype=np.int64)
    best_perm = np.zeros(n, dtype=np.int64)
    cur_words = np.zeros(n, dtype=np.int64)
    perm = np.zeros(n, dtype=np.int64)
    # words[k][v]: adjacency word of unplaced v against perm[0..k-1]
    words = np.zeros((n + 1, n), dtype=np.int64)
    cand = np.zeros((n, n), dtype=np.int64)
    cand_cnt = np.zeros(n, dtype=np.int64)
    cand_ptr = np.zeros(n, dtype=np.int64)
    # state[k]: 1 when the path into level k is already strictly greater
    # than the incumbent, 0 when tied so far
    state = np.zeros(n + 1, dtype=np.int64)

    have_best = False
    placed = 0
    k = 0
    # enter level 0
    cnt = 0
    for v in range(n):
        cand[0][cnt] = v
        cnt += 1
    cand_cnt[0] = cnt
    cand_ptr[0] = 0
    state[0] = 0

    while k >= 0:
        if cand_ptr[k] >= cand_cnt[k]:
            k -= 1
            if k >= 0:
                u = perm[k]
                placed &= ~(1 << u)
            continue
        u = cand[k][cand_ptr[k]]
        cand_ptr[k] += 1
        w = words[k][u]
        child_state = state[k]
        if have_best and child_state == 0:
            if w < best_words[k]:
                # all remaining candidates at this level share this word
                cand_ptr[k] = cand_cnt[k]
                continue
            if w > best_words[k]:
                child_state = 1
        perm[k] = u
        cur_words[k] = w
        placed |= 1 << u
        if k + 1 == n:
            if (not have_best) or child_state == 1:
                for j in range(n):
                    best_words[j] = cur_words[j]
                    best_perm[j] = perm[j]
                have_best = True
                # the current path is now the incumbent: everything on it ties
                for j in range(n + 1):
                    state[j] = 0
            placed &= ~(1 << u)
            continue
        # descend
        nk = k + 1
        state[nk] = child_state
        maxw = np.int64(-1)
        for v in range(n):
            if placed & (1 << v):
                continue
            nw = (words[k][v] << 1) | ((adj[v] >> u) & 1)
            words[nk][v] = nw
            if nw > maxw:
                maxw = nw
        cnt = 0
        for v in range(n):
            if placed & (1 << v):
                continue
            if words[nk][v] == maxw:
                cand[nk][cnt] = v
                cnt += 1
        cand_cnt[nk] = cnt
        cand_ptr[nk] = 0
        k = nk

    return best_words, best_perm


@_jit
def _longest_cycle(adj, n, order):
    """Exact longest cycle (length >= 3) by pruned DFS.

    ``order`` fixes the anchor iteration; cycles through earlier anchors
    are found while later anchors are searched with earlier ones removed.
    Returns (length, witness array); length 0 when the graph is acyclic
    (ignoring degenerate 1- and 2-cycles).
    """
    best_len = 0
    best = np.zeros(n, dtype=np.int64)
    path = np.zeros(n, dtype=np.int64)
    # iterative DFS stacks: neighbor cursor per depth
    cursor = np.zeros(n + 1, dtype=np.int64)
    removed = 0
    full = (1 << n) - 1

    for oi in range(n):
        a = order[oi]
        allowed = full & ~removed
        if not (allowed >> a) & 1:
            continue
        path[0] = a
        depth = 1
        visited = 1 << a
        cursor[1] = 0
        while depth >= 1:
            u = path[depth - 1]
            advanced = False
            c = cursor[depth]
            while c < n:
                v = c
                c += 1
                if not (adj[u] >> v) & 1:
                    continue
                if not (allowed >> v) & 1:
                    continue
                if (visited >> v) & 1:
                    continue
                # close-ability / length bound pruning
                nvis = visited | (1 << v)
                rem = allowed & ~nvis
                reach = _reach_mask(adj, 1 << v, rem)
                bound = _popcount(nvis) + _popcount(reach & rem)
                if bound <= best_len:
                    continue
                if not (reach & adj[a]):
                    continue
                cursor[depth] = c
                path[depth] = v
                depth += 1
                cursor[depth] = 0
                visited = nvis
                # record cycle if closable
                if (adj[v] >> a) & 1:
                    ln = depth
                    if ln >= 3 and ln > best_len:
                        best_len = ln
                        for j in range(ln):
                            best[j] = path[j]
                advanced = True
                break
            if not advanced:
                depth -= 1
                if depth >= 1:
                    visited &= ~(1 << path[depth])
        removed |= 1 << a
    return best_len, best[:best_len].copy()


@_jit
def _circumference_dp(adj, n):
    """Longest-cycle length by subset dynamic programming (oracle path).

    Anchors the cycle at its minimum vertex a and runs a reachability DP
    over subsets of {a+1..n-1}; no pruning, no witness.
    """
    best = 0
    for a in range(n):
        m = n - a - 1
        if m + 1 <= best:
            continue
        size = 1 << m
        # dp[mask * m + last]: path a -> (a+1+last) covering mask
        dp = np.zeros(size * m, dtype=np.uint8)
        for j in range(m):
            if (adj[a] >> (a + 1 + j)) & 1:
                dp[(1 << j) * m + j] = 1
        for mask in range(1, size):
            base = mask * m
            for last in range(m):
                if not dp[base + last]:
                    continue
                lv = a + 1 + last
                plen = _popcount(mask)
                if (adj[lv] >> a) & 1 and plen >= 2:
                    if plen + 1 > best:
                        best = plen + 1
                for j in range(m):
                    if (mask >> j) & 1:
                        continue
                    if (adj[lv] >> (a + 1 + j)) & 1:
                        dp[(mask | (1 << j)) * m + j] = 1
    return best


@_jit
def _toughness_scan(adj, n):
    """Minimize |S| / s(G\\S) over cuts S with s(G\\S) > 1.

    Enumerates cut sizes in increasing order and stops once no larger
    cut can beat the incumbent (|S|/(n-|S|) lower-bounds every ratio at
    that size).  Exact integer arithmetic throughout.
    Returns (best_size, best_comps, best_mask); best_comps == 0 means no
    disconnecting set exists (complete graph).
    """
    full = (1 << n) - 1
    best_size = 0
    best_comps = 0
    best_mask = 0
    # S = empty set first: covers disconnected graphs with ratio 0
    c0 = _component_count(adj, full)
    if c0 > 1:
        return 0, c0, 0
    for size in range(1, n - 1):
        if best_comps > 0:
            # every cut of this size has ratio >= size/(n-size)
            if size * best_comps >= best_size * (n - size):
                break
        # Gosper's hack over masks of given popcount
        mask = (1 << size) - 1
        while mask <= full:
            comps = _component_count(adj, full & ~mask)
            if comps > 1:
                better = False
                if best_comps == 0:
                    better = True
                else:
                    lhs = size * best_comps
                    rhs = best_size * comps
                    if lhs < rhs:
                        better = True
                    elif lhs == rhs and size < best_size:
                        better = True
                if better:
                    best_size = size
                    best_comps = comps
                    best_mask = mask
            c = mask & (-mask)
            r = mask + c
            if r > full:
                break
            mask = r | (((mask ^ r) >> 2) // c)
    return best_size, best_comps, best_mask


@_jit
def _max_vertex_flow(adj, n, s, t):
    """Max number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity max flow on the split-vertex network with BFS
    augmentation.  Node 2v = v_in, 2v+1 = v_out.
    """
    nn = 2 * n
    cap = np.zeros((nn, nn), dtype=np.int8)
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1
    cap[2 * s][2 * s + 1] = 2 * n  # source/sink are not cut
    cap[2 * t][2 * t + 1] = 2 * n
    for u in range(n):
        m = adj[u]
        for v in range(n):
            if (m >> v) & 1:
                cap[2 * u + 1][2 * v] = 1
    flow = 0
    prev = np.zeros(nn, dtype=np.int64)
    queue = np.zeros(nn, dtype=np.int64)
    while True:
        for i in range(nn):
            prev[i] = -1
        prev[2 * s] = 2 * s
        queue[0] = 2 * s
        head = 0
        tail = 1
        found = False
        while head < tail and not found:
            u = queue[head]
            head += 1
            for v in range(nn):
                if prev[v] < 0 and cap[u][v] > 0:
                    prev[v] = u
                    if v == 2 * t + 1:
                        found = True
                        break
                    queue[tail] = v
                    tail += 1
        if not found:
            break
        v = 2 * t + 1
        while v != 2 * s:
            u = prev[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
    return flow


@_jit
def _vertex_connectivity(adj, n):
    """Vertex connectivity; n-1 for complete graphs by convention."""
    if n == 1:
        return 0
    best = n - 1
    have_pair = False
    for s in range(n):
        for t in range(s + 1, n):
            if (adj[s] >> t) & 1:
                continue
            have_pair = True
            f = _max_vertex_flow(adj, n, s, t)
            if f < best:
                best = f
            if best == 0:
                return 0
    if not have_pair:
        return n - 1
    return best


def warmup():
    """Force JIT compilation of every kernel on a tiny graph."""
    adj = np.array([2 | 4, 1 | 4, 1 | 2, 0], dtype=np.int64)
    order = np.arange(4, dtype=np.int64)
    _component_count(adj, 15)
    _canonical_form(adj, 4)
    _longest_cycle(adj, 4, order)
    _circumference_dp(adj, 4)
    _toughness_scan(adj, 4)
    _vertex_connectivity(adj, 4)
