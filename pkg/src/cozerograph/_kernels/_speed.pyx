# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels for graphs with at most 64 vertices.

Mirrors ``_pure`` (same algorithms, same branch order, same results) with
C uint64 adjacency masks.  The dispatcher in ``__init__`` routes larger
graphs to the pure backend.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "c"
MAX_VERTICES = 64


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int _load(object masks, uint64_t* adj, int n) except -1:
    cdef int i
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        adj[i] = <uint64_t> masks[i]
    return 0


def girth(int n, masks):
    cdef uint64_t adj[64]
    cdef int dist[64]
    cdef int parent[64]
    cdef int queue[64]
    cdef int best = 0, root, head, tail, u, w, cycle, i
    cdef uint64_t m
    _load(masks, adj, n)
    for root in range(n):
        for i in range(n):
            dist[i] = -1
            parent[i] = -1
        dist[root] = 0
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if best and dist[u] * 2 >= best:
                break
            m = adj[u]
            while m:
                w = lowbit(m)
                m &= m - 1
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if best == 0 or cycle < best:
                        best = cycle
    return best


cdef void _clique_expand(uint64_t* adj, int* best, int size, uint64_t cand) nogil:
    cdef int v
    cdef uint64_t nxt
    while cand:
        if size + popcount(cand) <= best[0]:
            return
        v = lowbit(cand)
        cand &= cand - 1
        nxt = cand & adj[v]
        if size + 1 > best[0]:
            best[0] = size + 1
        if nxt:
            _clique_expand(adj, best, size + 1, nxt)


def clique_number(int n, masks):
    cdef uint64_t adj[64]
    cdef int best = 1
    cdef uint64_t full
    if n == 0:
        return 0
    _load(masks, adj, n)
    full = (<uint64_t> 1 << (n - 1) << 1) - 1
    _clique_expand(adj, &best, 0, full)
    return best


cdef int _greedy_coloring(uint64_t* adj, int n):
    cdef int order[64]
    cdef int color[64]
    cdef int i, j, v, c, used = 0, key
    cdef uint64_t m, forbidden
    for i in range(n):
        order[i] = i
        color[i] = -1
    # insertion sort by (-degree, index)
    for i in range(1, n):
        v = order[i]
        key = popcount(adj[v])
        j = i - 1
        while j >= 0 and (popcount(adj[order[j]]) < key or
                          (popcount(adj[order[j]]) == key and order[j] > v)):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v
    for i in range(n):
        v = order[i]
        forbidden = 0
        m = adj[v]
        while m:
            j = lowbit(m)
            m &= m - 1
            if color[j] >= 0:
                forbidden |= <uint64_t> 1 << color[j]
        c = 0
        while (forbidden >> c) & 1:
            c += 1
        color[v] = c
        if c + 1 > used:
            used = c + 1
    return used


cdef int _chrom_pick(uint64_t* adj, uint64_t* ncolors, int* color, int n) nogil:
    cdef int v, cand = -1, sat, deg, bsat = -1, bdeg = -1
    for v in range(n):
        if color[v] < 0:
            sat = popcount(ncolors[v])
            deg = popcount(adj[v])
            if sat > bsat or (sat == bsat and deg > bdeg):
                bsat = sat
                bdeg = deg
                cand = v
    return cand


cdef int _chrom_solve(uint64_t* adj, uint64_t* ncolors, int* color, int n,
                      int colored, int used, int best, int lb) nogil:
    cdef int v, c, w, limit, nxt
    cdef uint64_t touched, m
    if used >= best:
        return best
    if colored == n:
        return used
    v = _chrom_pick(adj, ncolors, color, n)
    limit = used + 1
    if best - 1 < limit:
        limit = best - 1
    for c in range(limit):
        if (ncolors[v] >> c) & 1:
            continue
        color[v] = c
        touched = 0
        m = adj[v]
        while m:
            w = lowbit(m)
            m &= m - 1
            if not (ncolors[w] >> c) & 1:
                ncolors[w] |= <uint64_t> 1 << c
                touched |= <uint64_t> 1 << w
        nxt = used
        if c + 1 > nxt:
            nxt = c + 1
        best = _chrom_solve(adj, ncolors, color, n, colored + 1, nxt, best, lb)
        while touched:
            w = lowbit(touched)
            touched &= touched - 1
            ncolors[w] &= ~(<uint64_t> 1 << c)
        color[v] = -1
        if best <= lb:
            return best
    return best


def chromatic_number(int n, masks, int lower=0):
    cdef uint64_t adj[64]
    cdef uint64_t ncolors[64]
    cdef int color[64]
    cdef int i, lb, ub
    if n == 0:
        return 0
    _load(masks, adj, n)
    for i in range(n):
        if adj[i]:
            break
    else:
        return 1
    lb = lower if lower > 0 else clique_number(n, masks)
    ub = _greedy_coloring(adj, n)
    if lb >= ub:
        return ub
    for i in range(n):
        color[i] = -1
        ncolors[i] = 0
    return _chrom_solve(adj, ncolors, color, n, 0, 0, ub, lb)


cdef bint _dom_feasible(uint64_t* closed, int n, int depth, uint64_t covered,
                        uint64_t full, int max_cover) nogil:
    cdef int v = -1, fewest = -1, u, k, d
    cdef uint64_t m, missing, cands
    if covered == full:
        return True
    if depth == 0:
        return False
    missing = full & ~covered
    if popcount(missing) > depth * max_cover:
        return False
    m = missing
    while m:
        u = lowbit(m)
        m &= m - 1
        k = popcount(closed[u])
        if fewest < 0 or k < fewest:
            fewest = k
            v = u
    cands = closed[v]
    while cands:
        d = lowbit(cands)
        cands &= cands - 1
        if _dom_feasible(closed, n, depth - 1, covered | closed[d], full, max_cover):
            return True
    return False


def domination_number(int n, masks):
    cdef uint64_t closed[64]
    cdef uint64_t full
    cdef int v, size, max_cover = 0
    if n == 0:
        return 0
    _load(masks, closed, n)
    for v in range(n):
        closed[v] |= <uint64_t> 1 << v
        if popcount(closed[v]) > max_cover:
            max_cover = popcount(closed[v])
    full = (<uint64_t> 1 << (n - 1) << 1) - 1
    size = 1
    while not _dom_feasible(closed, n, size, 0, full, max_cover):
        size += 1
    return size


cdef bint _ham_extend(uint64_t* adj, int n, int* path, int depth, uint64_t visited) nogil:
    cdef int u = path[depth - 1], w
    cdef uint64_t m
    if depth == n:
        return adj[u] & 1
    m = adj[u] & ~visited
    while m:
        w = lowbit(m)
        m &= m - 1
        path[depth] = w
        if _ham_extend(adj, n, path, depth + 1, visited | (<uint64_t> 1 << w)):
            return True
    return False


def hamiltonian_cycle(int n, masks):
    cdef uint64_t adj[64]
    cdef int path[64]
    cdef int v
    if n < 3:
        return None
    _load(masks, adj, n)
    for v in range(n):
        if popcount(adj[v]) < 2:
            return None
    path[0] = 0
    if _ham_extend(adj, n, path, 1, 1):
        return [path[v] for v in range(n)]
    return None
