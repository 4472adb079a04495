"""Pure-Python graph kernels on adjacency bitmasks.

Every function takes a vertex count ``n`` and a list ``masks`` where
``masks[i]`` is the neighbour bitmask of vertex ``i`` (bit ``i`` unset).
Vertices of any count are supported because Python ints are unbounded;
the compiled backend mirrors this module for n <= 64.

All searches branch in a fixed order (lowest vertex index first), so
results and witnesses are deterministic.
"""

from __future__ import annotations

BACKEND = "python"


def girth(n: int, masks: list[int]) -> int:
    """Length of a shortest cycle, or 0 if the graph is acyclic.

    Per-root BFS; a non-tree edge seen at depth d closes a cycle of length
    dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    """
    best = 0
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best and dist[u] * 2 >= best:
                break
            m = masks[u]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if not best or cycle < best:
                        best = cycle
    return best


def clique_number(n: int, masks: list[int]) -> int:
    """Exact maximum clique size by branch and bound on candidate masks."""
    if n == 0:
        return 0
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            nxt = cand & masks[v]
            if size + 1 > best:
                best = size + 1
            if nxt:
                expand(size + 1, nxt)

    expand(0, (1 << n) - 1)
    return best


def _greedy_coloring(n: int, masks: list[int]) -> int:
    """Largest-degree-first greedy colouring; upper bound for chromatic."""
    order = sorted(range(n), key=lambda v: (-bin(masks[v]).count("1"), v))
    color = [-1] * n
    used = 0
    for v in order:
        forbidden = 0
        m = masks[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if color[w] >= 0:
                forbidden |= 1 << color[w]
        c = 0
        while forbidden >> c & 1:
            c += 1
        color[v] = c
        if c + 1 > used:
            used = c + 1
    return used


def chromatic_number(n: int, masks: list[int], lower: int = 0) -> int:
    """Exact chromatic number: DSATUR branch and bound.

    Seeded with the clique lower bound (caller may pass one) and the greedy
    upper bound; colours are tried in fixed ascending order.
    """
    if n == 0:
        return 0
    if all(m == 0 for m in masks):
        return 1
    lb = lower if lower > 0 else clique_number(n, masks)
    ub = _greedy_coloring(n, masks)
    if lb >= ub:
        return ub
    best = ub
    color = [-1] * n
    neighbor_colors = [0] * n

    def pick() -> int:
        cand = -1
        key = (-1, -1, 0)
        for v in range(n):
            if color[v] < 0:
                sat = bin(neighbor_colors[v]).count("1")
                deg = bin(masks[v]).count("1")
                if (sat, deg, -v) > key:
                    key = (sat, deg, -v)
                    cand = v
        return cand

    def solve(colored: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if colored == n:
            best = used
            return
        v = pick()
        limit = min(used + 1, best - 1)
        for c in range(limit):
            if neighbor_colors[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            m = masks[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if not neighbor_colors[w] >> c & 1:
                    neighbor_colors[w] |= 1 << c
                    touched.append(w)
            solve(colored + 1, max(used, c + 1))
            for w in touched:
                neighbor_colors[w] &= ~(1 << c)
            color[v] = -1
            if best <= lb:
                return

    solve(0, 0)
    return best


def domination_number(n: int, masks: list[int]) -> int:
    """Exact minimum dominating set size (closed neighbourhoods)."""
    if n == 0:
        return 0
    closed = [masks[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    max_cover = max(bin(c).count("1") for c in closed)

    def feasible(depth: int, covered: int) -> bool:
        if covered == full:
            return True
        if depth == 0:
            return False
        missing = full & ~covered
        if bin(missing).count("1") > depth * max_cover:
            return False
        # branch on the uncovered vertex with the fewest potential coverers
        v = -1
        fewest = None
        m = missing
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            k = bin(closed[u]).count("1")
            if fewest is None or k < fewest:
                fewest = k
                v = u
        cands = closed[v]
        while cands:
            d = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            if feasible(depth - 1, covered | closed[d]):
                return True
        return False

    size = 1
    while not feasible(size, 0):
        size += 1
    return size


def total_domination_number(n: int, masks: list[int]) -> tuple[int, tuple[int, ...]]:
    """Minimum set D with every vertex adjacent to D (open neighbourhoods).

    Returns (size, witness indices).  Raises ValueError when a vertex has no
    neighbour at all, since no total dominating set can exist then.
    """
    if n == 0:
        return 0, ()
    if any(m == 0 for m in masks):
        raise ValueError("isolated vertex: no total dominating set exists")
    full = (1 << n) - 1
    coverers = [
        [u for u in range(n) if masks[u] >> v & 1] for v in range(n)
    ]
    chosen: list[int] = []

    def search(depth: int, covered: int) -> tuple[int, ...] | None:
        if covered == full:
            return tuple(sorted(chosen))
        if depth == 0:
            return None
        v = -1
        fewest = None
        m = full & ~covered
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if fewest is None or len(coverers[u]) < fewest:
                fewest = len(coverers[u])
                v = u
        for d in coverers[v]:
            if d in chosen:
                continue
            chosen.append(d)
            got = search(depth - 1, covered | masks[d])
            chosen.pop()
            if got is not None:
                return got
        return None

    size = 1
    while True:
        witness = search(size, 0)
        if witness is not None:
            return size, witness
        size += 1


def hamiltonian_cycle(n: int, masks: list[int]) -> list[int] | None:
    """A Hamiltonian cycle as a vertex list, or None.

    Plain backtracking rooted at vertex 0 with neighbour order by index;
    graphs with fewer than 3 vertices are never Hamiltonian.
    """
    if n < 3:
        return None
    if any(bin(m).count("1") < 2 for m in masks):
        return None
    path = [0]
    visited = 1

    def extend() -> bool:
        nonlocal visited
        u = path[-1]
        if len(path) == n:
            return bool(masks[u] >> 0 & 1)
        m = masks[u] & ~visited
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            path.append(w)
            visited |= 1 << w
            if extend():
                return True
            path.pop()
            visited &= ~(1 << w)
        return False

    if extend():
        return path[:]
    return None
