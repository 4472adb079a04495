"""Exact graph invariants with explicit budgets.

Every value is exact or reported as skipped (None in Python, the string
"skipped" in JSON); nothing approximate is ever returned.  Empty-graph
conventions: connected, diameter 0, girth infinity, domination 0,
clique = chromatic = 0, not Hamiltonian, planar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import networkx as nx

from . import _kernels
from .graphs import LabeledGraph
from .zmodel import ZClassModel

INF = math.inf


@dataclass(frozen=True)
class Budgets:
    """Per-invariant size caps; exceeding one yields a skipped marker."""

    clique_vertices: int = 512
    chromatic_vertices: int = 128
    domination_vertices: int = 64
    domination_classes: int = 64
    hamiltonian_vertices: int = 32
    planarity_edges: int = 20000
    embedding_nodes: int = 200000


DEFAULT_BUDGETS = Budgets()


def _bfs_dist(g: LabeledGraph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = [src]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        m = g.masks[u]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: LabeledGraph) -> list[tuple]:
    """Connected components as sorted label tuples, ordered by first label."""
    seen = [False] * g.n
    out = []
    for v in range(g.n):
        if seen[v]:
            continue
        dist = _bfs_dist(g, v)
        part = [g.labels[i] for i, d in enumerate(dist) if d >= 0]
        for i, d in enumerate(dist):
            if d >= 0:
                seen[i] = True
        out.append(tuple(sorted(part)))
    return out


def is_connected(g: LabeledGraph) -> bool:
    """Empty and one-vertex graphs count as connected."""
    if g.n == 0:
        return True
    return all(d >= 0 for d in _bfs_dist(g, 0))


def diameter(g: LabeledGraph) -> int | float:
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        if any(d < 0 for d in dist):
            return INF
        best = max(best, max(dist))
    return best


def girth(g: LabeledGraph) -> int | float:
    got = _kernels.girth(g.n, g.masks)
    return got if got else INF


def clique_number(g: LabeledGraph, budgets: Budgets = DEFAULT_BUDGETS) -> int | None:
    if g.n == 0:
        return 0
    if g.n > budgets.clique_vertices:
        return None
    return _kernels.clique_number(g.n, g.masks)


def chromatic_number(g: LabeledGraph, budgets: Budgets = DEFAULT_BUDGETS) -> int | None:
    if g.n == 0:
        return 0
    if g.n > budgets.chromatic_vertices:
        return None
    lower = clique_number(g, budgets) or 0
    return _kernels.chromatic_number(g.n, g.masks, lower)


def is_k_partite(g: LabeledGraph, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> bool | None:
    chi = chromatic_number(g, budgets)
    return None if chi is None else chi <= k


def domination_number(g: LabeledGraph, budgets: Budgets = DEFAULT_BUDGETS) -> int | None:
    if g.n == 0:
        return 0
    if g.n > budgets.domination_vertices:
        return None
    return _kernels.domination_number(g.n, g.masks)


def class_total_domination(
    model: ZClassModel, budgets: Budgets | None = DEFAULT_BUDGETS
) -> tuple[int, tuple[int, ...]] | None:
    """Minimum class set every class is adjacent to; witness in class labels.

    This is the correct finite reduction of domination for the twin-blown
    integer graph.  Pass ``budgets=None`` to lift the class-count cap.
    """
    m = len(model.classes)
    if m == 0:
        return 0, ()
    if budgets is not None and m > budgets.domination_classes:
        return None
    size, idx_witness = _kernels.total_domination_number(m, model.masks)
    return size, tuple(model.classes[i] for i in idx_witness)


def bipartite_structure(
    g: LabeledGraph,
) -> tuple[bool, tuple[tuple, tuple] | None, bool]:
    """(bipartite, (part_a, part_b) or None, complete_bipartite).

    Two-colouring by BFS per component; the side containing the component's
    smallest label joins part A.  Complete means: bipartite, both parts
    nonempty, and every cross pair adjacent.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            m = g.masks[u]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None, False
    part_a = tuple(g.labels[i] for i in range(g.n) if color[i] == 0)
    part_b = tuple(g.labels[i] for i in range(g.n) if color[i] == 1)
    complete = bool(part_a) and bool(part_b)
    if complete:
        idx_b = [g.index(v) for v in part_b]
        for u in part_a:
            mu = g.masks[g.index(u)]
            if any(not mu >> j & 1 for j in idx_b):
                complete = False
                break
    return True, (part_a, part_b), complete


def is_complete(g: LabeledGraph) -> bool:
    """Every pair of distinct vertices adjacent (vacuously true for n <= 1)."""
    return g.edge_count == g.n * (g.n - 1) // 2


def cut_vertices(g: LabeledGraph) -> tuple:
    """Articulation points by iterative low-link DFS, as sorted labels."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ap = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        stack = [(root, 0)]
        children_of_root = 0
        while stack:
            u, state = stack.pop()
            if state == 0:
                disc[u] = low[u] = timer
                timer += 1
            m = g.masks[u] >> state << state
            advanced = False
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if disc[w] < 0:
                    stack.append((u, w + 1))
                    stack.append((w, 0))
                    parent[w] = u
                    if u == root:
                        children_of_root += 1
                    advanced = True
                    break
                elif w != parent[u]:
                    low[u] = min(low[u], disc[w])
            if not advanced and parent[u] >= 0:
                p = parent[u]
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= disc[p]:
                    ap[p] = True
        if children_of_root > 1:
            ap[root] = True
    return tuple(sorted(g.labels[i] for i in range(n) if ap[i]))


def hamiltonian_cycle(
    g: LabeledGraph, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[bool | None, tuple | None]:
    """(is_hamiltonian, cycle labels) with None meaning skipped by budget."""
    if g.n > budgets.hamiltonian_vertices:
        return None, None
    got = _kernels.hamiltonian_cycle(g.n, g.masks)
    if got is None:
        return False, None
    return True, tuple(g.labels[i] for i in got)


def _to_networkx(g: LabeledGraph) -> "nx.Graph":
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    for i in range(g.n):
        m = g.masks[i] >> (i + 1) << (i + 1)
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            G.add_edge(i, j)
    return G


def verify_kuratowski_witness(g: LabeledGraph, witness_edges: list[tuple]) -> str | None:
    """Independently check that the edges form a K5 or K33 subdivision in g.

    Returns "K5"/"K33" on success, None otherwise.  Walks maximal chains of
    degree-2 vertices between branch vertices and checks the contracted
    graph is the complete (bipartite) pattern with every edge used once.
    """
    adj: dict = {}
    for u, v in witness_edges:
        if u == v or not g.has_vertex(u) or not g.has_vertex(v):
            return None
        if not g.adjacent(u, v):
            return None
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if not adj:
        return None
    branch = sorted(v for v, nb in adj.items() if len(nb) != 2)
    if any(len(adj[v]) not in (2, 3, 4) for v in adj):
        return None
    if len(branch) == 5:
        expected_degree, kind = 4, "K5"
    elif len(branch) == 6:
        expected_degree, kind = 3, "K33"
    else:
        return None
    if any(len(adj[v]) != expected_degree for v in branch):
        return None
    used: set = set()
    contracted: set = set()
    for b in branch:
        for first in sorted(adj[b]):
            if (b, first) in used:
                continue
            prev, cur = b, first
            used.add((b, first))
            used.add((first, b))
            while cur not in branch:
                nxt = [w for w in adj[cur] if w != prev]
                if len(nxt) != 1:
                    return None
                used.add((cur, nxt[0]))
                used.add((nxt[0], cur))
                prev, cur = cur, nxt[0]
            pair = tuple(sorted((b, cur)))
            if b == cur or pair in contracted:
                return None
            contracted.add(pair)
    # every witness edge must lie on exactly one branch-to-branch chain
    traversed = {tuple(sorted(e)) for e in used}
    all_edges = {tuple(sorted((u, v))) for u in adj for v in adj[u]}
    if traversed != all_edges:
        return None
    if kind == "K5":
        want = {tuple(sorted(p)) for p in _pairs(branch)}
        return "K5" if contracted == want else None
    # K33: contracted graph must be 3+3 complete bipartite
    nbrs = {b: {v for u, v in contracted if u == b} | {u for u, v in contracted if v == b} for b in branch}
    if any(len(nbrs[b]) != 3 for b in branch):
        return None
    side_a = {branch[0]} | (set(branch) - nbrs[branch[0]] - {branch[0]})
    side_b = nbrs[branch[0]]
    if len(side_a) != 3 or len(side_b) != 3:
        return None
    want = {tuple(sorted((a, b))) for a in side_a for b in side_b}
    return "K33" if contracted == want else None


def _pairs(items):
    items = list(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


def planarity(
    g: LabeledGraph, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[bool | None, dict | None]:
    """(planar, witness).  Nonplanar graphs carry a verified Kuratowski
    subdivision witness when the graph has at most 64 vertices, else a
    certificate tag.  Euler prefilter decides large dense graphs outright.
    """
    if g.n == 0:
        return True, None
    if g.edge_count > budgets.planarity_edges:
        return None, None
    euler_fires = g.n >= 3 and g.edge_count > 3 * g.n - 6
    if euler_fires and g.n > 64:
        return False, {"kind": "certificate", "reason": "edge-count"}
    planar, cert = nx.check_planarity(_to_networkx(g), counterexample=True)
    if planar:
        return True, None
    if g.n > 64:
        return False, {"kind": "certificate", "reason": "lr-planarity"}
    witness_edges = [
        (g.labels[u], g.labels[v]) for u, v in cert.edges()
    ]
    kind = verify_kuratowski_witness(g, witness_edges)
    if kind is None:
        raise AssertionError("planarity witness failed independent verification")
    witness = {
        "kind": kind,
        "edges": sorted(
            [sorted((g.label_str(u), g.label_str(v))) for u, v in witness_edges]
        ),
    }
    return False, witness


@dataclass(frozen=True)
class InvariantReport:
    connected: bool
    diameter: int | float
    girth: int | float
    clique_number: int | None
    chromatic_number: int | None
    domination_number: int | None
    bipartite: bool
    parts: tuple | None
    complete_bipartite: bool
    planar: bool | None
    planarity_witness: dict | None
    hamiltonian: bool | None
    hamiltonian_cycle: tuple | None
    cut_vertices: tuple

    def to_json_obj(self, label_str=str) -> dict:
        def enc(value):
            if value is None:
                return "skipped"
            if value is INF:
                return "infinity"
            return value

        return {
            "connected": self.connected,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "clique_number": enc(self.clique_number),
            "chromatic_number": enc(self.chromatic_number),
            "domination_number": enc(self.domination_number),
            "bipartite": self.bipartite,
            "parts": (
                [[label_str(v) for v in side] for side in self.parts]
                if self.parts is not None
                else None
            ),
            "complete_bipartite": self.complete_bipartite,
            "planar": enc(self.planar),
            "planarity_witness": self.planarity_witness,
            "hamiltonian": enc(self.hamiltonian),
            "hamiltonian_cycle": (
                [label_str(v) for v in self.hamiltonian_cycle]
                if self.hamiltonian_cycle is not None
                else None
            ),
            "cut_vertices": [label_str(v) for v in self.cut_vertices],
        }


def compute_report(g: LabeledGraph, budgets: Budgets = DEFAULT_BUDGETS) -> InvariantReport:
    omega = clique_number(g, budgets)
    chi = chromatic_number(g, budgets)
    bip, parts, complete = bipartite_structure(g)
    planar, pw = planarity(g, budgets)
    ham, cycle = hamiltonian_cycle(g, budgets)
    return InvariantReport(
        connected=is_connected(g),
        diameter=diameter(g),
        girth=girth(g),
        clique_number=omega,
        chromatic_number=chi,
        domination_number=domination_number(g, budgets),
        bipartite=bip,
        parts=parts,
        complete_bipartite=complete,
        planar=planar,
        planarity_witness=pw,
        hamiltonian=ham,
        hamiltonian_cycle=cycle,
        cut_vertices=cut_vertices(g),
    )
