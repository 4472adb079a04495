"""Graph homomorphism, retraction and subgraph-embedding checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import MalformedWitnessError
from .graphs import LabeledGraph

KINDS = ("homomorphism", "retraction-pair", "induced-embedding", "subgraph-embedding")


@dataclass(frozen=True)
class HomomorphismWitness:
    source: LabeledGraph
    target: LabeledGraph
    vertex_map: Mapping
    kind: str = "homomorphism"


def _check_total(g: LabeledGraph, mapping: Mapping, target: LabeledGraph) -> None:
    missing = [v for v in g.labels if v not in mapping]
    if missing:
        raise MalformedWitnessError(f"map not total; missing {missing[:3]}")
    bad = [v for v in g.labels if not target.has_vertex(mapping[v])]
    if bad:
        raise MalformedWitnessError(f"map leaves the target vertex set at {bad[:3]}")


def is_homomorphism(source: LabeledGraph, target: LabeledGraph, mapping: Mapping) -> bool:
    """Edges map to edges with distinct endpoints."""
    _check_total(source, mapping, target)
    for u, v in source.edges():
        fu, fv = mapping[u], mapping[v]
        if fu == fv or not target.adjacent(fu, fv):
            return False
    return True


def check_homomorphism(witness: HomomorphismWitness) -> bool:
    if witness.kind == "homomorphism":
        return is_homomorphism(witness.source, witness.target, witness.vertex_map)
    if witness.kind in ("induced-embedding", "subgraph-embedding"):
        mapping = witness.vertex_map
        if len({mapping[v] for v in witness.source.labels}) != witness.source.n:
            return False
        if not is_homomorphism(witness.source, witness.target, mapping):
            return False
        if witness.kind == "subgraph-embedding":
            return True
        return all(
            witness.source.adjacent(u, v) == witness.target.adjacent(mapping[u], mapping[v])
            for u, v in _pairs(witness.source.labels)
        )
    raise MalformedWitnessError(f"unknown witness kind {witness.kind!r}")


def verify_retraction(
    big: LabeledGraph, small: LabeledGraph, rho: Mapping, phi: Mapping
) -> bool:
    """rho: big -> small and phi: small -> big are homomorphisms, rho.phi = id."""
    if not is_homomorphism(big, small, rho):
        return False
    if not is_homomorphism(small, big, phi):
        return False
    return all(rho[phi[v]] == v for v in small.labels)


def subgraph_embedding_exists(
    small: LabeledGraph, big: LabeledGraph, node_cap: int = 200000
) -> tuple[bool | None, dict | None]:
    """Injective adjacency-preserving map small -> big, by backtracking.

    Returns (found, mapping); (None, None) when the search exceeds node_cap.
    """
    if small.n > big.n or small.edge_count > big.edge_count:
        return False, None
    if small.n == 0:
        return True, {}
    order = sorted(range(small.n), key=lambda i: (-bin(small.masks[i]).count("1"), i))
    big_deg = [bin(m).count("1") for m in big.masks]
    small_deg = [bin(m).count("1") for m in small.masks]
    assign: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def place(pos: int) -> bool | None:
        nonlocal nodes
        if pos == small.n:
            return True
        nodes += 1
        if nodes > node_cap:
            return None
        v = order[pos]
        need = small.masks[v]
        for cand in range(big.n):
            if cand in used or big_deg[cand] < small_deg[v]:
                continue
            ok = True
            m = need
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if w in assign and not big.masks[cand] >> assign[w] & 1:
                    ok = False
                    break
            if not ok:
                continue
            assign[v] = cand
            used.add(cand)
            got = place(pos + 1)
            if got:
                return True
            del assign[v]
            used.remove(cand)
            if got is None:
                return None
        return False

    got = place(0)
    if got is None:
        return None, None
    if not got:
        return False, None
    return True, {small.labels[v]: big.labels[c] for v, c in assign.items()}


def _pairs(items):
    items = list(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]
