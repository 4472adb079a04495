"""Claim verification harness.

Enumerates (ring, ideal) instances, evaluates each registered claim's
hypothesis and conclusion, and assembles deterministic verdict reports.
A claim marked ``expected`` that fails anywhere makes the report exit
nonzero; report-only claims (ambiguous statements tested literally, plus
the open connectivity question) never do.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .graphs import (
    LabeledGraph,
    build_gamma_dblprime,
    build_gamma_prime_quotient,
    build_q_gamma_dblprime,
    build_q_gamma_I,
    delete_ideal_vertices,
)
from .homomorphisms import subgraph_embedding_exists, verify_retraction
from .ideals import (
    Ideal,
    IdealContext,
    enumerate_proper_ideals,
    maximal_ideals,
    principal_plus,
    prime_factors,
)
from .invariants import (
    Budgets,
    DEFAULT_BUDGETS,
    INF,
    bipartite_structure,
    chromatic_number,
    class_total_domination,
    clique_number,
    cut_vertices,
    diameter,
    girth,
    hamiltonian_cycle,
    is_complete,
    is_connected,
    is_k_partite,
    planarity,
)
from .rings import QuotientRing, Ring, element_to_str
from .zmodel import build_z_class_model

HOLDS = "holds"
FAILS = "fails"
HYP_NOT_MET = "hypothesis-not-met"
SKIPPED = "skipped"


@dataclass(frozen=True)
class TheoremVerdict:
    claim_id: str
    ring: str
    ideal: str
    status: str
    witness: dict | None
    millis: int

    def to_json_obj(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "ring": self.ring,
            "ideal": self.ideal,
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis,
        }


class InstanceContext:
    """Per-(ring, ideal) cache shared by every claim evaluator."""

    def __init__(self, ring: Ring, ideal: Ideal):
        self.ring = ring
        self.ideal = ideal
        self.ideal_ctx = IdealContext(ideal)

    @property
    def radical(self) -> Ideal:
        return self.ideal_ctx.radical

    @property
    def t_elements(self):
        return self.ideal_ctx.t_elements

    @property
    def jacobson(self) -> Ideal:
        return self.ideal_ctx.jacobson

    @property
    def maximal_family(self):
        return self.ideal_ctx.maximal_family

    @cached_property
    def gamma_dbl(self) -> LabeledGraph:
        return build_gamma_dblprime(self.ring, self.ideal)

    @cached_property
    def gamma_dbl_rad(self) -> LabeledGraph:
        return build_gamma_dblprime(self.ring, self.radical)

    @cached_property
    def q_gamma_dbl(self) -> LabeledGraph:
        return build_q_gamma_dblprime(self.ring, self.ideal)

    @cached_property
    def q_gamma(self) -> LabeledGraph:
        return build_q_gamma_I(self.ring, self.ideal)

    @cached_property
    def gamma_dbl_minus_j(self) -> LabeledGraph:
        return delete_ideal_vertices(self.gamma_dbl, self.jacobson)

    @cached_property
    def q_gamma_dbl_minus_j(self) -> LabeledGraph:
        return delete_ideal_vertices(self.q_gamma_dbl, self.jacobson)

    @cached_property
    def quotient(self) -> QuotientRing:
        return QuotientRing(self.ring, self.ideal)

    @cached_property
    def quotient_rad(self) -> QuotientRing:
        return QuotientRing(self.ring, self.radical)

    @cached_property
    def gamma_prime_quot(self) -> LabeledGraph:
        return build_gamma_prime_quotient(self.quotient)

    @cached_property
    def gamma_prime_quot_rad(self) -> LabeledGraph:
        return build_gamma_prime_quotient(self.quotient_rad)

    @cached_property
    def stable_nonradical(self) -> list:
        """Elements outside √I whose xR+I already equals xR+√I."""
        return [
            x
            for x in self.ring.elements()
            if not self.radical.contains(x) and x not in self.t_elements
        ]


Hypothesis = Callable[[InstanceContext], "tuple[bool, dict | None]"]
Conclusion = Callable[[InstanceContext, Budgets], "tuple[str, dict | None]"]


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    description: str
    expected: bool
    hypothesis: Hypothesis
    conclusion: Conclusion


CLAIMS: dict[str, ClaimSpec] = {}


def _register(claim_id: str, description: str, expected: bool,
              hypothesis: Hypothesis, conclusion: Conclusion) -> None:
    CLAIMS[claim_id] = ClaimSpec(claim_id, description, expected, hypothesis, conclusion)


def _always(_ctx: InstanceContext) -> tuple[bool, dict | None]:
    return True, None


def _needs_sum_radical(ctx: InstanceContext) -> tuple[bool, dict | None]:
    ok, _ = ctx.ideal_ctx.sum_radical
    return ok, None if ok else {"note": "ideal is not sum-radical"}


def _el(x) -> str:
    return element_to_str(x)


def _edge(u, v) -> list[str]:
    return [_el(u), _el(v)]


# --- individual claim evaluators -------------------------------------------

def _remark_a(ctx: InstanceContext, budgets: Budgets):
    for x in ctx.ring.elements():
        with_ideal = principal_plus(x, ctx.ideal).is_proper()
        with_rad = principal_plus(x, ctx.radical).is_proper()
        if with_ideal != with_rad:
            return FAILS, {"element": _el(x), "proper_with_ideal": with_ideal,
                           "proper_with_radical": with_rad}
    return HOLDS, None


def _remark_b_hyp(ctx: InstanceContext):
    ok = ctx.radical.is_maximal()
    return ok, None if ok else {"note": "radical is not maximal"}


def _remark_b(ctx: InstanceContext, budgets: Budgets):
    if ctx.q_gamma_dbl.n == 0:
        return HOLDS, None
    return FAILS, {"unexpected_vertices": [_el(v) for v in ctx.q_gamma_dbl.labels[:5]]}


def _prop_24a_hyp(ctx: InstanceContext):
    ok = ctx.radical == ctx.ideal
    return ok, None if ok else {"note": "ideal is not radical"}


def _prop_24a(ctx: InstanceContext, budgets: Budgets):
    q, g = ctx.q_gamma_dbl, ctx.gamma_dbl
    if q.labels != g.labels:
        return FAILS, {"vertex_difference": [
            _el(v) for v in set(q.labels) ^ set(g.labels)]}
    if q.masks != g.masks:
        return FAILS, {"edge_difference": [
            _edge(u, v) for u, v in set(q.edges()) ^ set(g.edges())]}
    return HOLDS, None


def _prop_24b(ctx: InstanceContext, budgets: Budgets):
    q, big = ctx.q_gamma_dbl, ctx.gamma_dbl_rad
    missing_v = [v for v in q.labels if not big.has_vertex(v)]
    if missing_v:
        return FAILS, {"vertex_not_in_supergraph": _el(missing_v[0])}
    for u, v in q.edges():
        if not big.adjacent(u, v):
            return FAILS, {"edge_not_in_supergraph": _edge(u, v)}
    return HOLDS, None


def _prop_24c(ctx: InstanceContext, budgets: Budgets):
    small, big = ctx.gamma_dbl_rad, ctx.gamma_dbl
    missing_v = [v for v in small.labels if not big.has_vertex(v)]
    if missing_v:
        return FAILS, {"vertex_not_in_supergraph": _el(missing_v[0])}
    for u, v in itertools.combinations(small.labels, 2):
        if small.adjacent(u, v) != big.adjacent(u, v):
            return FAILS, {"adjacency_disagrees_on": _edge(u, v)}
    return HOLDS, None


def _prop_24d(ctx: InstanceContext, budgets: Budgets):
    q_vertices = set(ctx.q_gamma_dbl.labels)
    for other in enumerate_proper_ideals(ctx.ring, "all"):
        other_q = build_q_gamma_dblprime(ctx.ring, other)
        for x in other_q.labels:
            if x in ctx.t_elements:
                continue
            if x not in q_vertices:
                return FAILS, {"other_ideal": other.spec(), "vertex": _el(x)}
    return HOLDS, None


def _lem_secondary(ctx: InstanceContext, budgets: Budgets):
    secondary = ctx.ideal_ctx.secondary_quotient
    empty = ctx.q_gamma_dbl.n == 0
    if secondary == empty:
        return HOLDS, {"secondary": secondary, "graph_empty": empty}
    return FAILS, {"secondary": secondary, "graph_empty": empty}


def _prop_25_hyp(ctx: InstanceContext):
    if ctx.ideal.is_zero():
        return False, {"note": "zero ideal"}
    if ctx.radical.is_maximal():
        return False, {"note": "radical is maximal"}
    return True, None


def _prop_25(ctx: InstanceContext, budgets: Budgets):
    q = ctx.q_gamma_dbl
    if is_complete(q) and q.n >= 2:
        return FAILS, {"note": "graph is complete", "vertices": q.n}
    nonzero_ideal = [i for i in sorted(ctx.ideal.elements()) if i != ctx.ring.zero]
    for x in q.labels:
        for i in nonzero_ideal:
            shifted = ctx.ring.add(x, i)
            if shifted == x:
                return FAILS, {"vertex": _el(x), "shift": _el(i),
                               "note": "shift fixed the vertex"}
            if not q.has_vertex(shifted):
                return FAILS, {"vertex": _el(x), "shift": _el(i),
                               "note": "shifted element is not a vertex"}
            if q.adjacent(x, shifted):
                return FAILS, {"vertex": _el(x), "shift": _el(i),
                               "note": "vertex adjacent to its shift"}
    return HOLDS, None


def _thm_26_hyp(ctx: InstanceContext):
    moduli = ctx.ring.moduli
    for a, b in itertools.combinations(moduli, 2):
        if math.gcd(a, b) != 1:
            return False, {"note": "moduli not pairwise coprime"}
    if len(prime_factors(ctx.ring.cardinality)) != 2:
        return False, {"note": "cardinality does not have exactly two prime factors"}
    return True, None


def _thm_26(ctx: InstanceContext, budgets: Budgets):
    g = ctx.gamma_dbl_rad
    if g.edge_count == 0:
        return HOLDS, {"case": "edgeless", "vertices": g.n}
    _, parts, complete = bipartite_structure(g)
    if complete:
        return HOLDS, {"case": "complete-bipartite",
                       "part_sizes": [len(parts[0]), len(parts[1])]}
    return FAILS, {"note": "graph has edges but is not complete bipartite"}


def _thm_29(ctx: InstanceContext, budgets: Budgets):
    big = ctx.gamma_dbl
    small = ctx.gamma_prime_quot
    rho = {x: ctx.quotient.canonicalize(x) for x in big.labels}
    phi = {r: r for r in small.labels}
    if verify_retraction(big, small, rho, phi):
        return HOLDS, None
    return FAILS, {"note": "retraction pair failed verification"}


def _cor_210(ctx: InstanceContext, budgets: Budgets):
    big, small = ctx.gamma_dbl, ctx.gamma_prime_quot
    values = {}
    for name, fn in (("clique", clique_number), ("chromatic", chromatic_number)):
        a, b = fn(big, budgets), fn(small, budgets)
        if a is None or b is None:
            return SKIPPED, {"note": f"{name} budget exceeded"}
        if a != b:
            return FAILS, {name + "_big": a, name + "_small": b}
        values[name] = a
    return HOLDS, values


def _thm_211a(ctx: InstanceContext, budgets: Budgets):
    gq = ctx.gamma_prime_quot
    q = ctx.q_gamma_dbl
    stable = ctx.stable_nonradical
    canon = ctx.quotient.canonicalize
    for a, b in itertools.combinations(stable, 2):
        ca, cb = canon(a), canon(b)
        if ca == cb:
            continue
        if not (gq.has_vertex(ca) and gq.has_vertex(cb) and gq.adjacent(ca, cb)):
            continue
        if not (q.has_vertex(a) and q.has_vertex(b) and q.adjacent(a, b)):
            return FAILS, {"pair": _edge(a, b), "cosets": _edge(ca, cb)}
    return HOLDS, None


def _thm_211b_cosets(ctx: InstanceContext, budgets: Budgets):
    q = ctx.q_gamma_dbl
    gq = ctx.gamma_prime_quot_rad
    canon = ctx.quotient_rad.canonicalize
    for a, b in q.edges():
        ca, cb = canon(a), canon(b)
        if ca == cb:
            return FAILS, {"edge": _edge(a, b), "note": "cosets collide"}
        if not (gq.has_vertex(ca) and gq.has_vertex(cb) and gq.adjacent(ca, cb)):
            return FAILS, {"edge": _edge(a, b), "cosets": _edge(ca, cb),
                           "note": "cosets not adjacent in quotient graph"}
    return HOLDS, None


def _thm_211b_literal(ctx: InstanceContext, budgets: Budgets):
    q = ctx.q_gamma_dbl
    target = ctx.gamma_prime_quot_rad
    if q.n > target.n:
        return FAILS, {"reason": "pigeonhole", "source_vertices": q.n,
                       "target_vertices": target.n}
    found, mapping = subgraph_embedding_exists(q, target, budgets.embedding_nodes)
    if found is None:
        return SKIPPED, {"note": "embedding search budget exceeded"}
    if found:
        return HOLDS, {"embedding": {_el(k): _el(v) for k, v in mapping.items()}}
    return FAILS, {"reason": "no-embedding", "source_vertices": q.n,
                   "target_vertices": target.n}


def _lem_215a_literal(ctx: InstanceContext, budgets: Budgets):
    q_vertices = set(ctx.q_gamma_dbl.labels)
    for x in ctx.q_gamma.labels:
        if x in ctx.t_elements and x not in q_vertices:
            return FAILS, {"vertex": _el(x)}
    return HOLDS, None


def _lem_215a_setminus(ctx: InstanceContext, budgets: Budgets):
    q_vertices = set(ctx.q_gamma_dbl.labels)
    for x in ctx.q_gamma.labels:
        if x not in ctx.t_elements and x not in q_vertices:
            return FAILS, {"vertex": _el(x)}
    return HOLDS, None


def _lem_215b(ctx: InstanceContext, budgets: Budgets):
    for m in ctx.maximal_family:
        if all(x in ctx.t_elements for x in m.elements()):
            return FAILS, {"maximal_ideal": m.spec()}
    return HOLDS, None


def _thm_212(ctx: InstanceContext, budgets: Budgets):
    g = ctx.gamma_dbl_minus_j
    if not is_connected(g):
        return FAILS, {"note": "disconnected"}
    if len(ctx.maximal_family) >= 2:
        d = diameter(g)
        if d > 2:
            return FAILS, {"diameter": d}
        return HOLDS, {"diameter": d}
    return HOLDS, None


def _thm_216(ctx: InstanceContext, budgets: Budgets):
    g = ctx.q_gamma_dbl_minus_j
    if not is_connected(g):
        return FAILS, {"note": "disconnected"}
    if len(ctx.maximal_family) >= 2:
        d = diameter(g)
        if d > 2:
            return FAILS, {"diameter": d}
        return HOLDS, {"diameter": d}
    return HOLDS, None


def _q_connectivity(ctx: InstanceContext, budgets: Budgets):
    if is_connected(ctx.q_gamma_dbl_minus_j):
        return HOLDS, None
    return FAILS, {"note": "disconnected"}


def _cor_girth_hyp(ctx: InstanceContext):
    if len(maximal_ideals(ctx.ring)) < 2:
        return False, {"note": "ring is local"}
    return _needs_sum_radical(ctx)


def _cor_girth(ctx: InstanceContext, budgets: Budgets):
    g = girth(ctx.gamma_dbl_minus_j)
    if g == INF or g <= 5:
        return HOLDS, {"girth": "infinity" if g == INF else g}
    return FAILS, {"girth": g}


def _thm_297_hyp(ctx: InstanceContext):
    ok, note = _needs_sum_radical(ctx)
    if not ok:
        return ok, note
    if len(ctx.maximal_family) < 3:
        return False, {"note": "fewer than three maximal ideals contain the ideal"}
    return True, None


def _thm_297(ctx: InstanceContext, budgets: Budgets):
    g = girth(ctx.q_gamma_dbl)
    if g == 3:
        return HOLDS, None
    return FAILS, {"girth": "infinity" if g == INF else g}


def _thm_253_hyp(ctx: InstanceContext):
    ok, note = _needs_sum_radical(ctx)
    if not ok:
        return ok, note
    if len(ctx.maximal_family) < 5:
        return False, {"note": "fewer than five maximal ideals contain the ideal"}
    return True, None


def _thm_253(ctx: InstanceContext, budgets: Budgets):
    planar, witness = planarity(ctx.q_gamma_dbl, budgets)
    if planar is None:
        return SKIPPED, {"note": "planarity budget exceeded"}
    if planar:
        return FAILS, {"note": "graph is planar"}
    return HOLDS, {"witness": witness}


def _thm_cut(ctx: InstanceContext, budgets: Budgets):
    cuts = cut_vertices(ctx.q_gamma_dbl_minus_j)
    if not cuts:
        return HOLDS, None
    return FAILS, {"cut_vertices": [_el(v) for v in cuts]}


def _two_equal_maximals(ctx: InstanceContext):
    all_max = maximal_ideals(ctx.ring)
    if len(all_max) != 2:
        return False, {"note": "ring does not have exactly two maximal ideals"}
    if len(ctx.maximal_family) != 2:
        return False, {"note": "ideal not contained in both maximal ideals"}
    m1, m2 = all_max
    if m1.cardinality != m2.cardinality:
        return False, {"note": "maximal ideals have different cardinalities"}
    return True, None


def _thm_ham_hyp(ctx: InstanceContext):
    ok, note = _needs_sum_radical(ctx)
    if not ok:
        return ok, note
    ok, note = _two_equal_maximals(ctx)
    if not ok:
        return ok, note
    if ctx.q_gamma_dbl_minus_j.n < 3:
        return False, {"note": "fewer than 3 vertices; a cycle needs at least 3"}
    return True, None


def _thm_ham(ctx: InstanceContext, budgets: Budgets):
    ham, cycle = hamiltonian_cycle(ctx.q_gamma_dbl_minus_j, budgets)
    if ham is None:
        return SKIPPED, {"note": "hamiltonicity budget exceeded"}
    if ham:
        return HOLDS, {"cycle": [_el(v) for v in cycle]}
    parts = _partition_by_maximals(ctx)
    return FAILS, {
        "note": "no hamiltonian cycle",
        "part_sizes": [len(p) for p in parts] if parts else None,
    }


def _partition_by_maximals(ctx: InstanceContext):
    if len(ctx.maximal_family) != 2:
        return None
    j, t = ctx.jacobson, ctx.t_elements
    parts = []
    for m in ctx.maximal_family:
        parts.append(sorted(
            x for x in m.elements() if not j.contains(x) and x not in t
        ))
    return parts


def _thm_cb_chain_hyp(ctx: InstanceContext):
    ok, note = _needs_sum_radical(ctx)
    if not ok:
        return ok, note
    if len(ctx.maximal_family) != 2:
        return False, {"note": "claim needs exactly two maximal ideals over the ideal"}
    return True, None


def _thm_cb_chain(ctx: InstanceContext, budgets: Budgets):
    g = ctx.q_gamma_dbl_minus_j
    p1, p2 = _partition_by_maximals(ctx)
    vertex_set = set(g.labels)
    structural = set(p1) | set(p2) == vertex_set and not (set(p1) & set(p2))
    independent = all(
        not g.adjacent(x, y) for p in (p1, p2) for x, y in itertools.combinations(p, 2)
    )
    cross_complete = all(g.adjacent(x, y) for x in p1 for y in p2)
    lhs = structural and independent and cross_complete and bool(p1) and bool(p2)
    rhs = True
    rhs_witness = None
    for p in (p1, p2):
        for x, y in itertools.combinations(p, 2):
            a, b = principal_plus(x, ctx.ideal), principal_plus(y, ctx.ideal)
            if not (a.contains_ideal(b) or b.contains_ideal(a)):
                rhs = False
                rhs_witness = _edge(x, y)
                break
        if not rhs:
            break
    if lhs == rhs:
        return HOLDS, {"complete_bipartite_with_parts": lhs, "chains": rhs}
    return FAILS, {
        "complete_bipartite_with_parts": lhs,
        "chains": rhs,
        "chain_violation": rhs_witness,
    }


def _prop_257_hyp(ctx: InstanceContext):
    ok, note = _needs_sum_radical(ctx)
    if not ok:
        return ok, note
    if ctx.q_gamma_dbl_minus_j.n == 0:
        return False, {"note": "graph empty; partition bound needs vertices"}
    return True, None


def _prop_257(ctx: InstanceContext, budgets: Budgets):
    chi = chromatic_number(ctx.q_gamma_dbl_minus_j, budgets)
    if chi is None:
        return SKIPPED, {"note": "chromatic budget exceeded"}
    m_count = len(ctx.maximal_family)
    if m_count <= chi:
        return HOLDS, {"maximal_count": m_count, "chromatic": chi}
    return FAILS, {"maximal_count": m_count, "chromatic": chi}


def _thm_25997_hyp(ctx: InstanceContext):
    ok, note = _needs_sum_radical(ctx)
    if not ok:
        return ok, note
    if len(ctx.maximal_family) < 2:
        return False, {"note": "needs at least two maximal ideals over the ideal"}
    return True, None


def _thm_25997(ctx: InstanceContext, budgets: Budgets):
    g = ctx.q_gamma_dbl_minus_j
    bip, _, complete = bipartite_structure(g)
    triangle_free = girth(g) != 3
    if complete == bip == triangle_free:
        return HOLDS, {"complete_bipartite": complete, "bipartite": bip,
                       "triangle_free": triangle_free}
    return FAILS, {"complete_bipartite": complete, "bipartite": bip,
                   "triangle_free": triangle_free}


def _build_claims() -> None:
    _register("REMARK-A", "xR+I and xR+radical are proper together, elementwise",
              True, _always, _remark_a)
    _register("REMARK-B", "maximal radical forces the quasi graph to be empty",
              True, _remark_b_hyp, _remark_b)
    _register("PROP-2.4a", "radical ideal: quasi graph equals the ideal graph",
              True, _prop_24a_hyp, _prop_24a)
    _register("PROP-2.4b", "quasi graph is a subgraph of the radical ideal graph",
              True, _always, _prop_24b)
    _register("PROP-2.4c", "radical ideal graph is induced in the ideal graph",
              True, _always, _prop_24c)
    _register("PROP-2.4d", "free-second-ideal vertex containment, tested literally",
              False, _always, _prop_24d)
    _register("LEM-SECONDARY", "secondary quotient condition iff empty quasi graph",
              True, _always, _lem_secondary)
    _register("PROP-2.5", "nonzero ideal: quasi graph is not complete",
              True, _prop_25_hyp, _prop_25)
    _register("THM-2.6", "two-prime cyclic ring: radical graph edgeless or complete bipartite",
              True, _thm_26_hyp, _thm_26)
    _register("THM-2.9", "quotient cozero graph is a retract of the ideal graph",
              True, _always, _thm_29)
    _register("COR-2.10", "quotient and ideal graphs share clique and chromatic numbers",
              True, _always, _cor_210)
    _register("THM-2.11a", "adjacent quotient cosets lift to adjacent quasi vertices",
              True, _always, _thm_211a)
    _register("THM-2.11b-cosets", "quasi edges map to distinct adjacent radical cosets",
              True, _always, _thm_211b_cosets)
    _register("THM-2.11b-literal", "quasi graph embeds into the radical quotient graph",
              False, _always, _thm_211b_literal)
    _register("LEM-2.15a-literal", "quasi-product vertices inside T land in the quasi graph",
              False, _always, _lem_215a_literal)
    _register("LEM-2.15a-setminus", "quasi-product vertices outside T land in the quasi graph",
              False, _always, _lem_215a_setminus)
    _register("LEM-2.15b", "sum-radical: no maximal ideal sits inside T",
              True, _needs_sum_radical, _lem_215b)
    _register("THM-2.12", "ideal graph minus the maximal intersection is connected, diam <= 2",
              True, _always, _thm_212)
    _register("THM-2.16", "sum-radical: quasi graph minus the intersection is connected, diam <= 2",
              True, _needs_sum_radical, _thm_216)
    _register("Q-CONNECTIVITY", "is the quasi graph minus the intersection connected (empirical)",
              False, _always, _q_connectivity)
    _register("COR-GIRTH", "non-local sum-radical: girth of the cut ideal graph is <= 5 or infinite",
              True, _cor_girth_hyp, _cor_girth)
    _register("THM-29.7", "three maximal ideals force girth 3 in the quasi graph",
              True, _thm_297_hyp, _thm_297)
    _register("THM-2.53", "five maximal ideals force a nonplanar quasi graph",
              True, _thm_253_hyp, _thm_253)
    _register("THM-CUT", "sum-radical: cut quasi graph has no cut vertices",
              True, _needs_sum_radical, _thm_cut)
    _register("THM-HAM", "two equal-size maximal ideals force a hamiltonian cut quasi graph",
              True, _thm_ham_hyp, _thm_ham)
    _register("THM-CB-CHAIN", "complete bipartite on maximal parts iff principal chains",
              True, _thm_cb_chain_hyp, _thm_cb_chain)
    _register("PROP-2.57", "number of maximal ideals bounded by the chromatic number",
              True, _prop_257_hyp, _prop_257)
    _register("THM-2.5997", "complete bipartite, bipartite and triangle-free coincide",
              True, _thm_25997_hyp, _thm_25997)


_build_claims()

EXPECTED_CLAIM_IDS = tuple(c for c, s in CLAIMS.items() if s.expected)
REPORT_ONLY_CLAIM_IDS = tuple(c for c, s in CLAIMS.items() if not s.expected)


def run_claim(
    spec: ClaimSpec,
    ctx: InstanceContext,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> TheoremVerdict:
    """Hypothesis first; the conclusion only runs when the hypothesis holds."""
    start = time.perf_counter()
    ok, note = spec.hypothesis(ctx)
    if not ok:
        status, witness = HYP_NOT_MET, note
    else:
        status, witness = spec.conclusion(ctx, budgets)
    millis = int((time.perf_counter() - start) * 1000)
    return TheoremVerdict(
        claim_id=spec.claim_id,
        ring=ctx.ring.spec(),
        ideal=ctx.ideal.spec(),
        status=status,
        witness=witness,
        millis=millis,
    )


def run_claim_on(
    claim_id: str,
    ring: Ring,
    ideal: Ideal,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> TheoremVerdict:
    return run_claim(CLAIMS[claim_id], InstanceContext(ring, ideal), budgets)


# --- universe ----------------------------------------------------------------

def _product_moduli(max_card: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], min_mod: int, room: int) -> None:
        if len(prefix) >= 2:
            out.append(prefix)
        if len(prefix) == 5:
            return
        m = min_mod
        while m <= room:
            grow(prefix + (m,), m, room // m)
            m += 1

    grow((), 2, max_card)
    return out


def default_universe(max_card: int) -> list[tuple[Ring, Ideal]]:
    """All cyclic rings Z_n (4 <= n) and 2..5-factor products up to max_card,
    each paired with every proper ideal; deterministic order."""
    if max_card < 4:
        raise ValueError("max_card must be >= 4")
    rings = [Ring([n]) for n in range(4, max_card + 1)]
    rings.extend(Ring(m) for m in _product_moduli(max_card))
    rings.sort(key=lambda r: (r.cardinality, r.arity, r.moduli))
    instances = []
    for ring in rings:
        for ideal in enumerate_proper_ideals(ring, "all"):
            instances.append((ring, ideal))
    return instances


# --- the integer-model claims -------------------------------------------------

def run_z_claims(
    n_values: Sequence[int], budgets: Budgets | None = DEFAULT_BUDGETS
) -> list[TheoremVerdict]:
    verdicts = []
    for n in n_values:
        if n < 0:
            raise ValueError("n must be >= 0")
        model = build_z_class_model(n)
        k = model.k
        ring_spec, ideal_spec = "Z", f"{n}Z"

        def emit(claim_id: str, status: str, witness: dict | None, start: float):
            verdicts.append(TheoremVerdict(
                claim_id=claim_id, ring=ring_spec, ideal=ideal_spec,
                status=status, witness=witness,
                millis=int((time.perf_counter() - start) * 1000)))

        start = time.perf_counter()
        if n == 0 or n == 1 or k == 1:
            emit("Z-COR-2.8a", HOLDS if model.is_empty else FAILS,
                 {"classes": len(model.classes)}, start)
        else:
            emit("Z-COR-2.8a", HYP_NOT_MET, {"note": "n has >= 2 prime factors"}, start)

        start = time.perf_counter()
        if k >= 2:
            theorem_classes = model.theorem_witness_classes()
            witness_ok = (
                all(c in model.classes for c in theorem_classes)
                and model.dominates_all(theorem_classes)
            )
            got = class_total_domination(model, budgets)
            if got is None:
                emit("Z-THM-2.7", SKIPPED, {"note": "class budget exceeded",
                                            "classes": len(model.classes)}, start)
            else:
                gamma, search_witness = got
                status = HOLDS if (witness_ok and gamma == k) else FAILS
                emit("Z-THM-2.7", status, {
                    "k": k, "gamma": gamma,
                    "theorem_witness": list(theorem_classes),
                    "theorem_witness_dominates": witness_ok,
                    "search_witness": list(search_witness),
                }, start)
        else:
            emit("Z-THM-2.7", HYP_NOT_MET, {"note": "needs >= 2 prime factors"}, start)

        start = time.perf_counter()
        if k == 2:
            cb = model.is_complete_bipartite()
            diam = model.blowup_diameter()
            g = model.blowup_girth()
            ok = cb and diam == 2 and g == 4
            emit("Z-COR-2.8b", HOLDS if ok else FAILS, {
                "complete_bipartite": cb,
                "diameter": "infinity" if diam == INF else diam,
                "girth": "infinity" if g == INF else g,
            }, start)
        else:
            emit("Z-COR-2.8b", HYP_NOT_MET, {"note": "needs exactly 2 prime factors"}, start)

        start = time.perf_counter()
        if k > 2:
            use_budgets = budgets if budgets is not None else Budgets(
                chromatic_vertices=10**9, domination_classes=10**9)
            partite = is_k_partite(model.class_graph, k, use_budgets)
            got = class_total_domination(model, budgets)
            if partite is None or got is None:
                emit("Z-COR-2.8c", SKIPPED, {"note": "budget exceeded",
                                             "classes": len(model.classes)}, start)
            else:
                gamma, _ = got
                ok = partite and gamma == k
                emit("Z-COR-2.8c", HOLDS if ok else FAILS,
                     {"k_partite": partite, "gamma": gamma, "k": k}, start)
        else:
            emit("Z-COR-2.8c", HYP_NOT_MET, {"note": "needs > 2 prime factors"}, start)
    return verdicts


# --- report assembly ----------------------------------------------------------

UNIVERSE_NOTES = (
    "Every proper ideal of a finite product of cyclic rings is sum-radical "
    "(the canonical generator of the radical is always a witness), so "
    "sum-radical hypotheses never filter this universe and non-sum-radical "
    "behaviour is not exercised here.",
    "Q-CONNECTIVITY is an empirical sweep over this finite universe, not a proof.",
)


def _run_instance(args) -> list[dict]:
    moduli, divisors, claim_ids, budgets = args
    ring = Ring(moduli)
    ideal = Ideal(ring, divisors)
    ctx = InstanceContext(ring, ideal)
    return [run_claim(CLAIMS[c], ctx, budgets).to_json_obj() for c in claim_ids]


def full_report(
    universe: Iterable[tuple[Ring, Ideal]],
    claim_ids: Sequence[str] | None = None,
    budgets: Budgets = DEFAULT_BUDGETS,
    jobs: int = 1,
) -> dict:
    """Run claims over the universe; deterministic JSON-ready report dict."""
    if claim_ids is None:
        claim_ids = sorted(CLAIMS)
    else:
        unknown = [c for c in claim_ids if c not in CLAIMS]
        if unknown:
            raise ValueError(f"unknown claim ids: {unknown}")
        claim_ids = list(claim_ids)
    universe = list(universe)
    tasks = [
        (ring.moduli, ideal.divisors, claim_ids, budgets)
        for ring, ideal in universe
    ]
    rows: list[dict] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_instance, tasks, chunksize=8):
                rows.extend(chunk)
    else:
        for task in tasks:
            rows.extend(_run_instance(task))
    rows.sort(key=lambda r: (r["claim_id"], r["ring"], r["ideal"]))
    summary: dict[str, dict[str, int]] = {}
    for row in rows:
        bucket = summary.setdefault(row["claim_id"], {
            "holds": 0, "fails": 0, "hypothesis_not_met": 0, "skipped": 0})
        bucket[row["status"].replace("-", "_")] += 1
    expected_failures = [
        {"claim_id": r["claim_id"], "ring": r["ring"], "ideal": r["ideal"],
         "witness": r["witness"]}
        for r in rows
        if r["status"] == FAILS and CLAIMS[r["claim_id"]].expected
    ]
    return {
        "instances": len(universe),
        "claims": claim_ids,
        "verdicts": rows,
        "summary": summary,
        "expected_failures": expected_failures,
        "notes": list(UNIVERSE_NOTES),
        "exit_ok": not expected_failures,
    }
