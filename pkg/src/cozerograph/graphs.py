"""Construction of the ring graph families as labeled simple graphs.

Vertices keep their ring-element labels (sorted lexicographically) and
adjacency is stored as index bitmasks, the currency of the invariant
kernels.  Construction is a pure function of (ring, ideal).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ImproperIdealError, RingMismatchError
from .ideals import Ideal, principal, principal_plus, radical
from .rings import Element, QuotientRing, Ring, element_to_str

FAMILIES = (
    "gamma",
    "gammaI",
    "gammaPrime",
    "gammaDblPrime",
    "qGamma",
    "qGammaDblPrime",
    "zModel",
)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph with ordered, lexicographically sorted labels."""

    family: str
    labels: tuple
    masks: tuple[int, ...]
    ring_spec: str | None = None
    ideal_spec: str | None = None

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.masks) // 2

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label} is not a vertex") from None

    def has_vertex(self, label) -> bool:
        return label in self.labels

    def adjacent(self, u, v) -> bool:
        return bool(self.masks[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, label) -> tuple:
        m = self.masks[self.index(label)]
        out = []
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            out.append(self.labels[i])
        return tuple(out)

    def edges(self) -> list[tuple]:
        """Edges as (u, v) label pairs with u < v, sorted."""
        out = []
        for i in range(self.n):
            m = self.masks[i] >> (i + 1) << (i + 1)
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((self.labels[i], self.labels[j]))
        out.sort()
        return out

    def degree(self, label) -> int:
        return bin(self.masks[self.index(label)]).count("1")

    def induced_subgraph(self, keep_labels: Iterable) -> "LabeledGraph":
        keep = sorted(set(keep_labels) & set(self.labels))
        old_index = {lab: self.labels.index(lab) for lab in keep}
        remap = {old_index[lab]: new for new, lab in enumerate(keep)}
        masks = []
        for lab in keep:
            m = self.masks[old_index[lab]]
            new_mask = 0
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                if i in remap:
                    new_mask |= 1 << remap[i]
            masks.append(new_mask)
        return LabeledGraph(
            family=self.family,
            labels=tuple(keep),
            masks=tuple(masks),
            ring_spec=self.ring_spec,
            ideal_spec=self.ideal_spec,
        )

    def label_str(self, label) -> str:
        if isinstance(label, tuple):
            return element_to_str(label)
        return str(label)

    def to_json_obj(self) -> dict:
        return {
            "ring": self.ring_spec,
            "ideal": self.ideal_spec,
            "family": self.family,
            "vertices": [self.label_str(v) for v in self.labels],
            "edges": [[self.label_str(u), self.label_str(v)] for u, v in self.edges()],
        }

    def to_dot(self) -> str:
        lines = ["graph G {", f'  graph [family="{self.family}"];']
        for v in self.labels:
            lines.append(f'  "{self.label_str(v)}";')
        for u, v in self.edges():
            lines.append(f'  "{self.label_str(u)}" -- "{self.label_str(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_from_predicate(
    family: str,
    labels: Sequence,
    adjacent: Callable,
    ring_spec: str | None = None,
    ideal_spec: str | None = None,
) -> LabeledGraph:
    """Materialize a graph by evaluating the adjacency predicate on all pairs."""
    labels = tuple(sorted(labels))
    n = len(labels)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if adjacent(labels[i], labels[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return LabeledGraph(
        family=family,
        labels=labels,
        masks=tuple(masks),
        ring_spec=ring_spec,
        ideal_spec=ideal_spec,
    )


def _require_proper(ideal: Ideal) -> None:
    if not ideal.is_proper():
        raise ImproperIdealError("graph families require a proper ideal")


def build_gamma_I(ring: Ring, ideal: Ideal) -> LabeledGraph:
    """Zero-divisor graph w.r.t. I: vertices hit I by a product from outside I."""
    _require_proper(ideal)
    outside = [x for x in ring.elements() if not ideal.contains(x)]
    vertices = [
        x for x in outside if any(ideal.contains(ring.mul(x, y)) for y in outside)
    ]
    return graph_from_predicate(
        "gamma" if ideal.is_zero() else "gammaI",
        vertices,
        lambda x, y: ideal.contains(ring.mul(x, y)),
        ring.spec(),
        ideal.spec(),
    )


def build_q_gamma_I(ring: Ring, ideal: Ideal) -> LabeledGraph:
    """Quasi variant: vertices taken outside √I, products still land in I."""
    _require_proper(ideal)
    rad = radical(ideal)
    outside = [x for x in ring.elements() if not rad.contains(x)]
    vertices = [
        x for x in outside if any(ideal.contains(ring.mul(x, y)) for y in outside)
    ]
    return graph_from_predicate(
        "qGamma",
        vertices,
        lambda x, y: ideal.contains(ring.mul(x, y)),
        ring.spec(),
        ideal.spec(),
    )


def build_gamma_prime(ring: Ring) -> LabeledGraph:
    """Cozero-divisor graph: nonzero non-units, neither inside the other's xR."""
    prin = {
        x: principal(x, ring)
        for x in ring.elements()
        if x != ring.zero and not ring.is_unit(x)
    }
    return graph_from_predicate(
        "gammaPrime",
        list(prin),
        lambda x, y: not prin[y].contains(x) and not prin[x].contains(y),
        ring.spec(),
        None,
    )


def build_gamma_prime_quotient(q: QuotientRing) -> LabeledGraph:
    """Cozero-divisor graph of R/I on canonical coset representatives."""
    ideal = q.modulus_ideal
    pp = {
        r: principal_plus(r, ideal)
        for r in q.representatives
        if not ideal.contains(r) and principal_plus(r, ideal).is_proper()
    }
    return graph_from_predicate(
        "gammaPrime",
        list(pp),
        lambda x, y: not pp[y].contains(x) and not pp[x].contains(y),
        q.base.spec(),
        ideal.spec(),
    )


def build_gamma_dblprime(ring: Ring, ideal: Ideal) -> LabeledGraph:
    """Ideal-based cozero-divisor graph: x outside I with xR+I proper."""
    _require_proper(ideal)
    pp = {
        x: principal_plus(x, ideal)
        for x in ring.elements()
        if not ideal.contains(x) and principal_plus(x, ideal).is_proper()
    }
    return graph_from_predicate(
        "gammaDblPrime",
        list(pp),
        lambda x, y: not pp[y].contains(x) and not pp[x].contains(y),
        ring.spec(),
        ideal.spec(),
    )


def build_q_gamma_dblprime(ring: Ring, ideal: Ideal) -> LabeledGraph:
    """Quasi cozero-divisor graph: adds the xR+I = xR+√I stability condition."""
    _require_proper(ideal)
    rad = radical(ideal)
    pp = {}
    for x in ring.elements():
        if rad.contains(x):
            continue
        with_ideal = principal_plus(x, ideal)
        if not with_ideal.is_proper():
            continue
        if with_ideal != principal_plus(x, rad):
            continue
        pp[x] = with_ideal
    return graph_from_predicate(
        "qGammaDblPrime",
        list(pp),
        lambda x, y: not pp[y].contains(x) and not pp[x].contains(y),
        ring.spec(),
        ideal.spec(),
    )


def delete_ideal_vertices(g: LabeledGraph, ideal: Ideal) -> LabeledGraph:
    """Induced subgraph on vertices whose label is outside the given ideal."""
    if g.ring_spec is not None and g.ring_spec != ideal.ring.spec():
        raise RingMismatchError(
            f"graph over {g.ring_spec} cannot be cut by an ideal of {ideal.ring.spec()}"
        )
    return g.induced_subgraph(
        [v for v in g.labels if not ideal.contains(v)]
    )


BUILDERS = {
    "gamma": lambda ring, ideal: build_gamma_I(ring, ideal),
    "gammaI": build_gamma_I,
    "gammaPrime": None,  # handled specially (quotient support)
    "gammaDblPrime": build_gamma_dblprime,
    "qGamma": build_q_gamma_I,
    "qGammaDblPrime": build_q_gamma_dblprime,
}


def build_family(family: str, ring: Ring, ideal: Ideal) -> LabeledGraph:
    """CLI-facing entry: build any family for a (ring, ideal) pair.

    ``gammaPrime`` with the zero ideal is the plain cozero-divisor graph of
    the ring; with a nonzero ideal it is the graph of R/I on canonical
    representatives.
    """
    if family not in FAMILIES or family == "zModel":
        raise ValueError(f"unknown graph family {family!r}")
    if family == "gamma" and not ideal.is_zero():
        raise ValueError("family 'gamma' is the zero-ideal case; use gammaI instead")
    if family == "gammaPrime":
        if ideal.is_zero():
            return build_gamma_prime(ring)
        return build_gamma_prime_quotient(QuotientRing(ring, ideal))
    return BUILDERS[family](ring, ideal)
