"""Finite residue-class model of the integer cozero-divisor graph.

For n with at least two prime factors, the graph on integers outside nZ
with gcd(x, n) > 1, minus the multiples of rad(n), has adjacency that only
depends on residues mod n.  Each residue class carries infinitely many
pairwise non-adjacent twins, so the model tracks one vertex per class and
computes invariants of the twin-blown infinite graph:

* domination  -> class-level *total* domination (twins force open coverage),
* girth       -> 3 with a class triangle, else 4 off any edge (twin 4-cycles),
* diameter    -> class distances, with same-class pairs at distance 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .graphs import LabeledGraph
from .ideals import prime_factors

INF = math.inf


def _prime_power_parts(n: int) -> list[tuple[int, int]]:
    """[(p, p**a)] for the full prime-power factorization of n."""
    parts = []
    for p in prime_factors(n):
        q = p
        while n % (q * p) == 0:
            q *= p
        parts.append((p, q))
    return parts


@dataclass(frozen=True)
class ZClassModel:
    n: int
    degenerate: str | None  # None, or why the model is empty by convention
    classes: tuple[int, ...]
    masks: tuple[int, ...]

    @property
    def k(self) -> int:
        """Number of distinct primes dividing n."""
        return len(prime_factors(self.n)) if self.n > 1 else 0

    @property
    def is_empty(self) -> bool:
        return not self.classes

    @cached_property
    def class_graph(self) -> LabeledGraph:
        return LabeledGraph(
            family="zModel",
            labels=self.classes,
            masks=self.masks,
            ring_spec=None,
            ideal_spec=str(self.n),
        )

    def theorem_witness_classes(self) -> tuple[int, ...]:
        """The classes of n // p**a, one per prime-power part of n."""
        return tuple(
            sorted((self.n // q) % self.n for _, q in _prime_power_parts(self.n))
        )

    def adjacent(self, c: int, d: int) -> bool:
        if c == d:
            return False
        return (
            c % math.gcd(d, self.n) != 0 and d % math.gcd(c, self.n) != 0
        )

    def dominates_all(self, chosen: tuple[int, ...]) -> bool:
        """Total domination: every class adjacent to some chosen class."""
        index = {c: i for i, c in enumerate(self.classes)}
        covered = 0
        for c in chosen:
            covered |= self.masks[index[c]]
        return covered == (1 << len(self.classes)) - 1

    def blowup_girth(self) -> int | float:
        """Girth of the twin-blown graph: 3, 4, or infinity."""
        n = len(self.classes)
        for i in range(n):
            m = self.masks[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if self.masks[i] & self.masks[j]:
                    return 3
        if any(self.masks):
            return 4
        return INF

    def blowup_diameter(self) -> int | float:
        """Diameter of the twin-blown graph (0 for the empty model)."""
        n = len(self.classes)
        if n == 0:
            return 0
        if any(m == 0 for m in self.masks):
            return INF
        best = 2  # distinct twins of one class meet through a neighbour
        for src in range(n):
            dist = [-1] * n
            dist[src] = 0
            queue = [src]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                m = self.masks[u]
                while m:
                    w = (m & -m).bit_length() - 1
                    m &= m - 1
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            if any(d < 0 for d in dist):
                return INF
            best = max(best, max(dist))
        return best

    def is_complete_bipartite(self) -> bool:
        """Class-level complete bipartite (equivalently, of the blown-up graph)."""
        from .invariants import bipartite_structure

        bipartite, parts, complete = bipartite_structure(self.class_graph)
        return bipartite and complete and parts is not None


def integer_vertex(x: int, n: int) -> bool:
    """Vertex predicate of the integer graph minus the radical multiples."""
    if n < 2:
        return False
    rad = math.prod(prime_factors(n))
    return x % n != 0 and math.gcd(x, n) > 1 and x % rad != 0


def integer_adjacent(x: int, y: int, n: int) -> bool:
    """Adjacency of integers in the graph over Z with the ideal nZ."""
    return x != y and x % math.gcd(y, n) != 0 and y % math.gcd(x, n) != 0


def build_z_class_model(n: int) -> ZClassModel:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ZClassModel(n=0, degenerate="zero-ideal", classes=(), masks=())
    if n == 1:
        return ZClassModel(n=1, degenerate="unit-ideal", classes=(), masks=())
    rad = math.prod(prime_factors(n))
    classes = tuple(
        c for c in range(n) if math.gcd(c, n) > 1 and c % rad != 0
    )
    gcds = {c: math.gcd(c, n) for c in classes}
    masks = [0] * len(classes)
    for i, c in enumerate(classes):
        for j in range(i + 1, len(classes)):
            d = classes[j]
            if c % gcds[d] != 0 and d % gcds[c] != 0:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    degenerate = "prime-power" if len(prime_factors(n)) == 1 else None
    return ZClassModel(n=n, degenerate=degenerate, classes=classes, masks=tuple(masks))
