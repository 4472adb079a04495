"""Ideal algebra for product-of-cyclic rings.

An ideal of Z_{n1} x ... x Z_{nk} is canonically a tuple of divisors
(d_1, ..., d_k) with d_i | n_i: component i is d_i * Z_{n_i}, so d_i = 1
means the full component and d_i = n_i means the zero component.  Sums,
intersections, containment and radicals are all componentwise gcd/lcm
arithmetic on divisor tuples; element sets are materialized lazily.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ImproperIdealError, RingMismatchError, SpecParseError
from .rings import Element, Ring, element_to_str, parse_element_list


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct primes dividing n, ascending. prime_factors(1) = ()."""
    primes = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    return tuple(primes)


def radical_of_int(d: int) -> int:
    """Product of the distinct primes dividing d (1 for d = 1)."""
    return math.prod(prime_factors(d))


@lru_cache(maxsize=None)
def divisors_of(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


class Ideal:
    """An ideal in canonical divisor-tuple form."""

    __slots__ = ("ring", "divisors", "_elements")

    def __init__(self, ring: Ring, divisors: Sequence[int]):
        divisors = tuple(int(d) for d in divisors)
        if len(divisors) != ring.arity:
            raise RingMismatchError("divisor tuple arity does not match the ring")
        for d, n in zip(divisors, ring.moduli):
            if d < 1 or n % d != 0:
                raise ValueError(f"divisor {d} does not divide modulus {n}")
        self.ring = ring
        self.divisors = divisors
        self._elements: frozenset[Element] | None = None

    @property
    def cardinality(self) -> int:
        return math.prod(n // d for n, d in zip(self.ring.moduli, self.divisors))

    def is_proper(self) -> bool:
        return any(d > 1 for d in self.divisors)

    def is_zero(self) -> bool:
        return self.divisors == self.ring.moduli

    def is_maximal(self) -> bool:
        """Exactly one component is a prime ideal p*Z_n, the rest are full."""
        nontrivial = [(i, d) for i, d in enumerate(self.divisors) if d > 1]
        if len(nontrivial) != 1:
            return False
        _, d = nontrivial[0]
        return len(prime_factors(d)) == 1 and d == prime_factors(d)[0]

    def contains(self, x: Element) -> bool:
        self.ring.check_element(x)
        return all(c % d == 0 for c, d in zip(x, self.divisors))

    def contains_ideal(self, other: "Ideal") -> bool:
        """True iff other is a subset of self."""
        self._check_same_ring(other)
        return all(d % e == 0 for d, e in zip(other.divisors, self.divisors))

    def elements(self) -> frozenset[Element]:
        if self._elements is None:
            ranges = [
                range(0, n, d) for n, d in zip(self.ring.moduli, self.divisors)
            ]
            self._elements = frozenset(itertools.product(*ranges))
        return self._elements

    def canonical_generator(self) -> Element:
        """The divisor tuple reduced into the ring; generates this ideal."""
        return tuple(d % n for d, n in zip(self.divisors, self.ring.moduli))

    def spec(self) -> str:
        return element_to_str(self.canonical_generator())

    def _check_same_ring(self, other: "Ideal") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.divisors == other.divisors
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.divisors))

    def __repr__(self) -> str:
        return f"Ideal({self.ring.spec()}, divisors={self.divisors})"


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.moduli)


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, (1,) * ring.arity)


def ideal_from_generators(ring: Ring, gens: Iterable[Element]) -> Ideal:
    """Smallest ideal containing gens; gcd of coordinates per component."""
    divisors = list(ring.moduli)
    for g in gens:
        ring.check_element(g)
        divisors = [math.gcd(d, c) if c else d for d, c in zip(divisors, g)]
    return Ideal(ring, divisors)


def principal(x: Element, ring: Ring) -> Ideal:
    """The principal ideal xR."""
    ring.check_element(x)
    return Ideal(ring, tuple(math.gcd(n, c) for n, c in zip(ring.moduli, x)))


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    i._check_same_ring(j)
    return Ideal(i.ring, tuple(math.gcd(d, e) for d, e in zip(i.divisors, j.divisors)))


def ideal_intersection(i: Ideal, j: Ideal) -> Ideal:
    i._check_same_ring(j)
    return Ideal(i.ring, tuple(math.lcm(d, e) for d, e in zip(i.divisors, j.divisors)))


def principal_plus(x: Element, i: Ideal) -> Ideal:
    """xR + I.  Componentwise gcd(d_i, x_i) with gcd(d, 0) = d."""
    i.ring.check_element(x)
    return Ideal(
        i.ring,
        tuple(math.gcd(d, c) if c else d for d, c in zip(i.divisors, x)),
    )


def contains(i: Ideal, x: Element) -> bool:
    return i.contains(x)


def radical(i: Ideal) -> Ideal:
    """√I: componentwise product of the distinct primes dividing d_i."""
    return Ideal(i.ring, tuple(radical_of_int(d) for d in i.divisors))


@dataclass(frozen=True)
class IdealFamily:
    """A finite set of ideals together with their intersection."""

    members: tuple[Ideal, ...]
    intersection: Ideal

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Ideal]:
        return iter(self.members)


def maximal_ideals(ring: Ring) -> tuple[Ideal, ...]:
    """All maximal ideals: one per (factor, prime dividing that modulus)."""
    out = []
    for i, n in enumerate(ring.moduli):
        for p in prime_factors(n):
            divisors = [1] * ring.arity
            divisors[i] = p
            out.append(Ideal(ring, divisors))
    return tuple(sorted(out, key=lambda m: m.divisors))


def maximal_ideals_containing(i: Ideal) -> IdealFamily:
    """M(I) with its intersection J_I(R)."""
    if not i.is_proper():
        raise ImproperIdealError("the full ring is contained in no maximal ideal")
    members = tuple(m for m in maximal_ideals(i.ring) if m.contains_ideal(i))
    inter = unit_ideal(i.ring)
    for m in members:
        inter = ideal_intersection(inter, m)
    return IdealFamily(members=members, intersection=inter)


def jacobson_JI(i: Ideal) -> Ideal:
    return maximal_ideals_containing(i).intersection


def t_set(i: Ideal) -> frozenset[Element]:
    """T_I = elements x where xR + I and xR + √I differ."""
    if not i.is_proper():
        raise ImproperIdealError("T is defined for proper ideals")
    rad = radical(i)
    return frozenset(
        x
        for x in i.ring.elements()
        if principal_plus(x, i) != principal_plus(x, rad)
    )


def is_sum_radical(i: Ideal) -> tuple[bool, Element | None]:
    """Does some x in √I satisfy I + Rx = √I?  First witness in lex order."""
    if not i.is_proper():
        raise ImproperIdealError("sum-radical is defined for proper ideals")
    rad = radical(i)
    for x in sorted(rad.elements()):
        if ideal_sum(i, principal(x, i.ring)) == rad:
            return True, x
    return False, None


def is_secondary_quotient(i: Ideal) -> bool:
    """Secondary condition transported to R/I: every r is in √I or rR+I = R."""
    if not i.is_proper():
        raise ImproperIdealError("secondary test needs a proper ideal")
    rad = radical(i)
    return all(
        rad.contains(r) or not principal_plus(r, i).is_proper()
        for r in i.ring.elements()
    )


IDEAL_FILTERS = ("all", "radical-nonmaximal", "nonzero")


def enumerate_proper_ideals(ring: Ring, filter_tag: str = "all") -> list[Ideal]:
    """All proper ideals in lexicographic divisor order, optionally filtered."""
    if filter_tag not in IDEAL_FILTERS:
        raise ValueError(f"unknown ideal filter {filter_tag!r}")
    out = []
    for divisors in itertools.product(*(divisors_of(n) for n in ring.moduli)):
        ideal = Ideal(ring, divisors)
        if not ideal.is_proper():
            continue
        if filter_tag == "nonzero" and ideal.is_zero():
            continue
        if filter_tag == "radical-nonmaximal" and radical(ideal).is_maximal():
            continue
        out.append(ideal)
    return out


def parse_ideal_spec(spec: str, ring: Ring) -> Ideal:
    """Parse ``0`` (zero ideal) or a generator list like ``(12)`` / ``(2,0),(0,3)``."""
    spec = spec.strip()
    if spec == "0":
        return zero_ideal(ring)
    try:
        gens = parse_element_list(spec, ring)
    except SpecParseError:
        raise SpecParseError(
            f"bad ideal spec {spec!r}; expected 0 or generators like (12) or (2,0),(0,3)"
        ) from None
    return ideal_from_generators(ring, gens)


class IdealContext:
    """Write-once cache of the derived data every graph predicate consults."""

    def __init__(self, ideal: Ideal):
        if not ideal.is_proper():
            raise ImproperIdealError("context requires a proper ideal")
        self.ring = ideal.ring
        self.ideal = ideal

    @cached_property
    def radical(self) -> Ideal:
        return radical(self.ideal)

    @cached_property
    def t_elements(self) -> frozenset[Element]:
        return t_set(self.ideal)

    @cached_property
    def maximal_family(self) -> IdealFamily:
        return maximal_ideals_containing(self.ideal)

    @cached_property
    def jacobson(self) -> Ideal:
        return self.maximal_family.intersection

    @cached_property
    def sum_radical(self) -> tuple[bool, Element | None]:
        return is_sum_radical(self.ideal)

    @cached_property
    def secondary_quotient(self) -> bool:
        return is_secondary_quotient(self.ideal)
