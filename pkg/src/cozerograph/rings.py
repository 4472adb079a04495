"""Arithmetic for finite commutative rings Z_{n1} x ... x Z_{nk}.

Elements are plain tuples of residues, one per cyclic factor, so they are
hashable, immutable and ordered lexicographically for free.  All operations
are pure functions of immutable values.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InvalidRingError, RingMismatchError, SpecParseError

Element = tuple[int, ...]


class Ring:
    """A direct product of cyclic rings, given by its tuple of moduli."""

    __slots__ = ("moduli", "cardinality", "__dict__")

    def __init__(self, moduli: Sequence[int]):
        moduli = tuple(int(n) for n in moduli)
        if not moduli or any(n < 2 for n in moduli):
            raise InvalidRingError(f"every modulus must be >= 2, got {moduli}")
        self.moduli = moduli
        self.cardinality = math.prod(moduli)

    @property
    def arity(self) -> int:
        return len(self.moduli)

    @cached_property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    @cached_property
    def one(self) -> Element:
        return (1,) * len(self.moduli)

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order."""
        return itertools.product(*(range(n) for n in self.moduli))

    def check_element(self, x: Element) -> None:
        if len(x) != len(self.moduli) or any(
            not 0 <= c < n for c, n in zip(x, self.moduli)
        ):
            raise RingMismatchError(f"{x} is not an element of {self.spec()}")

    def add(self, x: Element, y: Element) -> Element:
        self.check_element(x)
        self.check_element(y)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.moduli))

    def sub(self, x: Element, y: Element) -> Element:
        self.check_element(x)
        self.check_element(y)
        return tuple((a - b) % n for a, b, n in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        self.check_element(x)
        return tuple((-a) % n for a, n in zip(x, self.moduli))

    def mul(self, x: Element, y: Element) -> Element:
        self.check_element(x)
        self.check_element(y)
        return tuple((a * b) % n for a, b, n in zip(x, y, self.moduli))

    def pow(self, x: Element, m: int) -> Element:
        """x**m by repeated squaring, m >= 1."""
        self.check_element(x)
        if m < 1:
            raise ValueError("exponent must be >= 1")
        return tuple(pow(a, m, n) for a, n in zip(x, self.moduli))

    def is_unit(self, x: Element) -> bool:
        self.check_element(x)
        return all(math.gcd(a, n) == 1 for a, n in zip(x, self.moduli))

    def element_from_int(self, value: int) -> Element:
        """Reduce an integer diagonally; convenient for single-factor rings."""
        return tuple(value % n for n in self.moduli)

    def spec(self) -> str:
        return "x".join(f"Z{n}" for n in self.moduli)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return f"Ring({self.spec()})"


def make_ring(moduli: Sequence[int]) -> Ring:
    return Ring(moduli)


class QuotientRing:
    """R/I presented on canonical (lexicographically smallest) coset reps."""

    def __init__(self, base: Ring, modulus_ideal):
        from .ideals import Ideal  # local import to avoid a cycle

        if not isinstance(modulus_ideal, Ideal):
            raise TypeError("modulus_ideal must be an Ideal")
        if modulus_ideal.ring != base:
            raise RingMismatchError("ideal does not live in the base ring")
        if not modulus_ideal.is_proper():
            from .errors import ImproperIdealError

            raise ImproperIdealError("cannot quotient by the full ring")
        self.base = base
        self.modulus_ideal = modulus_ideal
        ideal_elements = sorted(modulus_ideal.elements())
        canon: dict[Element, Element] = {}
        reps: list[Element] = []
        for x in base.elements():
            if x in canon:
                continue
            coset = [base.add(x, i) for i in ideal_elements]
            rep = min(coset)
            reps.append(rep)
            for member in coset:
                canon[member] = rep
        self._canon = canon
        self.representatives = tuple(sorted(reps))

    @property
    def cardinality(self) -> int:
        return len(self.representatives)

    def canonicalize(self, x: Element) -> Element:
        self.base.check_element(x)
        return self._canon[x]

    def add(self, x: Element, y: Element) -> Element:
        return self._canon[self.base.add(x, y)]

    def mul(self, x: Element, y: Element) -> Element:
        return self._canon[self.base.mul(x, y)]

    def is_unit(self, x: Element) -> bool:
        """True iff the coset of x is invertible in R/I."""
        from .ideals import principal_plus

        return not principal_plus(x, self.modulus_ideal).is_proper()

    def __repr__(self) -> str:
        return f"QuotientRing({self.base.spec()} / {self.modulus_ideal.spec()})"


def quotient(ring: Ring, ideal) -> QuotientRing:
    return QuotientRing(ring, ideal)


_RING_SPEC = re.compile(r"^Z(\d+)$")


def parse_ring_spec(spec: str) -> Ring:
    """Parse strings like ``Z12`` or ``Z4xZ6``."""
    parts = spec.strip().split("x")
    moduli = []
    for part in parts:
        m = _RING_SPEC.match(part.strip())
        if m is None:
            raise SpecParseError(f"bad ring spec {spec!r}; expected e.g. Z12 or Z4xZ6")
        moduli.append(int(m.group(1)))
    if any(n < 2 for n in moduli):
        raise SpecParseError(f"bad ring spec {spec!r}: moduli must be >= 2")
    return Ring(moduli)


def element_to_str(x: Element) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


_ELEMENT_SPEC = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")


def parse_element(spec: str, ring: Ring) -> Element:
    """Parse a single ``(a,b,...)`` tuple against a ring."""
    m = _ELEMENT_SPEC.fullmatch(spec.strip())
    if m is None:
        raise SpecParseError(f"bad element spec {spec!r}")
    coords = [int(c) for c in m.group(1).split(",")]
    if len(coords) != ring.arity:
        raise SpecParseError(
            f"element {spec!r} has arity {len(coords)}, ring {ring.spec()} needs {ring.arity}"
        )
    return tuple(c % n for c, n in zip(coords, ring.moduli))


def parse_element_list(spec: str, ring: Ring) -> list[Element]:
    """Parse a comma-separated list of element tuples, e.g. ``(2,0),(0,3)``."""
    found = _ELEMENT_SPEC.findall(spec)
    if not found or "".join(_ELEMENT_SPEC.split(spec)).strip(" ,") != "":
        raise SpecParseError(f"bad element list {spec!r}")
    return [parse_element(f"({grp})", ring) for grp in found]
