"""Exception types shared across the package."""


class InvalidRingError(ValueError):
    """Ring construction with a modulus < 2."""


class RingMismatchError(ValueError):
    """Operands belong to different rings or have the wrong arity."""


class ImproperIdealError(ValueError):
    """An operation required a proper ideal but got the full ring."""


class MalformedWitnessError(ValueError):
    """A homomorphism/retraction witness map is not total on its domain."""


class SpecParseError(ValueError):
    """A ring/ideal/element spec string does not match the grammar."""
