"""Exception types raised by quasisym.

Everything derives from :class:`QuasigroupError` so callers (the CLI in
particular) can catch domain failures with one clause.
"""


class QuasigroupError(ValueError):
    pass


class NotLatinSquare(QuasigroupError):
    def __init__(self, kind, index, value):
        self.kind = kind
        self.index = index
        self.value = value
        super().__init__(f"not a Latin square: {kind} {index} repeats value {value}")


class NotAssociative(QuasigroupError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        x, y, z = self.witness
        super().__init__(f"operation is not associative at (x, y, z) = ({x}, {y}, {z})")


class NoNeutral(QuasigroupError):
    def __init__(self):
        super().__init__("operation has no two-sided neutral element")


class NotGroupIsotope(QuasigroupError):
    def __init__(self, msg="quasigroup is not isotopic to a group"):
        super().__init__(msg)


class NotUnitary(QuasigroupError):
    def __init__(self, name, neutral, image):
        super().__init__(f"{name} is not unitary: maps neutral {neutral} to {image}")


class NotAutotopism(QuasigroupError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"triple is not an autotopism; fails at (x, y) = {self.witness}")


class NotPrime(QuasigroupError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"{p} is not prime")


class NonUnitCoefficient(QuasigroupError):
    def __init__(self, name, value, m):
        super().__init__(f"{name}={value} is not a unit modulo {m}")


class SizeMismatch(QuasigroupError):
    pass


class InternalVerificationFailed(AssertionError):
    """A constructed object failed its own post-condition check. Always a bug."""


class InternalMismatch(AssertionError):
    """Computed census disagrees with the closed-form description."""

    def __init__(self, label, expected, computed):
        self.label = label
        self.expected = expected
        self.computed = computed
        super().__init__(f"{label}: expected {expected!r}, computed {computed!r}")
