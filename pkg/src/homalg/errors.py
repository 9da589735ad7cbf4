"""Exception hierarchy. Every error carries enough context to replay the failure."""


class HomalgError(Exception):
    pass


class ShapeMismatch(HomalgError):
    pass


class FieldMismatch(HomalgError):
    pass


class NotPrime(HomalgError):
    pass


class AssociativityFailure(HomalgError):
    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(f"associativity fails at basis triple ({i}, {j}, {k})")


class UnitFailure(HomalgError):
    def __init__(self, i):
        self.index = i
        super().__init__(f"unit axiom fails at basis element {i}")


class InfiniteDimensional(HomalgError):
    pass


class UnsupportedCharacteristic(HomalgError):
    pass


class NonSplitSemisimple(HomalgError):
    pass


class SupPositive(HomalgError):
    pass


class NoCanonicalSection(HomalgError):
    pass


class NotTrivialExtension(HomalgError):
    pass


class NotFiniteProjDim(HomalgError):
    pass


class WindowTooSmall(HomalgError):
    pass


class CutoffTooSmall(HomalgError):
    pass


class ParseError(HomalgError):
    pass
