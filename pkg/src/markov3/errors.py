"""Exception types.  Every domain error derives from DomainError; the CLI maps
those to exit status 1 and ParseError to exit status 2."""


class DomainError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


class EmptyWord(DomainError):
    pass


class IndexBeyondRational(DomainError, IndexError):
    pass


class NotCoprime(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class Unstable(DomainError):
    pass


class NonDecomposable(DomainError):
    pass


class HorizonTooSmall(DomainError):
    pass


class MismatchedPair(DomainError):
    pass


class NotMarkovNumber(DomainError):
    pass


class RationalInput(DomainError):
    pass


class NotEventuallyPeriodic(DomainError):
    pass


class SideConditionViolated(DomainError):
    pass


class InvalidPrefix(DomainError):
    pass


class HasBadCut(DomainError):
    pass
