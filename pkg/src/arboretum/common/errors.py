from typing import Optional, Sequence, Tuple


class ArboretumError(ValueError):
    """Base class of every error raised by arboretum."""


class DomainMismatch(ArboretumError):
    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


class SpaceMismatch(ArboretumError):
    pass


class InvalidAction(ArboretumError):
    def __init__(self, message: str, witness: Optional[tuple] = None):
        super().__init__(f'{message} (witness: {witness})' if witness is not None else message)
        self.witness = witness


class NotSubrelation(ArboretumError):
    def __init__(self, message: str, witness: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.witness = witness


class NotCompleteDomain(ArboretumError):
    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


class NotFundamentalDomain(ArboretumError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSaturating(ArboretumError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotHomogeneous(ArboretumError):
    pass


class StabilizerNotIncluded(ArboretumError):
    def __init__(self, message: str, witness: Tuple[int, int]):
        super().__init__(f'{message} (witness pair: {witness})')
        self.witness = witness


class NotGenerated(ArboretumError):
    def __init__(self, message: str, witness: Tuple[int, int]):
        super().__init__(f'{message} (witness pair: {witness})')
        self.witness = witness


class NotFreeProduct(ArboretumError):
    def __init__(self, message: str, closing_tuple: Optional[Sequence[int]] = None):
        super().__init__(f'{message} (closing tuple: {tuple(closing_tuple)})' if closing_tuple is not None
                         else message)
        self.closing_tuple = None if closing_tuple is None else tuple(closing_tuple)


class TagMismatch(ArboretumError):
    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class HypothesisViolation(ArboretumError):
    def __init__(self, hypothesis: str, witness=None):
        super().__init__(f'hypothesis "{hypothesis}" does not hold (witness: {witness})')
        self.hypothesis = hypothesis
        self.witness = witness


class EmptyIntersection(ArboretumError):
    pass


class EmptyGeodesic(ArboretumError):
    pass


class CoverageViolation(ArboretumError):
    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


class ParseError(ArboretumError):
    def __init__(self, line: int, reason: str):
        super().__init__(f'line {line}: {reason}')
        self.line = line
        self.reason = reason


class ValidationError(ArboretumError):
    def __init__(self, invariant: str, detail: str = ''):
        super().__init__(f'{invariant}: {detail}' if detail else invariant)
        self.invariant = invariant
