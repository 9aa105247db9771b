import numpy as np
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator

from ..common.errors import DomainMismatch, SpaceMismatch, ValidationError


@dataclass(frozen=True)
class FiniteSpace:
    """
    Finite ambient space whose points are the indices 0..size-1.

    Parameters
    ----------
    size : int
        Number of points, at least 1.
    """
    size: int

    def __post_init__(self):
        if not isinstance(self.size, (int, np.integer)) or self.size < 1:
            raise ValidationError('space size must be a positive integer', f'got {self.size}')

    def points(self) -> range:
        return range(self.size)

    def full(self) -> 'PointSet':
        return PointSet(self, frozenset(range(self.size)))

    def empty(self) -> 'PointSet':
        return PointSet(self, frozenset())

    def subset(self, members: Iterable[int]) -> 'PointSet':
        return PointSet(self, frozenset(int(x) for x in members))

    def check_same(self, other: 'FiniteSpace'):
        if other != self:
            raise SpaceMismatch(f'spaces differ: size {self.size} != size {other.size}')


@dataclass(frozen=True)
class PointSet:
    space: FiniteSpace
    members: FrozenSet[int]

    def __post_init__(self):
        for x in self.members:
            if not 0 <= x < self.space.size:
                raise ValidationError('point index out of range', f'{x} not in 0..{self.space.size - 1}')

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self):
        return f'PointSet({sorted(self.members)})'

    def mask(self) -> np.array:
        mask = np.zeros(self.space.size, dtype=bool)
        mask[list(self.members)] = True
        return mask

    def issubset(self, other: 'PointSet') -> bool:
        return self.members <= other.members

    def union(self, other: 'PointSet') -> 'PointSet':
        self.space.check_same(other.space)
        return PointSet(self.space, self.members | other.members)

    def intersection(self, other: 'PointSet') -> 'PointSet':
        self.space.check_same(other.space)
        return PointSet(self.space, self.members & other.members)

    def difference(self, other: 'PointSet') -> 'PointSet':
        self.space.check_same(other.space)
        return PointSet(self.space, self.members - other.members)

    def complement(self) -> 'PointSet':
        return PointSet(self.space, frozenset(range(self.space.size)) - self.members)

    def is_full(self) -> bool:
        return len(self.members) == self.space.size

    def check_inside(self, other: 'PointSet', what: str = 'set'):
        self.space.check_same(other.space)
        outside = sorted(self.members - other.members)
        if outside:
            raise DomainMismatch(f'{what} is not contained in the domain: point {outside[0]} is outside',
                                 witness=outside[0])
