from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from ..common.errors import TagMismatch, ValidationError
from ..space.equiv_relation import EquivRelation


@dataclass(frozen=True)
class ReducedTuple:
    """
    Tuple of points x_1..x_n with factor tags i_1..i_{n-1}: (x_k, x_{k+1}) lies in factors[i_k].

    Tags are indices in the factor list the tuple is checked against.
    """
    points: Tuple[int, ...]
    tags: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'points', tuple(int(x) for x in self.points))
        object.__setattr__(self, 'tags', tuple(int(i) for i in self.tags))
        if len(self.points) < 2:
            raise ValidationError('a reduced tuple has at least two points', f'got {self.points}')
        if len(self.tags) != len(self.points) - 1:
            raise ValidationError('one tag per consecutive pair',
                                  f'{len(self.tags)} tags for {len(self.points)} points')

    def is_closing(self) -> bool:
        return self.points[0] == self.points[-1]

    def __len__(self):
        return len(self.points)


def _in_core(core: Optional[EquivRelation], x: int, y: int) -> bool:
    return x == y or (core is not None and core.equivalent(x, y))


def is_reduced(t: ReducedTuple, factors: Sequence[EquivRelation], core: Optional[EquivRelation] = None) -> bool:
    """
    Tell whether a tuple is reduced.

    Consecutive tags must differ, the two points of a pair must differ, and when there are more than
    two points no consecutive pair may lie in the core (the diagonal by default).

    Raises TagMismatch when a pair does not lie in the factor its tag names.
    """
    for k, (x, y, i) in enumerate(zip(t.points, t.points[1:], t.tags)):
        if not 0 <= i < len(factors) or not factors[i].equivalent(x, y):
            raise TagMismatch(f'pair ({x}, {y}) is not in factor {i}', position=k)
    if any(i == j for i, j in zip(t.tags, t.tags[1:])):
        return False
    if len(t) == 2:
        return t.points[0] != t.points[1]
    return not any(_in_core(core, x, y) for x, y in zip(t.points, t.points[1:]))


def find_closing_tuple(factors: Sequence[EquivRelation], core: Optional[EquivRelation] = None,
                       max_length: Optional[int] = None) -> Optional[ReducedTuple]:
    """
    Bounded search for a closing reduced tuple (x_n = x_1), by depth-first enumeration.

    A (point, factor) incidence is used at most once along the tuple, except by the closing step which
    may come back to x_1 through the factor x_1 left by. Starting points, factors and next points are
    tried in increasing order, so the first tuple found is deterministic.

    Parameters
    ----------
    factors : Sequence[EquivRelation]
        Factor relations on a common space (points outside a factor's domain are singletons for it).

    core : EquivRelation, optional (default=None)
        Amalgamated sub-relation; consecutive points may not be core-equivalent.

    max_length : int, optional (default=None)
        Maximal number of points of the tuple. Default is twice the size of the space.

    Returns
    -------
    closing_tuple : ReducedTuple or None
    """
    if not factors:
        return None
    size = factors[0].space.size
    max_length = 2 * size if max_length is None else max_length
    members = [{label: f.class_members(label) for label in set(f.labels) if label >= 0} for f in factors]

    def neighbours(x: int, i: int) -> Tuple[int, ...]:
        label = factors[i].class_of(x)
        return () if label < 0 else members[i][label]

    def search(points: List[int], tags: List[int], used: Set[Tuple[int, int]]) -> Optional[ReducedTuple]:
        x = points[-1]
        for i in range(len(factors)):
            if tags and tags[-1] == i:
                continue
            if (x, i) in used:
                continue
            for y in neighbours(x, i):
                if _in_core(core, x, y):
                    continue
                if y == points[0] and len(points) >= 2:
                    return ReducedTuple(tuple(points) + (y,), tuple(tags) + (i,))
                if (y, i) in used or y in points or len(points) + 1 >= max_length:
                    continue
                found = search(points + [y], tags + [i], used | {(x, i), (y, i)})
                if found is not None:
                    return found
        return None

    for start in range(size):
        found = search([start], [], set())
        if found is not None:
            return found
    return None


def closing_tuple_from_cycle(points: Sequence[int], tags: Sequence[int]) -> ReducedTuple:
    """
    Closing tuple of a cycle of points, tags[k] naming the factor joining points[k] to the next point.

    The cycle is rotated to start at its least point, and walked towards the smaller of its two
    neighbours.
    """
    points, tags = list(points), list(tags)
    k = points.index(min(points))
    points, tags = points[k:] + points[:k], tags[k:] + tags[:k]
    if len(points) > 2 and points[-1] < points[1]:
        points = [points[0]] + points[1:][::-1]
        tags = tags[::-1]
    return ReducedTuple(tuple(points) + (points[0],), tuple(tags))
