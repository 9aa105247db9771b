from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, NamedTuple, Tuple

from ..common.errors import DomainMismatch, InvalidAction, ValidationError
from ..space.equiv_relation import EquivRelation
from ..space.finite_space import FiniteSpace, PointSet

FiberPoint = Hashable


@dataclass(frozen=True)
class FiberedSpace:
    """
    Finite fibered space over a finite base.

    The carrier is given fiber by fiber. The position of a point inside its fiber fixes the fiber
    numbering (first point has number 1), so every construction that picks "the least-numbered point"
    is deterministic.

    Parameters
    ----------
    base : FiniteSpace
        Base space.

    fibers : Tuple[Tuple[FiberPoint, ...], ...]
        fibers[x] lists the points over x. A point lies in one fiber only.

    allow_empty : bool, optional (default=False)
        Accept empty fibers. Vertex spaces project onto the base; edge spaces may have no edge over a
        point.
    """
    base: FiniteSpace
    fibers: Tuple[Tuple[FiberPoint, ...], ...]
    allow_empty: bool = False
    _proj: Dict[FiberPoint, int] = field(init=False, repr=False, compare=False)
    _index: Dict[FiberPoint, int] = field(init=False, repr=False, compare=False)
    _number: Dict[FiberPoint, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fibers = tuple(tuple(fiber) for fiber in self.fibers)
        object.__setattr__(self, 'fibers', fibers)
        if len(fibers) != self.base.size:
            raise ValidationError('one fiber per base point is required',
                                  f'{len(fibers)} fibers for {self.base.size} points')
        proj, index, number = {}, {}, {}
        for x, fiber in enumerate(fibers):
            if not fiber and not self.allow_empty:
                raise ValidationError('projection must be surjective', f'empty fiber over {x}')
            for position, t in enumerate(fiber):
                if t in proj:
                    raise ValidationError('fibers must be disjoint', f'{t} lies over {proj[t]} and {x}')
                proj[t] = x
                index[t] = len(index)
                number[t] = position + 1
        object.__setattr__(self, '_proj', proj)
        object.__setattr__(self, '_index', index)
        object.__setattr__(self, '_number', number)

    def fiber(self, x: int) -> Tuple[FiberPoint, ...]:
        return self.fibers[x]

    def proj(self, t: FiberPoint) -> int:
        return self._proj[t]

    def index(self, t: FiberPoint) -> int:
        """Position of t in the carrier, fibers taken in base order."""
        return self._index[t]

    def number(self, t: FiberPoint) -> int:
        return self._number[t]

    def __contains__(self, t) -> bool:
        return t in self._proj

    def __len__(self) -> int:
        return len(self._proj)

    def carrier(self) -> List[FiberPoint]:
        return [t for fiber in self.fibers for t in fiber]

    def carrier_space(self) -> FiniteSpace:
        return FiniteSpace(len(self._proj))

    def point_at(self, index: int) -> FiberPoint:
        return self.carrier()[index]

    def numbering(self) -> 'FiberNumbering':
        return FiberNumbering(dict(self._number))


@dataclass(frozen=True)
class FiberNumbering:
    number: Mapping[FiberPoint, int]

    def check(self, space: FiberedSpace):
        for x, fiber in enumerate(space.fibers):
            numbers = sorted(self.number[t] for t in fiber)
            if numbers != list(range(1, len(fiber) + 1)):
                raise ValidationError('fiber numbering must be 1..n on every fiber', f'fiber over {x}: {numbers}')


@dataclass(frozen=True)
class Action:
    """
    Action of an equivalence relation on a fibered space, as an explicit transport table.

    table[(x, y, t)] is (x, y) . t for every pair x ~ y and every t over y.
    """
    relation: EquivRelation
    table: Mapping[Tuple[int, int, FiberPoint], FiberPoint]

    def act(self, x: int, y: int, t: FiberPoint) -> FiberPoint:
        try:
            return self.table[(x, y, t)]
        except KeyError:
            raise InvalidAction('transport table has no entry', witness=(x, y, t))

    def orbit(self, space: FiberedSpace, t: FiberPoint) -> List[FiberPoint]:
        x = space.proj(t)
        return [self.act(y, x, t) for y in self.relation.class_members(x)]


@dataclass(frozen=True)
class PartialSection:
    """
    Partial section of a fibered space: one fiber point over each point of domain.
    """
    domain: PointSet
    assign: Mapping[int, FiberPoint]

    def __post_init__(self):
        if set(self.assign) != set(self.domain.members):
            raise ValidationError('section must be defined exactly on its domain',
                                  f'domain {sorted(self.domain.members)}, assigned {sorted(self.assign)}')

    @classmethod
    def from_mapping(cls, base: FiniteSpace, assign: Mapping[int, FiberPoint]) -> 'PartialSection':
        return cls(base.subset(assign), dict(assign))

    def __call__(self, x: int) -> FiberPoint:
        try:
            return self.assign[x]
        except KeyError:
            raise DomainMismatch(f'{x} is outside the section domain', witness=x)

    def items(self) -> Iterator[Tuple[int, FiberPoint]]:
        for x in self.domain:
            yield x, self.assign[x]

    def image(self) -> List[FiberPoint]:
        return [t for _, t in self.items()]

    def restrict(self, A: Iterable[int]) -> 'PartialSection':
        kept = {x: self.assign[x] for x in A if x in self.assign}
        return PartialSection(self.domain.space.subset(kept), kept)

    def is_empty(self) -> bool:
        return len(self.domain) == 0

    def check_on(self, space: FiberedSpace):
        for x, t in self.items():
            if t not in space or space.proj(t) != x:
                raise ValidationError('section must pick a point over each domain point', f'{t} over {x}')


@dataclass(frozen=True)
class FiberedMorphism:
    """Fiber-preserving map between two fibered spaces over the same base."""
    source: FiberedSpace
    target: FiberedSpace
    map: Mapping[FiberPoint, FiberPoint]

    def __call__(self, t: FiberPoint) -> FiberPoint:
        return self.map[t]

    def is_fiber_preserving(self) -> bool:
        return all(self.target.proj(self.map[t]) == self.source.proj(t) for t in self.source.carrier())

    def is_equivariant(self, source_action: Action, target_action: Action) -> bool:
        for class_ in source_action.relation.classes():
            for x in class_:
                for y in class_:
                    for t in self.source.fiber(y):
                        if self.map[source_action.act(x, y, t)] != target_action.act(x, y, self.map[t]):
                            return False
        return True

    def is_injective(self) -> bool:
        return len(set(self.map.values())) == len(self.map)

    def is_surjective(self) -> bool:
        return set(self.map.values()) == set(self.target.carrier())

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> 'FiberedMorphism':
        if not self.is_bijective():
            raise ValueError('only a bijective morphism can be inverted')
        return FiberedMorphism(self.target, self.source, {image: t for t, image in self.map.items()})


class SectionedSpace(NamedTuple):
    space: FiberedSpace
    action: Action
    section: PartialSection
