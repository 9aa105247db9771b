import numpy as np
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .finite_space import FiniteSpace, PointSet
from ..common.constants import DomainKind
from ..common.errors import NotSubrelation, ValidationError
from ..common.math_utils import UNDEFINED, canonical_labels, combine_labels, components_labels


@dataclass(frozen=True)
class EquivRelation:
    """
    Equivalence relation on a sub-domain of a finite space.

    The relation is stored as one label per point of the space: the label of a point of the domain is
    the least member of its class, points outside the domain carry -1. Two relations are equal exactly
    when they have the same domain and the same classes.

    Parameters
    ----------
    space : FiniteSpace
        Ambient space.

    labels : Tuple[int, ...]
        One entry per point of space. Any labelling is accepted, it is canonicalized on construction.
    """
    space: FiniteSpace
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.space.size:
            raise ValidationError('relation labels must cover the space',
                                  f'{len(self.labels)} labels for {self.space.size} points')
        object.__setattr__(self, 'labels', tuple(int(v) for v in canonical_labels(np.array(self.labels))))

    @classmethod
    def from_array(cls, space: FiniteSpace, labels: np.array) -> 'EquivRelation':
        return cls(space, tuple(int(v) for v in labels))

    @classmethod
    def from_classes(cls, space: FiniteSpace, classes: Iterable[Iterable[int]],
                     domain: Optional[Iterable[int]] = None) -> 'EquivRelation':
        """
        Build a relation from its classes.

        Points of domain that belong to no listed class become singleton classes. A point listed twice,
        or out of range, raises ValidationError.
        """
        labels = [UNDEFINED] * space.size
        for class_ in classes:
            class_ = [int(x) for x in class_]
            if not class_:
                continue
            for x in class_:
                if not 0 <= x < space.size:
                    raise ValidationError('point index out of range', f'{x} not in 0..{space.size - 1}')
                if labels[x] != UNDEFINED:
                    raise ValidationError('partition repeats a point', f'point {x} is listed twice')
                labels[x] = min(class_)
        if domain is not None:
            for x in domain:
                if not 0 <= x < space.size:
                    raise ValidationError('point index out of range', f'{x} not in 0..{space.size - 1}')
                if labels[x] == UNDEFINED:
                    labels[x] = x
        return cls(space, tuple(labels))

    @classmethod
    def trivial(cls, space: FiniteSpace, domain: Optional[PointSet] = None) -> 'EquivRelation':
        members = space.points() if domain is None else domain.members
        labels = [UNDEFINED] * space.size
        for x in members:
            labels[x] = x
        return cls(space, tuple(labels))

    @classmethod
    def total(cls, space: FiniteSpace, domain: Optional[PointSet] = None) -> 'EquivRelation':
        members = list(space.points()) if domain is None else sorted(domain.members)
        return cls.from_classes(space, [members] if members else [])

    @property
    def domain(self) -> PointSet:
        return PointSet(self.space, frozenset(x for x, label in enumerate(self.labels) if label != UNDEFINED))

    def array(self) -> np.array:
        return np.array(self.labels, dtype=np.int64)

    def class_of(self, x: int) -> int:
        return self.labels[x]

    def in_domain(self, x: int) -> bool:
        return self.labels[x] != UNDEFINED

    def equivalent(self, x: int, y: int) -> bool:
        return self.labels[x] != UNDEFINED and self.labels[x] == self.labels[y]

    def classes(self) -> List[Tuple[int, ...]]:
        """Classes as sorted tuples, ordered by least member."""
        groups: Dict[int, List[int]] = {}
        for x, label in enumerate(self.labels):
            if label != UNDEFINED:
                groups.setdefault(label, []).append(x)
        return [tuple(groups[label]) for label in sorted(groups)]

    def class_members(self, x: int) -> Tuple[int, ...]:
        label = self.labels[x]
        if label == UNDEFINED:
            return ()
        return tuple(y for y, other in enumerate(self.labels) if other == label)

    def class_map(self) -> Dict[int, Tuple[int, ...]]:
        return {class_[0]: class_ for class_ in self.classes()}

    def num_classes(self) -> int:
        return len(set(label for label in self.labels if label != UNDEFINED))

    def is_trivial(self) -> bool:
        return all(label == x for x, label in enumerate(self.labels) if label != UNDEFINED)

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """All ordered pairs (x, y) of distinct equivalent points."""
        for class_ in self.classes():
            for x in class_:
                for y in class_:
                    if x != y:
                        yield x, y

    def extend_trivially(self, domain: Optional[PointSet] = None) -> 'EquivRelation':
        """Add singleton classes for the points of domain (default: the whole space) outside the domain."""
        members = self.space.points() if domain is None else domain.members
        labels = list(self.labels)
        for x in members:
            if labels[x] == UNDEFINED:
                labels[x] = x
        return EquivRelation(self.space, tuple(labels))

    def __repr__(self):
        separator = '' if self.space.size <= 10 else ','
        return '{' + '|'.join(separator.join(str(x) for x in c) for c in self.classes()) + '}'


def relation_generated_by(space: FiniteSpace, pairs: Iterable[Tuple[int, int]],
                          domain: Optional[PointSet] = None) -> EquivRelation:
    """Smallest equivalence relation on domain (default: the whole space) containing pairs."""
    pairs = list(pairs)
    if domain is None:
        mask = np.ones(space.size, dtype=bool)
    else:
        mask = domain.mask()
        for x, y in pairs:
            if not (mask[x] and mask[y]):
                raise ValidationError('generating pair leaves the domain', f'({x}, {y})')
    return EquivRelation.from_array(space, components_labels(space.size, pairs, mask))


def saturate(R: EquivRelation, A: PointSet) -> PointSet:
    """
    Union of the R-classes meeting A.

    Parameters
    ----------
    R : EquivRelation
        Relation.

    A : PointSet
        Subset of R.domain.

    Returns
    -------
    saturation : PointSet
    """
    A.check_inside(R.domain, 'saturated set')
    labels = {R.labels[a] for a in A.members}
    return PointSet(R.space, frozenset(x for x, label in enumerate(R.labels) if label in labels
                                       and label != UNDEFINED))


def classify_domain(R: EquivRelation, A: PointSet) -> DomainKind:
    """
    Tell whether A is a fundamental domain of R (meets every class once), a complete domain
    (its saturation is the whole domain), both or neither. A fundamental domain is reported as BOTH.
    """
    A.check_inside(R.domain, 'classified set')
    counts: Dict[int, int] = {}
    for a in A.members:
        counts[R.labels[a]] = counts.get(R.labels[a], 0) + 1
    complete = len(counts) == R.num_classes()
    once = all(count == 1 for count in counts.values())
    if complete and once:
        return DomainKind.BOTH
    elif complete:
        return DomainKind.COMPLETE
    return DomainKind.NEITHER


def fundamental_domain(R: EquivRelation) -> PointSet:
    """Least point of each class."""
    return PointSet(R.space, frozenset(label for label in R.labels if label != UNDEFINED))


def join(rels: Sequence[EquivRelation]) -> EquivRelation:
    """
    Smallest equivalence relation containing every relation of rels.

    The domain of the join is the union of the domains; a point outside the domain of one member is a
    singleton for that member.
    """
    if not rels:
        raise ValueError('join needs at least one relation')
    space = rels[0].space
    mask = np.zeros(space.size, dtype=bool)
    pairs = []
    for rel in rels:
        space.check_same(rel.space)
        labels = rel.array()
        defined = labels != UNDEFINED
        mask |= defined
        pairs.extend((int(x), int(labels[x])) for x in np.flatnonzero(defined))
    return EquivRelation.from_array(space, components_labels(space.size, pairs, mask))


def intersect(S1: EquivRelation, S2: EquivRelation) -> EquivRelation:
    S1.space.check_same(S2.space)
    return EquivRelation.from_array(S1.space, combine_labels(S1.array(), S2.array()))


def restrict(R: EquivRelation, A: PointSet) -> EquivRelation:
    A.check_inside(R.domain, 'restriction set')
    labels = np.where(A.mask(), R.array(), UNDEFINED)
    return EquivRelation.from_array(R.space, labels)


def is_subrelation(S: EquivRelation, R: EquivRelation) -> bool:
    S.space.check_same(R.space)
    return subrelation_witness(S, R) is None


def subrelation_witness(S: EquivRelation, R: EquivRelation) -> Optional[Tuple[int, int]]:
    """First pair of S that is not a pair of R, or (x, x) for a point of S.domain outside R.domain."""
    for x, label in enumerate(S.labels):
        if label == UNDEFINED:
            continue
        if R.labels[x] == UNDEFINED:
            return x, x
        if R.labels[label] != R.labels[x]:
            return label, x
    return None


def check_subrelation(S: EquivRelation, R: EquivRelation, what: str = 'relation'):
    S.space.check_same(R.space)
    witness = subrelation_witness(S, R)
    if witness is not None:
        raise NotSubrelation(f'{what} is not a sub-relation: pair {witness} is missing', witness=witness)


def missing_pair(R: EquivRelation, S: EquivRelation) -> Optional[Tuple[int, int]]:
    """First pair (x, y) of R that S does not relate, points outside S.domain counting as singletons."""
    for class_ in R.classes():
        base = class_[0]
        for y in class_[1:]:
            if not S.equivalent(base, y):
                return base, y
    return None
