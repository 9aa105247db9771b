import numpy as np
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from .equiv_relation import EquivRelation
from .finite_space import FiniteSpace, PointSet
from ..common.errors import DomainMismatch, ValidationError
from ..common.math_utils import UNDEFINED


@dataclass(frozen=True)
class PartialIso:
    """
    Partial bijection between two subsets of a finite space.

    Parameters
    ----------
    space : FiniteSpace
        Ambient space.

    pairs : Tuple[Tuple[int, int], ...]
        Graph of the map, as (x, image of x) pairs. Sorted on construction.
    """
    space: FiniteSpace
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(x), int(y)) for x, y in self.pairs))
        sources = [x for x, _ in pairs]
        targets = [y for _, y in pairs]
        for x in sources + targets:
            if not 0 <= x < self.space.size:
                raise ValidationError('point index out of range', f'{x} not in 0..{self.space.size - 1}')
        if len(set(sources)) != len(sources):
            raise ValidationError('partial isomorphism is not a map', f'a source point has two images in {pairs}')
        if len(set(targets)) != len(targets):
            raise ValidationError('partial isomorphism is not injective', f'two points share an image in {pairs}')
        object.__setattr__(self, 'pairs', pairs)

    @classmethod
    def from_mapping(cls, space: FiniteSpace, mapping: Dict[int, int]) -> 'PartialIso':
        return cls(space, tuple(mapping.items()))

    @classmethod
    def identity(cls, A: PointSet) -> 'PartialIso':
        return cls(A.space, tuple((x, x) for x in A.members))

    @property
    def source(self) -> PointSet:
        return PointSet(self.space, frozenset(x for x, _ in self.pairs))

    @property
    def target(self) -> PointSet:
        return PointSet(self.space, frozenset(y for _, y in self.pairs))

    def mapping(self) -> Dict[int, int]:
        return dict(self.pairs)

    def __call__(self, x: int) -> int:
        for source, image in self.pairs:
            if source == x:
                return image
        raise DomainMismatch(f'{x} is not in the source of the partial isomorphism', witness=x)

    def __len__(self):
        return len(self.pairs)

    def is_empty(self) -> bool:
        return not self.pairs

    def restrict(self, A: PointSet) -> 'PartialIso':
        return PartialIso(self.space, tuple((x, y) for x, y in self.pairs if x in A))

    def image(self, A: Iterable[int]) -> PointSet:
        mapping = self.mapping()
        return PointSet(self.space, frozenset(mapping[x] for x in A if x in mapping))

    def touches_diagonal(self) -> Optional[int]:
        for x, y in self.pairs:
            if x == y:
                return x
        return None

    def __repr__(self):
        return 'PartialIso(' + ', '.join(f'{x}->{y}' for x, y in self.pairs) + ')'


def invert(phi: PartialIso) -> PartialIso:
    return PartialIso(phi.space, tuple((y, x) for x, y in phi.pairs))


def compose(phi: PartialIso, psi: PartialIso) -> PartialIso:
    """phi after psi, defined where psi lands in the source of phi (possibly nowhere)."""
    phi.space.check_same(psi.space)
    outer = phi.mapping()
    return PartialIso(phi.space, tuple((x, outer[y]) for x, y in psi.pairs if y in outer))


def conjugate(S: EquivRelation, phi: PartialIso) -> EquivRelation:
    """
    Pull S back along phi: x ~ y iff phi(x) ~_S phi(y).

    Parameters
    ----------
    S : EquivRelation
        Relation on B = phi.target.

    phi : PartialIso
        Partial isomorphism from A onto B.

    Returns
    -------
    relation : EquivRelation
        Relation on A isomorphic to S through phi.
    """
    S.space.check_same(phi.space)
    if phi.target != S.domain:
        raise DomainMismatch(f'partial isomorphism target {phi.target} differs from relation domain {S.domain}')
    labels = np.full(S.space.size, UNDEFINED, dtype=np.int64)
    for x, y in phi.pairs:
        labels[x] = S.labels[y]
    return EquivRelation.from_array(S.space, labels)


def push_forward(S: EquivRelation, phi: PartialIso) -> EquivRelation:
    """Transport S (a relation on phi.source) onto phi.target."""
    return conjugate(S, invert(phi))


def pseudogroup_member(phi: PartialIso, R: EquivRelation) -> bool:
    phi.source.check_inside(R.domain, 'partial isomorphism source')
    phi.target.check_inside(R.domain, 'partial isomorphism target')
    return all(R.equivalent(x, y) for x, y in phi.pairs)
