from typing import NamedTuple

import pytest

from arboretum.harness.instance_file import DeclaredStructure, InstanceFile
from arboretum.space.equiv_relation import EquivRelation, join
from arboretum.space.finite_space import FiniteSpace


class Example(NamedTuple):
    space: FiniteSpace
    R: EquivRelation
    R1: EquivRelation
    R2: EquivRelation
    S: EquivRelation

    def instance(self) -> InstanceFile:
        relations = {'R': self.R, 'R1': self.R1, 'R2': self.R2, 'S': self.S}
        return InstanceFile(self.space, relations, structure=DeclaredStructure('R', ('R1', 'R2'), sub='S'))


def relation(space: FiniteSpace, *classes) -> EquivRelation:
    return EquivRelation.from_classes(space, classes, space.points())


@pytest.fixture
def e_free() -> Example:
    """{01|2|3} and {0|12|3}, free with join {012|3}; S = {02|1|3}."""
    X = FiniteSpace(4)
    R1, R2 = relation(X, [0, 1]), relation(X, [1, 2])
    return Example(X, join([R1, R2]), R1, R2, relation(X, [0, 2]))


@pytest.fixture
def e_cycle() -> Example:
    """{01|23} and {12|30}: not free, their join is total."""
    X = FiniteSpace(4)
    R1, R2 = relation(X, [0, 1], [2, 3]), relation(X, [1, 2], [3, 0])
    return Example(X, join([R1, R2]), R1, R2, relation(X, [0, 2]))


@pytest.fixture
def e_sub(e_free) -> EquivRelation:
    return e_free.S
