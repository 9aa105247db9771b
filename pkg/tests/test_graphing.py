import pytest

from arboretum.common.errors import ValidationError
from arboretum.space.finite_space import FiniteSpace
from arboretum.space.graphing import Graphing, Treeing, spanning_treeing


def test_graphing_is_irreflexive():
    with pytest.raises(ValidationError, match='irreflexive'):
        Graphing.from_unordered(FiniteSpace(3), [(1, 1)])


def test_graphing_is_symmetric():
    with pytest.raises(ValidationError, match='symmetric'):
        Graphing(FiniteSpace(3), frozenset({(0, 1)}))


def test_treeing_is_acyclic():
    with pytest.raises(ValidationError, match='acyclic'):
        Treeing.from_unordered(FiniteSpace(3), [(0, 1), (1, 2), (2, 0)])


def test_generated_relation_and_treeing_check(e_free):
    path = Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])
    assert path.generated_relation() == e_free.R
    assert path.is_treeing_of(e_free.R)
    assert not path.is_treeing_of(e_free.R1)


def test_spanning_treeing_of_a_triangle():
    X = FiniteSpace(3)
    triangle = Graphing.from_unordered(X, [(0, 1), (1, 2), (2, 0)])
    treeing = spanning_treeing(triangle)
    assert len(treeing.unordered_edges()) == 2
    assert treeing.generated_relation() == triangle.generated_relation()
    assert triangle.cycle() is not None
