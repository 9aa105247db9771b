import pytest

from arboretum.common.constants import DomainKind
from arboretum.common.errors import DomainMismatch, NotSubrelation, SpaceMismatch, ValidationError
from arboretum.space.equiv_relation import (EquivRelation, check_subrelation, classify_domain, fundamental_domain,
                                            intersect, is_subrelation, join, missing_pair, relation_generated_by,
                                            restrict, saturate)
from arboretum.space.finite_space import FiniteSpace


def test_space_needs_a_point():
    with pytest.raises(ValidationError):
        FiniteSpace(0)


def test_from_classes_canonicalizes(e_free):
    assert e_free.R.labels == (0, 0, 0, 3)
    assert e_free.R.classes() == [(0, 1, 2), (3,)]
    assert repr(e_free.R) == '{012|3}'


def test_repeated_point_is_rejected():
    with pytest.raises(ValidationError, match='repeats'):
        EquivRelation.from_classes(FiniteSpace(3), [[0, 1], [1, 2]])


def test_out_of_range_point_is_rejected():
    with pytest.raises(ValidationError, match='out of range'):
        EquivRelation.from_classes(FiniteSpace(3), [[0, 3]])


def test_partial_domain():
    X = FiniteSpace(4)
    R = EquivRelation.from_classes(X, [[0, 2]])
    assert sorted(R.domain.members) == [0, 2]
    assert not R.in_domain(1)
    assert not R.equivalent(1, 1)
    assert R.extend_trivially().classes() == [(0, 2), (1,), (3,)]


def test_join_and_intersect(e_free):
    assert join([e_free.R1, e_free.R2]) == e_free.R
    assert intersect(e_free.R1, e_free.R2).is_trivial()
    assert intersect(e_free.R, e_free.R1) == e_free.R1


def test_join_of_partial_domains():
    X = FiniteSpace(4)
    A = EquivRelation.from_classes(X, [[0, 1]])
    B = EquivRelation.from_classes(X, [[1, 2]])
    joined = join([A, B])
    assert joined.classes() == [(0, 1, 2)]
    assert 3 not in joined.domain


def test_join_needs_relations():
    with pytest.raises(ValueError):
        join([])


def test_join_checks_spaces():
    with pytest.raises(SpaceMismatch):
        join([EquivRelation.trivial(FiniteSpace(2)), EquivRelation.trivial(FiniteSpace(3))])


def test_relation_generated_by_pairs():
    R = relation_generated_by(FiniteSpace(5), [(0, 3), (3, 4)])
    assert R.classes() == [(0, 3, 4), (1,), (2,)]


def test_saturate(e_free):
    X = e_free.space
    assert sorted(saturate(e_free.R, X.subset([1])).members) == [0, 1, 2]
    with pytest.raises(DomainMismatch):
        saturate(restrict(e_free.R, X.subset([0, 1])), X.subset([3]))


def test_classify_domain(e_free):
    X = e_free.space
    assert classify_domain(e_free.R, X.subset([0, 3])) == DomainKind.BOTH
    assert classify_domain(e_free.R, X.subset([0, 1, 3])) == DomainKind.COMPLETE
    assert classify_domain(e_free.R, X.subset([0])) == DomainKind.NEITHER
    assert fundamental_domain(e_free.R) == X.subset([0, 3])


def test_restrict(e_free):
    X = e_free.space
    restricted = restrict(e_free.R, X.subset([0, 2, 3]))
    assert restricted.classes() == [(0, 2), (3,)]


def test_subrelation(e_free):
    assert is_subrelation(e_free.S, e_free.R)
    assert not is_subrelation(e_free.R, e_free.S)
    check_subrelation(e_free.R1, e_free.R)
    with pytest.raises(NotSubrelation) as info:
        check_subrelation(e_free.R, e_free.R1)
    assert info.value.witness is not None


def test_missing_pair(e_free):
    assert missing_pair(e_free.R, e_free.R1) == (0, 2)
    assert missing_pair(e_free.R, join([e_free.R1, e_free.R2])) is None
