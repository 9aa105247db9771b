import pytest

from arboretum.common.errors import DomainMismatch, ValidationError
from arboretum.space.equiv_relation import EquivRelation
from arboretum.space.finite_space import FiniteSpace
from arboretum.space.partial_iso import PartialIso, compose, conjugate, invert, pseudogroup_member, push_forward


@pytest.fixture
def X():
    return FiniteSpace(4)


def test_must_be_injective(X):
    with pytest.raises(ValidationError, match='injective'):
        PartialIso(X, ((0, 2), (1, 2)))


def test_must_be_a_map(X):
    with pytest.raises(ValidationError, match='not a map'):
        PartialIso(X, ((0, 2), (0, 3)))


def test_source_target_and_call(X):
    phi = PartialIso.from_mapping(X, {0: 2, 1: 3})
    assert phi.source == X.subset([0, 1])
    assert phi.target == X.subset([2, 3])
    assert phi(1) == 3
    with pytest.raises(DomainMismatch):
        phi(2)


def test_invert_and_compose(X):
    phi = PartialIso.from_mapping(X, {0: 2, 1: 3})
    assert compose(invert(phi), phi) == PartialIso.identity(X.subset([0, 1]))
    assert compose(phi, PartialIso.from_mapping(X, {3: 0})).pairs == ((3, 2),)
    assert compose(phi, PartialIso.from_mapping(X, {0: 3})).is_empty()


def test_touches_diagonal(X):
    assert PartialIso.from_mapping(X, {0: 2, 1: 1}).touches_diagonal() == 1
    assert PartialIso.from_mapping(X, {0: 2}).touches_diagonal() is None


def test_conjugate_pulls_back(X):
    S = EquivRelation.from_classes(X, [[2, 3]])
    phi = PartialIso.from_mapping(X, {0: 2, 1: 3})
    pulled = conjugate(S, phi)
    assert pulled.classes() == [(0, 1)]
    assert push_forward(pulled, phi) == S


def test_conjugate_needs_matching_domain(X):
    S = EquivRelation.from_classes(X, [[2, 3]])
    with pytest.raises(DomainMismatch):
        conjugate(S, PartialIso.from_mapping(X, {0: 2}))


def test_pseudogroup_member(e_free):
    X = e_free.space
    assert pseudogroup_member(PartialIso.from_mapping(X, {0: 2, 2: 1}), e_free.R)
    assert not pseudogroup_member(PartialIso.from_mapping(X, {0: 3}), e_free.R)
