import pytest
from hypothesis import given, settings, strategies as st

from arboretum.common.errors import DomainMismatch, InvalidAction, NotCompleteDomain, NotSaturating, ValidationError
from arboretum.fibered.canonical_spaces import canonical_left, quotient, right_quotient, right_quotient_symmetry
from arboretum.fibered.fibered_space import Action, FiberedSpace, PartialSection
from arboretum.fibered.morphisms import canonical_iso, induced_morphism
from arboretum.fibered.orbits import (check_saturating, exhaust_sections, is_homogeneous, orbit_relation,
                                      rf_fundamental_domain, stabilizer, validate_action)
from arboretum.harness.generators import GeneratorConfig, gen_free_product
from arboretum.space.equiv_relation import EquivRelation
from arboretum.space.finite_space import FiniteSpace


@pytest.fixture
def total_pair():
    return EquivRelation.total(FiniteSpace(2))


def test_canonical_left_is_an_action(e_free):
    space, action, diagonal = canonical_left(e_free.R)
    validate_action(space, action)
    assert len(space) == 3 * 3 + 1
    assert diagonal(2) == (2, 2)
    assert stabilizer(space, action, diagonal).is_trivial()


def test_canonical_left_needs_full_domain(e_free):
    with pytest.raises(DomainMismatch):
        canonical_left(EquivRelation.from_classes(e_free.space, [[0, 1]]))


def test_broken_table_is_reported(total_pair):
    space, action, _ = canonical_left(total_pair)
    table = dict(action.table)
    table[(0, 0, (0, 1))] = (0, 0)
    with pytest.raises(InvalidAction) as info:
        validate_action(space, Action(total_pair, table))
    assert info.value.witness == (0, 0, (0, 1))


def test_empty_fibers_only_for_edge_spaces():
    X = FiniteSpace(3)
    fibers = ((('e', 0),), (), (('e', 2),))
    with pytest.raises(ValidationError):
        FiberedSpace(X, fibers)
    edges = FiberedSpace(X, fibers, allow_empty=True)
    assert edges.fiber(1) == ()
    assert len(edges) == 2
    assert edges.proj(('e', 2)) == 2


def test_exhaust_sections_of_canonical_left(total_pair):
    space, action, _ = canonical_left(total_pair)
    sections = exhaust_sections(space, action)
    assert [s.image() for s in sections] == [[(0, 0), (1, 0)], [(0, 1), (1, 1)]]
    assert rf_fundamental_domain(space, action) == frozenset({(0, 0), (0, 1)})
    assert orbit_relation(space, action).num_classes() == 2


def test_quotient_section_has_stabilizer_s(e_free):
    space, action, d_S = quotient(e_free.R, e_free.S)
    assert stabilizer(space, action, d_S) == e_free.S
    check_saturating(space, action, d_S)


def test_quotient_needs_complete_domain(e_free):
    S = EquivRelation.from_classes(e_free.space, [[0, 1]])
    with pytest.raises(NotCompleteDomain):
        quotient(e_free.R, S)


def test_non_saturating_section(e_free):
    space, action, _ = canonical_left(e_free.R)
    s = PartialSection.from_mapping(e_free.space, {0: (0, 0)})
    with pytest.raises(NotSaturating):
        check_saturating(space, action, s)


def test_right_quotient_symmetry(e_free):
    symmetry = right_quotient_symmetry(e_free.R, e_free.S)
    left_action = quotient(e_free.R, e_free.S).action
    right_action = right_quotient(e_free.R, e_free.S).action
    assert symmetry.is_bijective()
    assert symmetry.is_fiber_preserving()
    assert symmetry.is_equivariant(left_action, right_action)


def test_induced_morphism_to_canonical_quotient(e_free):
    left, left_action, diagonal = canonical_left(e_free.R)
    space, action, d_S = quotient(e_free.R, e_free.S)
    morphism = induced_morphism(left, left_action, diagonal, space, action, d_S)
    assert morphism.is_surjective()
    assert morphism.is_equivariant(left_action, action)


def test_canonical_iso_of_canonical_left(e_free):
    space, action, diagonal = canonical_left(e_free.R)
    iso = canonical_iso(space, action, diagonal)
    assert iso.is_bijective()
    assert all(iso(t) == t for t in space.carrier())


def test_is_homogeneous_on_a_quotient(e_free):
    space, action, _ = quotient(e_free.R, e_free.S)
    section = is_homogeneous(space, action)
    assert section is not None
    check_saturating(space, action, section)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=25, deadline=None)
def test_quotient_contract(seed):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=7))
    R, S = instance.product(), instance.sub()
    space, action, d_S = quotient(R, S)
    assert stabilizer(space, action, d_S) == S
    symmetry = right_quotient_symmetry(R, S)
    assert symmetry.is_bijective()
    assert symmetry.is_equivariant(action, right_quotient(R, S).action)
