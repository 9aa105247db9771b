import pytest
from hypothesis import given, settings, strategies as st

from arboretum.common.errors import NotCompleteDomain, NotFreeProduct, ValidationError
from arboretum.harness.generators import GeneratorConfig, gen_free_product, gen_treeing
from arboretum.space.graphing import Graphing, Treeing
from arboretum.treefield.bass_serre import bass_serre_free, free_product_field
from arboretum.treefield.extraction import (amalgam_subrelation_treeing, extract_treeing, fundamental_subforest,
                                            quasi_free_check, retraction_treeing, subrelation_treeing,
                                            union_treeing)
from arboretum.treefield.graph_field import is_treefield
from arboretum.treefield.graphing_field import free_product_treeing_field, from_graphing
from arboretum.treefield.staged_sections import StagedSections
from arboretum.space.equiv_relation import EquivRelation


def _is_tree_on_every_class(treeing: Treeing, relation: EquivRelation) -> bool:
    edges = treeing.unordered_edges()
    for class_ in relation.extend_trivially().classes():
        inside = [e for e in edges if e[0] in class_]
        if len(inside) != len(class_) - 1:
            return False
    return treeing.is_treeing_of(relation)


def test_canonical_field_of_a_treeing_is_a_tree_field(e_free):
    path = Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])
    R, field = from_graphing(path)
    assert R == e_free.R
    assert is_treefield(field) is None
    triangle = Graphing.from_unordered(e_free.space, [(0, 1), (1, 2), (2, 0)])
    assert is_treefield(from_graphing(triangle)[1]) is not None


def test_extract_treeing_of_a_canonical_field(e_free):
    path = Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])
    _, field = from_graphing(path)
    assert _is_tree_on_every_class(extract_treeing(field), e_free.R)


def test_extract_treeing_of_the_bass_serre_field(e_free):
    field = bass_serre_free(e_free.R, e_free.R1, e_free.R2)
    assert quasi_free_check(field)
    assert _is_tree_on_every_class(extract_treeing(field), e_free.R)


def test_canonical_field_of_the_empty_graphing(e_free):
    R, field = from_graphing(Graphing(e_free.space, frozenset()))
    assert R == EquivRelation.trivial(e_free.space)
    assert len(field.edges) == 0
    assert all(len(field.vertices.fiber(x)) == 1 for x in e_free.space.points())
    assert is_treefield(field) is None
    assert extract_treeing(field).unordered_edges() == []


def test_canonical_field_with_an_isolated_point(e_free):
    path = Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])
    _, field = from_graphing(path)
    assert field.edges.fiber(3) == ()
    assert len(field.edges.fiber(0)) == 4
    assert is_treefield(field) is None
    assert extract_treeing(field).is_treeing_of(e_free.R)


def test_extract_treeing_of_the_bass_serre_field_generates_the_product(e_free):
    treeing = extract_treeing(bass_serre_free(e_free.R, e_free.R1, e_free.R2))
    assert treeing.generated_relation() == e_free.R
    assert treeing.cycle() is None


def test_extract_treeing_of_a_subrelation_acting_on_the_bass_serre_field(e_free):
    field = bass_serre_free(e_free.R, e_free.R1, e_free.R2).with_acting_relation(e_free.S)
    assert extract_treeing(field).unordered_edges() == [(0, 2)]


def test_subrelation_treeing_with_an_isolated_point(e_free):
    path = Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])
    trivial = EquivRelation.trivial(e_free.space)
    assert subrelation_treeing(path, trivial).unordered_edges() == []
    assert subrelation_treeing(path, e_free.S).unordered_edges() == [(0, 2)]


def test_extract_treeing_needs_a_tree_field(e_cycle):
    with pytest.raises(ValidationError):
        extract_treeing(bass_serre_free(e_cycle.R, e_cycle.R1, e_cycle.R2))


def test_fundamental_subforest_meets_every_orbit_once(e_free):
    subforest = fundamental_subforest(bass_serre_free(e_free.R, e_free.R1, e_free.R2))
    assert subforest.num_vertices() == 6
    assert subforest.domain == e_free.space.subset([0, 3])


def test_staged_sections_cover_every_vertex(e_free):
    field = bass_serre_free(e_free.R, e_free.R1, e_free.R2)
    staged = StagedSections(field)
    assert staged.covered() == set(field.vertices.carrier())
    assert staged.pieces[0].stage == 0
    assert staged.pieces[0].parent is None


def test_retraction_treeing(e_free):
    X = e_free.space
    assert retraction_treeing(e_free.R, X.subset([0, 3])).unordered_edges() == [(0, 1), (0, 2)]
    with pytest.raises(NotCompleteDomain):
        retraction_treeing(e_free.R, X.subset([0]))


def test_subrelation_treeing(e_free):
    path = Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])
    assert _is_tree_on_every_class(subrelation_treeing(path, e_free.S), e_free.S)


def test_amalgam_subrelation_treeing(e_free):
    trivial = EquivRelation.trivial(e_free.space)
    treeing = amalgam_subrelation_treeing(e_free.R, e_free.R1, e_free.R2, trivial, e_free.S)
    assert _is_tree_on_every_class(treeing, e_free.S)


def test_union_treeing(e_free, e_cycle):
    X = e_free.space
    union = union_treeing(Treeing.from_unordered(X, [(0, 1)]), Treeing.from_unordered(X, [(1, 2)]))
    assert union.is_treeing_of(e_free.R)
    with pytest.raises(NotFreeProduct):
        union_treeing(Treeing.from_unordered(X, [(0, 1), (2, 3)]), Treeing.from_unordered(X, [(1, 2), (0, 3)]))


def test_free_product_treeing_field(e_free):
    X = e_free.space
    field = free_product_treeing_field(Treeing.from_unordered(X, [(0, 1)]), Treeing.from_unordered(X, [(1, 2)]))
    assert is_treefield(field) is None


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=20, deadline=None)
def test_extraction_from_random_treeings(seed):
    instance = gen_treeing(GeneratorConfig(seed=seed, size=7))
    R, field = from_graphing(instance.graphings['T'])
    assert _is_tree_on_every_class(extract_treeing(field), R)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=20, deadline=None)
def test_extraction_for_subrelations_of_free_products(seed):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=7))
    S = instance.sub()
    field = free_product_field(instance.product(), instance.factors()).with_acting_relation(S)
    assert _is_tree_on_every_class(extract_treeing(field), S)
