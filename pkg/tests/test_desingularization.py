import pytest
from hypothesis import given, settings, strategies as st

from arboretum.common.constants import Bullet
from arboretum.common.errors import EmptyGeodesic, EmptyIntersection, ValidationError
from arboretum.decomp.analysis import geodesic_amalgam, generation_split
from arboretum.decomp.desingularization import (ExtraEdge, desingularize, representatives_forest,
                                                validate_desingularization)
from arboretum.decomp.product_verifier import Accept
from arboretum.harness.generators import GeneratorConfig, gen_free_product
from arboretum.space.partial_iso import PartialIso
from arboretum.treefield.bass_serre import bass_serre_free, free_product_field


@pytest.fixture
def e_free_desingularization(e_free):
    field = bass_serre_free(e_free.R, e_free.R1, e_free.R2).with_acting_relation(e_free.S)
    return desingularize(field)


def test_representatives_forest(e_free):
    field = bass_serre_free(e_free.R, e_free.R1, e_free.R2).with_acting_relation(e_free.S)
    forest = representatives_forest(field)
    forest.tree.check()
    assert len(forest.tree.vertex_relations) == 4
    assert forest.tree.parent(1) == 0
    assert forest.tree.parent(2) == 1
    assert forest.tree.parent(3) == 0


def test_representatives_forest_needs_a_tree_field(e_cycle):
    with pytest.raises(ValidationError):
        representatives_forest(bass_serre_free(e_cycle.R, e_cycle.R1, e_cycle.R2))


def test_one_extra_edge_under_s(e_free_desingularization):
    d = e_free_desingularization
    assert len(d.extra_edges) == 1
    a = d.extra_edges[0]
    assert (a.origin, a.terminus) == (0, 1)
    assert a.conjugator.pairs == ((0, 2),)
    assert validate_desingularization(d) is None


def test_no_extra_edge_for_the_whole_product(e_free):
    d = desingularize(bass_serre_free(e_free.R, e_free.R1, e_free.R2))
    assert d.extra_edges == ()
    assert validate_desingularization(d) is None


def test_diagonal_conjugator_is_reported(e_free_desingularization):
    d = e_free_desingularization
    a = d.extra_edges[0]
    space = d.acting_relation.space
    broken = ExtraEdge(a.name, a.origin, a.terminus, PartialIso(space, ((0, 0),)), a.section)
    violation = validate_desingularization(d.with_extra_edge(0, broken))
    assert violation.bullet == Bullet.DIAGONAL_AVOIDANCE


def test_missing_extra_edge_breaks_the_edge_partition(e_free_desingularization):
    violation = validate_desingularization(e_free_desingularization.without_extra_edge(0))
    assert violation.bullet == Bullet.EDGE_PARTITION


def test_generation_split(e_free_desingularization):
    split = generation_split(e_free_desingularization)
    assert split.treeing.unordered_edges() == [(0, 2)]
    assert split.vertex_join.is_trivial()
    assert split.ok()


def test_geodesic_amalgam(e_free_desingularization):
    d = e_free_desingularization
    amalgam = geodesic_amalgam(d, 2, 3)
    assert amalgam.path == (2, 1, 0, 3)
    assert amalgam.domain == d.acting_relation.space.subset([1])
    assert isinstance(amalgam.verdict, Accept)
    with pytest.raises(EmptyGeodesic):
        geodesic_amalgam(d, 0, 0)


@pytest.mark.slow
@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=20, deadline=None)
def test_random_desingularizations(seed):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=7))
    field = free_product_field(instance.product(), instance.factors()).with_acting_relation(instance.sub())
    d = desingularize(field)
    assert validate_desingularization(d) is None
    assert generation_split(d).ok()
    tree = d.max_tree
    for Q in tree.vertices_from_root()[1:]:
        P = tree.parent(Q)
        try:
            amalgam = geodesic_amalgam(d, P, Q)
        except EmptyIntersection:
            continue
        assert isinstance(amalgam.verdict, Accept)
