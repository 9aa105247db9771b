import pytest
from hypothesis import given, settings, strategies as st

from arboretum.common.constants import CertificateKind
from arboretum.common.errors import CoverageViolation, NotFreeProduct, NotSubrelation
from arboretum.decomp.certificate_checker import check_certificate
from arboretum.decomp.kurosh import kurosh, restrict_decomposition
from arboretum.harness.generators import GeneratorConfig, gen_free_product
from arboretum.space.equiv_relation import EquivRelation, restrict


def test_kurosh_of_s(e_free):
    decomposition = kurosh(e_free.R, [e_free.R1, e_free.R2], e_free.S)
    assert decomposition.kind == CertificateKind.KUROSH
    assert decomposition.treeing.unordered_edges() == [(0, 2)]
    assert decomposition.nontrivial_factors() == []
    assert all(position is not None for position in decomposition.identity_factors)
    assert decomposition.certificate is not None
    assert check_certificate(decomposition).ok


def test_kurosh_of_the_whole_product(e_free):
    decomposition = kurosh(e_free.R, [e_free.R1, e_free.R2], e_free.R)
    first, second = (decomposition.factors[p] for p in decomposition.identity_factors)
    assert (first.relation, second.relation) == (e_free.R1, e_free.R2)
    assert decomposition.treeing.unordered_edges() == []


def test_kurosh_of_a_factor(e_free):
    decomposition = kurosh(e_free.R, [e_free.R1, e_free.R2], e_free.R1)
    first, second = (decomposition.factors[p] for p in decomposition.identity_factors)
    assert first.relation == e_free.R1
    assert second.relation.is_trivial()
    assert decomposition.treeing.unordered_edges() == []
    assert [k.relation for k in decomposition.nontrivial_factors()] == [e_free.R1]


def test_kurosh_needs_a_free_product(e_cycle):
    with pytest.raises(NotFreeProduct):
        kurosh(e_cycle.R, [e_cycle.R1, e_cycle.R2], e_cycle.S)


def test_kurosh_needs_a_subrelation(e_free, e_cycle):
    with pytest.raises(NotSubrelation):
        kurosh(e_free.R, [e_free.R1, e_free.R2], e_cycle.R1)


def test_restriction_to_the_whole_space(e_free):
    decomposition = restrict_decomposition(e_free.R, [e_free.R1, e_free.R2], e_free.space.full())
    assert decomposition.kind == CertificateKind.RESTRICTION
    first, second = (decomposition.factors[p] for p in decomposition.identity_factors)
    assert (first.relation, second.relation) == (e_free.R1, e_free.R2)
    assert decomposition.partition_witness() is None
    assert check_certificate(decomposition).ok


def test_restriction_to_a_subset(e_free):
    Y = e_free.space.subset([0, 2, 3])
    decomposition = restrict_decomposition(e_free.R, [e_free.R1, e_free.R2], Y)
    assert decomposition.relation == restrict(e_free.R, Y).extend_trivially()
    assert check_certificate(decomposition).ok


def test_restriction_needs_covering_factors(e_free):
    X = e_free.space
    A1 = EquivRelation.from_classes(X, [[0, 1]])
    A2 = EquivRelation.from_classes(X, [[1, 2]])
    with pytest.raises(CoverageViolation) as info:
        restrict_decomposition(e_free.R, [A1, A2], X.subset([0, 1]))
    assert info.value.witness == 3


@pytest.mark.slow
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=2, max_value=3))
@settings(max_examples=25, deadline=None)
def test_random_kurosh_decompositions(seed, factors):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=8, factors=factors))
    decomposition = kurosh(instance.product(), instance.factors(), instance.sub())
    assert check_certificate(decomposition).ok


@pytest.mark.slow
@given(st.integers(min_value=0, max_value=10_000), st.sets(st.integers(min_value=0, max_value=6), min_size=1))
@settings(max_examples=25, deadline=None)
def test_random_restrictions(seed, points):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=7))
    Y = instance.space.subset(points)
    decomposition = restrict_decomposition(instance.product(), instance.factors(), Y)
    assert check_certificate(decomposition).ok


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=10, deadline=None)
def test_kurosh_is_deterministic_in_factor_order(seed):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=7, factors=3))
    args = instance.product(), instance.factors(), instance.sub()
    first, second = kurosh(*args), kurosh(*args)
    assert first.factors == second.factors
    assert first.identity_factors == second.identity_factors
    assert first.treeing.unordered_edges() == second.treeing.unordered_edges()
    factor_indices = [k.factor for k in first.factors if k.is_identity()]
    positions = [p for p in first.identity_factors if p is not None]
    assert positions == sorted(positions)
    assert [first.factors[p].factor for p in positions] == sorted(set(factor_indices))
