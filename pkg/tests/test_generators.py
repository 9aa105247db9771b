import pytest
from hypothesis import given, settings, strategies as st

from arboretum.common.constants import GeneratorKind
from arboretum.common.errors import ValidationError
from arboretum.decomp.product_verifier import Reject, verify_free_product
from arboretum.harness.generators import (GeneratorConfig, gen_amalgam, gen_free_product, gen_subrelation,
                                          gen_treeing, generate, perturb)
from arboretum.harness.instance_file import serialize_instance
from arboretum.space.equiv_relation import is_subrelation


def test_same_seed_same_instance():
    cfg = GeneratorConfig(seed=11, size=9, factors=3)
    assert serialize_instance(gen_free_product(cfg)) == serialize_instance(gen_free_product(cfg))
    assert serialize_instance(gen_amalgam(cfg)) == serialize_instance(gen_amalgam(cfg))


def test_single_point():
    instance = gen_free_product(GeneratorConfig(size=1))
    assert instance.product().is_trivial()
    assert instance.sub().is_trivial()


def test_configuration_is_checked():
    with pytest.raises(ValidationError):
        GeneratorConfig(size=0)
    with pytest.raises(ValidationError):
        GeneratorConfig(density=1.5)
    with pytest.raises(ValidationError):
        GeneratorConfig(min_class=3, max_class=2)


def test_subrelation_density_bounds():
    R = gen_free_product(GeneratorConfig(seed=4, size=8)).product()
    assert gen_subrelation(1, R, density=0.0).is_trivial()
    assert gen_subrelation(1, R, density=1.0) == R


@given(st.integers(min_value=0, max_value=10_000), st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=50, deadline=None)
def test_generated_subrelations(seed, density):
    instance = gen_free_product(GeneratorConfig(seed=seed, size=8, density=density))
    assert is_subrelation(instance.sub(), instance.product())


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_generated_treeings(seed):
    instance = gen_treeing(GeneratorConfig(seed=seed, size=8))
    T = instance.graphings['T']
    assert T.is_treeing_of(instance.relation('R'))
    assert instance.structure is None


def test_perturbed_free_product(e_free):
    perturbed = perturb(e_free.instance(), seed=0)
    assert isinstance(verify_free_product(perturbed.product(), perturbed.factors()), Reject)


def test_perturb_without_merge():
    instance = gen_free_product(GeneratorConfig(size=1))
    assert perturb(instance, seed=0) is instance


def test_generate_dispatch():
    assert generate(GeneratorConfig(seed=2, kind=GeneratorKind.AMALGAM)).core() is not None
    assert generate(GeneratorConfig(seed=2, kind=GeneratorKind.TREEING)).graphings
    perturbed = generate(GeneratorConfig(seed=2, kind=GeneratorKind.PERTURBED))
    assert perturbed.structure.sub == 'S'
