from dataclasses import replace

import pytest

from arboretum.common.constants import CertificateKind
from arboretum.decomp.certificate_checker import check_certificate, check_product, check_treeing
from arboretum.decomp.kurosh import kurosh
from arboretum.decomp.product_verifier import Accept, verify_free_product
from arboretum.space.graphing import Graphing, Treeing


def test_product_verdicts_are_confirmed(e_free, e_cycle):
    assert check_product(verify_free_product(e_free.R, [e_free.R1, e_free.R2])).ok
    assert check_product(verify_free_product(e_cycle.R, [e_cycle.R1, e_cycle.R2])).ok


def test_false_accept_is_caught(e_cycle):
    report = check_product(Accept(CertificateKind.FREE_PRODUCT, e_cycle.R, (e_cycle.R1, e_cycle.R2)))
    assert not report.ok
    assert report.failures[0].startswith('freeness')


def test_treeing_check(e_free):
    assert check_treeing(e_free.R, Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)])).ok
    triangle = Graphing.from_unordered(e_free.space, [(0, 1), (1, 2), (2, 0)])
    assert not check_treeing(e_free.R, triangle).ok
    assert not check_treeing(e_free.R, Treeing.from_unordered(e_free.space, [(0, 1)])).ok


def test_tampered_decomposition_is_caught(e_free):
    decomposition = kurosh(e_free.R, [e_free.R1, e_free.R2], e_free.S)
    report = check_certificate(replace(decomposition, treeing=Treeing.empty(e_free.space)))
    assert not report.ok
    assert any(failure.startswith('generation') for failure in report.failures)


def test_missing_identity_record_is_caught(e_free):
    decomposition = kurosh(e_free.R, [e_free.R1, e_free.R2], e_free.R)
    report = check_certificate(replace(decomposition, identity_factors=(None, None)))
    assert any(failure.startswith('identity') for failure in report.failures)


def test_unknown_certificate():
    with pytest.raises(TypeError):
        check_certificate(object())
