import json

import pytest

from arboretum.common.constants import CertificateKind
from arboretum.common.errors import ParseError, ValidationError
from arboretum.decomp.kurosh import kurosh, restrict_decomposition
from arboretum.decomp.product_verifier import Accept, Reject, verify_free_product
from arboretum.harness.instance_file import (InstanceFile, TreeingCertificate, digest,
                                             parse_certificate, parse_instance, serialize_certificate,
                                             serialize_instance)
from arboretum.space.graphing import Graphing, Treeing
from arboretum.space.partial_iso import PartialIso


def _instance_text(**relations):
    return json.dumps({'size': 3, 'relations': relations})


def test_serialized_text_is_canonical(e_free):
    instance = e_free.instance()
    instance = InstanceFile(instance.space, instance.relations,
                            isos={'phi': PartialIso(e_free.space, ((0, 2), (3, 1)))},
                            graphings={'T': Graphing.from_unordered(e_free.space, [(0, 1), (1, 2)])},
                            structure=instance.structure)
    text = serialize_instance(instance)
    parsed = parse_instance(text)
    assert serialize_instance(parsed) == text
    assert parsed.product() == e_free.R
    assert parsed.sub() == e_free.S
    assert parsed.isos['phi'].pairs == ((0, 2), (3, 1))
    assert digest(parsed) == digest(instance)


def test_digest_depends_on_the_relations(e_free, e_cycle):
    assert digest(e_free.instance()) != digest(e_cycle.instance())


def test_repeated_point():
    with pytest.raises(ValidationError):
        parse_instance(_instance_text(R={'domain': [0, 1, 2], 'classes': [[0, 1], [1, 2]]}))


def test_point_out_of_range():
    with pytest.raises(ValidationError):
        parse_instance(_instance_text(R={'classes': [[0, 5]]}))


def test_partition_outside_its_domain():
    with pytest.raises(ValidationError):
        parse_instance(_instance_text(R={'domain': [0, 1], 'classes': [[1, 2]]}))


def test_loop_in_a_graphing():
    with pytest.raises(ValidationError):
        parse_instance(json.dumps({'size': 3, 'graphings': {'T': [[1, 1]]}}))


def test_malformed_text():
    with pytest.raises(ParseError) as info:
        parse_instance('{"size": 3,\n "relations": }')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_instance(json.dumps({'relations': {}}))
    with pytest.raises(ParseError):
        parse_instance('[1, 2]')


def test_structure_must_name_relations():
    text = json.dumps({'size': 2, 'relations': {'R': {'classes': [[0, 1]]}},
                       'structure': {'relation': 'R', 'factors': ['R1']}})
    with pytest.raises(ValidationError):
        parse_instance(text)


def test_explicit_sub_without_structure(e_free):
    instance = InstanceFile(e_free.space, {'S': e_free.S})
    assert instance.sub('S') == e_free.S
    with pytest.raises(ValidationError):
        instance.sub()


def test_product_certificates(e_free, e_cycle):
    accepted, instance_digest = parse_certificate(
        serialize_certificate(verify_free_product(e_free.R, [e_free.R1, e_free.R2]), 'abc'))
    assert isinstance(accepted, Accept)
    assert instance_digest == 'abc'
    assert accepted.factors == (e_free.R1, e_free.R2)
    rejected, _ = parse_certificate(
        serialize_certificate(verify_free_product(e_cycle.R, [e_cycle.R1, e_cycle.R2]), 'abc'))
    assert isinstance(rejected, Reject)
    assert rejected.closing_tuple.points == (0, 1, 2, 3, 0)


def test_decomposition_certificates(e_free):
    decomposition = kurosh(e_free.R, [e_free.R1, e_free.R2], e_free.S)
    parsed, _ = parse_certificate(serialize_certificate(decomposition, 'abc'))
    assert parsed.kind == CertificateKind.KUROSH
    assert [k.relation for k in parsed.factors] == [k.relation for k in decomposition.factors]
    assert parsed.identity_factors == decomposition.identity_factors
    assert parsed.treeing.unordered_edges() == [(0, 2)]
    restriction = restrict_decomposition(e_free.R, [e_free.R1, e_free.R2], e_free.space.subset([0, 2, 3]))
    parsed, _ = parse_certificate(serialize_certificate(restriction, 'abc'))
    assert parsed.kind == CertificateKind.RESTRICTION
    assert parsed.domain == restriction.domain


def test_treeing_certificate(e_free):
    certificate = TreeingCertificate(e_free.R, Treeing.from_unordered(e_free.space, [(0, 1), (1, 2)]))
    parsed, _ = parse_certificate(serialize_certificate(certificate, 'abc'))
    assert isinstance(parsed, TreeingCertificate)
    assert parsed.treeing.unordered_edges() == [(0, 1), (1, 2)]


def test_bad_certificate_header():
    with pytest.raises(ParseError):
        parse_certificate(json.dumps({'kind': 'nothing', 'size': 2}))
