import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from ..common.constants import CertificateKind, Verdict
from ..common.errors import ParseError, ValidationError
from ..decomp.kurosh import KuroshDecomposition, KuroshFactor, RestrictionDecomposition
from ..decomp.product_verifier import Accept, Reject
from ..decomp.reduced_tuple import ReducedTuple
from ..space.equiv_relation import EquivRelation
from ..space.finite_space import FiniteSpace, PointSet
from ..space.graphing import Graphing
from ..space.partial_iso import PartialIso


@dataclass(frozen=True)
class DeclaredStructure:
    """
    Structure an instance claims: relation is the product of factors (amalgamated over core when given).

    sub names a sub-relation to decompose and restrict a subset to restrict to.
    """
    relation: str
    factors: Tuple[str, ...]
    core: Optional[str] = None
    sub: Optional[str] = None
    restrict: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class InstanceFile:
    """
    Named relations, partial isomorphisms and graphings on one finite space.

    Parameters
    ----------
    space : FiniteSpace
        Ambient space.

    relations, isos, graphings : Dict[str, ...]
        Named objects.

    structure : DeclaredStructure, optional (default=None)
        Declared product structure.
    """
    space: FiniteSpace
    relations: Dict[str, EquivRelation] = field(default_factory=dict)
    isos: Dict[str, PartialIso] = field(default_factory=dict)
    graphings: Dict[str, Graphing] = field(default_factory=dict)
    structure: Optional[DeclaredStructure] = None

    def relation(self, name: str) -> EquivRelation:
        try:
            return self.relations[name]
        except KeyError:
            raise ValidationError('declared names must refer to relations', f'no relation named {name!r}')

    def factors(self) -> List[EquivRelation]:
        return [self.relation(name) for name in self._structure().factors]

    def product(self) -> EquivRelation:
        return self.relation(self._structure().relation)

    def core(self) -> Optional[EquivRelation]:
        core = self._structure().core
        return None if core is None else self.relation(core)

    def sub(self, name: Optional[str] = None) -> EquivRelation:
        if name is None:
            name = self._structure().sub
        if name is None:
            raise ValidationError('a sub-relation is needed', 'none declared and none given')
        return self.relation(name)

    def restriction_set(self, points: Optional[Tuple[int, ...]] = None) -> PointSet:
        if points is None:
            points = self._structure().restrict
        if points is None:
            raise ValidationError('a restriction set is needed', 'none declared and none given')
        return self.space.subset(points)

    def _structure(self) -> DeclaredStructure:
        if self.structure is None:
            raise ValidationError('instance declares no structure')
        return self.structure

    def check(self):
        """Raise ValidationError when the declared structure refers to missing objects."""
        if self.structure is not None:
            self.product()
            self.factors()
            self.core()
            if self.structure.sub is not None:
                self.sub()
            if self.structure.restrict is not None:
                self.restriction_set()


def encode_relation(R: EquivRelation) -> Dict[str, Any]:
    return {'domain': sorted(R.domain.members), 'classes': [list(c) for c in R.classes()]}


def decode_relation(space: FiniteSpace, data: Dict[str, Any], name: str = 'relation') -> EquivRelation:
    domain = [int(x) for x in data.get('domain', [])]
    classes = [[int(x) for x in c] for c in data.get('classes', [])]
    listed = {x for c in classes for x in c}
    outside = sorted(listed - set(domain)) if 'domain' in data else []
    if outside:
        raise ValidationError('partition must stay inside its domain', f'{name}: point {outside[0]}')
    return EquivRelation.from_classes(space, classes, domain)


def encode_pairs(pairs) -> List[List[int]]:
    return [[int(x), int(y)] for x, y in pairs]


def decode_pairs(pairs) -> Tuple[Tuple[int, int], ...]:
    return tuple((int(x), int(y)) for x, y in pairs)


def _instance_to_dict(instance: InstanceFile) -> Dict[str, Any]:
    data = {
        'size': instance.space.size,
        'relations': {name: encode_relation(R) for name, R in instance.relations.items()},
        'isos': {name: encode_pairs(phi.pairs) for name, phi in instance.isos.items()},
        'graphings': {name: encode_pairs(g.unordered_edges()) for name, g in instance.graphings.items()},
    }
    if instance.structure is not None:
        s = instance.structure
        data['structure'] = {'relation': s.relation, 'factors': list(s.factors), 'core': s.core, 'sub': s.sub,
                             'restrict': None if s.restrict is None else sorted(s.restrict)}
    return data


def serialize_instance(instance: InstanceFile) -> str:
    """Canonical text: sorted keys, two-space indentation, trailing newline."""
    return json.dumps(_instance_to_dict(instance), indent=2, sort_keys=True) + '\n'


def _load(text: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg)
    if not isinstance(data, dict):
        raise ParseError(1, 'top level must be an object')
    return data


def parse_instance(text: str) -> InstanceFile:
    """
    Parse an instance file.

    Raises
    ------
    ParseError
        On malformed text or missing fields.

    ValidationError
        When an object breaks its invariants (repeated or out of range point, loop in a graphing).
    """
    data = _load(text)
    if 'size' not in data:
        raise ParseError(1, 'missing field "size"')
    space = FiniteSpace(int(data['size']))
    relations = {name: decode_relation(space, r, name) for name, r in data.get('relations', {}).items()}
    isos = {name: PartialIso(space, decode_pairs(pairs)) for name, pairs in data.get('isos', {}).items()}
    graphings = {name: Graphing.from_unordered(space, decode_pairs(pairs))
                 for name, pairs in data.get('graphings', {}).items()}
    structure = None
    if data.get('structure') is not None:
        s = data['structure']
        if 'relation' not in s or 'factors' not in s:
            raise ParseError(1, 'structure needs "relation" and "factors"')
        restrict = s.get('restrict')
        structure = DeclaredStructure(s['relation'], tuple(s['factors']), s.get('core'), s.get('sub'),
                                      None if restrict is None else tuple(int(x) for x in restrict))
    instance = InstanceFile(space, relations, isos, graphings, structure)
    instance.check()
    return instance


def digest(instance: InstanceFile) -> str:
    return hashlib.sha256(serialize_instance(instance).encode('utf-8')).hexdigest()


@dataclass(frozen=True)
class TreeingCertificate:
    relation: EquivRelation
    treeing: Graphing

    kind = CertificateKind.TREEING


Certificate = Union[Accept, Reject, KuroshDecomposition, TreeingCertificate]


def _encode_record(k: KuroshFactor) -> Dict[str, Any]:
    return {'factor': k.factor, 'conjugator': encode_pairs(k.conjugator.pairs), 'relation': encode_relation(k.relation),
            'vertex': k.vertex}


def serialize_certificate(certificate: Certificate, instance_digest: str) -> str:
    """Canonical text of a certificate bound to the digest of the instance it certifies."""
    data: Dict[str, Any] = {'kind': certificate.kind.value, 'digest': instance_digest,
                            'size': certificate.relation.space.size, 'relation': encode_relation(certificate.relation)}
    if isinstance(certificate, (Accept, Reject)):
        data['verdict'] = certificate.verdict.value
        data['factors'] = [encode_relation(f) for f in certificate.factors]
        data['core'] = None if certificate.core is None else encode_relation(certificate.core)
        if isinstance(certificate, Reject):
            t = certificate.closing_tuple
            data['closing_tuple'] = {'points': list(t.points), 'tags': list(t.tags)}
    elif isinstance(certificate, KuroshDecomposition):
        data['ambient'] = encode_relation(certificate.ambient)
        data['free_factors'] = [encode_relation(f) for f in certificate.free_factors]
        data['records'] = [_encode_record(k) for k in certificate.factors]
        data['treeing'] = encode_pairs(certificate.treeing.unordered_edges())
        data['identity_factors'] = list(certificate.identity_factors)
        if isinstance(certificate, RestrictionDecomposition):
            data['domain'] = sorted(certificate.domain.members)
    else:
        data['treeing'] = encode_pairs(certificate.treeing.unordered_edges())
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def parse_certificate(text: str) -> Tuple[Certificate, str]:
    """
    Parse a certificate file, without verifying it.

    Returns
    -------
    certificate : Certificate
        Decoded certificate; decomposition certificates carry no free product certificate.

    digest : str
        Digest of the certified instance.
    """
    data = _load(text)
    try:
        kind = CertificateKind(data['kind'])
        space = FiniteSpace(int(data['size']))
        relation = decode_relation(space, data['relation'])
        instance_digest = data['digest']
    except (KeyError, ValueError) as e:
        raise ParseError(1, f'bad certificate header: {e}')
    if kind in (CertificateKind.FREE_PRODUCT, CertificateKind.AMALGAM):
        factors = tuple(decode_relation(space, f) for f in data['factors'])
        core = None if data.get('core') is None else decode_relation(space, data['core'])
        if Verdict(data['verdict']) == Verdict.ACCEPT:
            return Accept(kind, relation, factors, core), instance_digest
        t = data['closing_tuple']
        return Reject(kind, relation, factors, ReducedTuple(tuple(t['points']), tuple(t['tags'])), core), \
            instance_digest
    treeing = Graphing.from_unordered(space, decode_pairs(data['treeing']))
    if kind == CertificateKind.TREEING:
        return TreeingCertificate(relation, treeing), instance_digest
    records = tuple(KuroshFactor(int(r['factor']), PartialIso(space, decode_pairs(r['conjugator'])),
                                 decode_relation(space, r['relation']), r['vertex']) for r in data['records'])
    identity = tuple(None if i is None else int(i) for i in data['identity_factors'])
    args = (decode_relation(space, data['ambient']), relation,
            tuple(decode_relation(space, f) for f in data['free_factors']), records, treeing, identity, None)
    if kind == CertificateKind.RESTRICTION:
        return RestrictionDecomposition(*args, space.subset(data['domain'])), instance_digest
    return KuroshDecomposition(*args), instance_digest
