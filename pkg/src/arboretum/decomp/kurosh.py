from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from .analysis import generation_split
from .desingularization import Desingularization, desingularize, tree_edge_name
from .product_verifier import Accept, Reject, check_free_product, verify_free_product
from ..common.constants import CertificateKind
from ..common.dev_utils import get_logger
from ..common.errors import CoverageViolation, NotFreeProduct, ValidationError
from ..space.equiv_relation import EquivRelation, check_subrelation, intersect, join, restrict, saturate
from ..space.finite_space import PointSet
from ..space.graphing import Treeing
from ..space.partial_iso import PartialIso, conjugate
from ..treefield.bass_serre import factor_edge_section, free_product_field

logger = get_logger('Kurosh')


@dataclass(frozen=True)
class KuroshFactor:
    """
    One factor of a Kurosh decomposition: the part of the decomposed relation carried by a conjugate of
    a free factor.

    Attributes
    ----------
    factor : int
        Index of the free factor R_i.

    conjugator : PartialIso
        phi, from the domain of the record into the domain of R_i.

    relation : EquivRelation
        The factor relation, on the source of phi.

    vertex : Hashable
        Vertex of the maximal tree it was read from.
    """
    factor: int
    conjugator: PartialIso
    relation: EquivRelation
    vertex: Hashable

    @property
    def domain(self) -> PointSet:
        return self.conjugator.source

    def is_identity(self) -> bool:
        return all(x == y for x, y in self.conjugator.pairs)


@dataclass(frozen=True)
class KuroshDecomposition:
    """
    Decomposition of a sub-relation S of a free product as the free product of its intersections with
    conjugates of the free factors and of a treeable relation.

    Attributes
    ----------
    ambient : EquivRelation
        The free product R.

    relation : EquivRelation
        S, on the whole space.

    free_factors : Tuple[EquivRelation, ...]
        The free factors R_i.

    factors : Tuple[KuroshFactor, ...]
        Factor records.

    treeing : Treeing
        Treeing of the remaining treeable relation.

    identity_factors : Tuple[Optional[int], ...]
        For every free factor, the position of its identity record in factors, if any.

    certificate : Accept
        Free product certificate for the factor relations and the relation of the treeing.
    """
    ambient: EquivRelation
    relation: EquivRelation
    free_factors: Tuple[EquivRelation, ...]
    factors: Tuple[KuroshFactor, ...]
    treeing: Treeing
    identity_factors: Tuple[Optional[int], ...]
    certificate: Accept

    kind = CertificateKind.KUROSH

    def relations(self) -> List[EquivRelation]:
        """Factor relations followed by the relation of the treeing."""
        return [k.relation for k in self.factors] + [self.treeing.generated_relation()]

    def expected_relation(self, k: KuroshFactor) -> EquivRelation:
        phi = k.conjugator
        conjugated = conjugate(restrict(self.free_factors[k.factor], phi.target), phi)
        return intersect(conjugated, restrict(self.relation, phi.source))

    def identity_domain(self, i: int) -> PointSet:
        return self.relation.space.full()

    def nontrivial_factors(self) -> List[KuroshFactor]:
        return [k for k in self.factors if not k.relation.is_trivial()]


@dataclass(frozen=True)
class RestrictionDecomposition(KuroshDecomposition):
    """
    Kurosh decomposition of the restriction of a free product to a subset Y, made of full conjugates of
    the free factors.

    Attributes
    ----------
    domain : PointSet
        Y; relation is the restriction of the free product to Y, extended trivially.
    """
    domain: PointSet

    kind = CertificateKind.RESTRICTION

    def expected_relation(self, k: KuroshFactor) -> EquivRelation:
        phi = k.conjugator
        return conjugate(restrict(self.free_factors[k.factor], phi.target), phi)

    def identity_domain(self, i: int) -> PointSet:
        return self.free_factors[i].domain.intersection(self.domain)

    def partition_witness(self) -> Optional[Tuple[int, int]]:
        """
        First (factor, point) where the saturations of the conjugator targets fail to partition the
        domain of the factor inside the saturation of Y, or None.
        """
        reached = saturate(self.ambient.extend_trivially(), self.domain).members
        for i, Ri in enumerate(self.free_factors):
            seen = set()
            for k in self.factors:
                if k.factor != i:
                    continue
                saturation = saturate(Ri, k.conjugator.target).members
                if seen & saturation:
                    return i, min(seen & saturation)
                seen |= saturation
            missed = (Ri.domain.members & reached) - seen
            if missed:
                return i, min(missed)
        return None


def _chunks(phi: Dict[int, int], stabilizer: EquivRelation) -> List[List[int]]:
    """Split the source of phi into unions of stabilizer classes on which phi is injective, first fit."""
    chunks: List[Tuple[List[int], set]] = []
    seen = set()
    for x in sorted(phi):
        if x in seen:
            continue
        class_ = [y for y in stabilizer.class_members(x) if y in phi]
        seen.update(class_)
        images = {phi[y] for y in class_}
        for members, used in chunks:
            if not used & images:
                members.extend(class_)
                used |= images
                break
        else:
            chunks.append((list(class_), images))
    return [sorted(members) for members, _ in chunks]


def _read_factors(d: Desingularization, free_factors: Sequence[EquivRelation]) -> List[KuroshFactor]:
    """
    Records of the tree vertices made of factor vertices. Over x, the tree edge reaching such a vertex
    leaves the point vertex of some y, and the conjugator sends x to y.
    """
    space = d.acting_relation.space
    records = []
    for vertex, s in d.representation.vertex_sections.items():
        name = tree_edge_name(vertex)
        if name not in d.representation.edge_sections:
            continue
        edges = d.representation.edge_sections[name]
        by_factor: Dict[int, Dict[int, int]] = {}
        for x, v in s.items():
            if v[0] == 0:
                continue
            _, y, i, _ = edges(x)
            if free_factors[i].in_domain(y):
                by_factor.setdefault(i, {})[x] = y
        stabilizer = d.max_tree.vertex_relations[vertex]
        for i, phi in sorted(by_factor.items()):
            for chunk in _chunks(phi, stabilizer):
                conjugator = PartialIso.from_mapping(space, {x: phi[x] for x in chunk})
                records.append(KuroshFactor(i, conjugator, restrict(stabilizer, conjugator.source), vertex))
    return records


def _spanning_treeing(relation: EquivRelation, records: Sequence[KuroshFactor],
                      preferred: Sequence[Tuple[int, int]]) -> Treeing:
    """Pairs of relation joining the components left by the factor classes, preferred pairs first."""
    components = UnionFind(relation.space.points())
    for k in records:
        for class_ in k.relation.classes():
            components.union(*class_)
    pairs = []
    for x, y in list(preferred) + list(relation.pairs()):
        if components[x] != components[y]:
            components.union(x, y)
            pairs.append((x, y))
    return Treeing.from_unordered(relation.space, pairs)


def _identity_positions(records: Sequence[KuroshFactor], count: int) -> Tuple[Optional[int], ...]:
    positions: List[Optional[int]] = [None] * count
    for position, k in enumerate(records):
        if positions[k.factor] is None and k.is_identity():
            positions[k.factor] = position
    return tuple(positions)


def check_decomposition(decomposition: KuroshDecomposition) -> Accept:
    """
    Re-verify a decomposition: factor formula for every record, identity records, free product and
    generation, and for restrictions the partition of the factor domains.

    Returns
    -------
    certificate : Accept
        Free product certificate of the factor relations and the relation of the treeing.
    """
    for position, k in enumerate(decomposition.factors):
        if k.relation != decomposition.expected_relation(k):
            raise ValidationError('factor relation must match its conjugate', f'record {position}')
    for i, position in enumerate(decomposition.identity_factors):
        expected = decomposition.identity_domain(i)
        if position is None:
            if len(expected):
                raise ValidationError('missing identity factor', f'factor {i}')
            continue
        k = decomposition.factors[position]
        if k.factor != i or not k.is_identity() or k.domain != expected:
            raise ValidationError('identity factor must be defined on the whole factor domain', f'factor {i}')
    verdict = verify_free_product(decomposition.relation, decomposition.relations())
    if isinstance(verdict, Reject):
        raise NotFreeProduct('decomposition factors are not in free product', verdict.closing_tuple.points)
    if isinstance(decomposition, RestrictionDecomposition):
        witness = decomposition.partition_witness()
        if witness is not None:
            raise ValidationError('conjugator targets must partition the factor domains',
                                  f'factor {witness[0]}, point {witness[1]}')
    return verdict


def _decompose(R: EquivRelation, free_factors: Sequence[EquivRelation], acting: EquivRelation,
               base_domain: PointSet):
    extended = [Ri.extend_trivially() for Ri in free_factors]
    field = free_product_field(R, extended).with_acting_relation(acting)
    roots = [factor_edge_section(base_domain, i) for i in range(len(extended))]
    d = desingularize(field, root_edge=roots[0], base_domain=base_domain, trivial_edge_stabilizers=True,
                      extra_root_edges=roots[1:])
    records = _read_factors(d, free_factors)
    treeing = _spanning_treeing(acting, records, generation_split(d).treeing.unordered_edges())
    logger.info(f'{len(records)} factor records ({sum(not k.relation.is_trivial() for k in records)} non-trivial), '
                f'treeing with {len(treeing.unordered_edges())} edges')
    return records, treeing


def kurosh(R: EquivRelation, factors: Sequence[EquivRelation], S: EquivRelation) -> KuroshDecomposition:
    """
    Kurosh decomposition of a sub-relation S of the free product R of factors.

    S acts on the free product field of the factors; its desingularization, with trivial edge
    relations and the identity edges to every factor as first stage, gives one record per tree vertex
    of factor vertices (split where its conjugator would not be injective), and the treeing joins what
    the records leave apart.

    Parameters
    ----------
    R : EquivRelation
        Free product of the factors, on the whole space.

    factors : Sequence[EquivRelation]
        Free factors, on the whole space.

    S : EquivRelation
        Sub-relation of R (extended trivially to the whole space).

    Returns
    -------
    decomposition : KuroshDecomposition
        Re-verified decomposition.
    """
    R = R.extend_trivially()
    check_free_product(factors, R)
    S = S.extend_trivially()
    check_subrelation(S, R, 'decomposed relation')
    records, treeing = _decompose(R, factors, S, R.space.full())
    provisional = KuroshDecomposition(R, S, tuple(factors), tuple(records), treeing,
                                      _identity_positions(records, len(factors)), None)
    certificate = check_decomposition(provisional)
    return KuroshDecomposition(R, S, tuple(factors), tuple(records), treeing, provisional.identity_factors,
                               certificate)


def restrict_decomposition(R: EquivRelation, factors: Sequence[EquivRelation],
                           Y: PointSet) -> RestrictionDecomposition:
    """
    Decomposition of the restriction of a free product to Y.

    The factors may live on parts A_i of the space covering it. Every record is a full conjugate of a
    factor; for each factor, the saturations of the conjugator targets partition the part of A_i that
    the classes of Y reach, and the identity record lives on A_i inside Y.

    Raises
    ------
    CoverageViolation
        When the factor domains do not cover the space.
    """
    covered = join(list(factors)).domain
    if not covered.is_full():
        missing = min(covered.complement().members)
        raise CoverageViolation(f'factor domains do not cover point {missing}', witness=missing)
    R = R.extend_trivially()
    check_free_product(factors, R)
    acting = restrict(R, Y).extend_trivially()
    records, treeing = _decompose(R, factors, acting, Y)
    provisional = RestrictionDecomposition(R, acting, tuple(factors), tuple(records), treeing,
                                           _identity_positions(records, len(factors)), None, Y)
    certificate = check_decomposition(provisional)
    return RestrictionDecomposition(R, acting, tuple(factors), tuple(records), treeing,
                                    provisional.identity_factors, certificate, Y)
