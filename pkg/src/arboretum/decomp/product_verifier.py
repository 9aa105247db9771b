import networkx as nx
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .reduced_tuple import ReducedTuple, closing_tuple_from_cycle
from ..common.constants import CertificateKind, DomainKind, Verdict
from ..common.dev_utils import get_logger
from ..common.errors import HypothesisViolation, NotFreeProduct, NotGenerated, NotSubrelation
from ..fibered.fibered_space import PartialSection
from ..fibered.orbits import orbit_relation, orbit_saturation, stabilizer
from ..space.equiv_relation import (EquivRelation, check_subrelation, classify_domain, intersect, join,
                                    missing_pair, restrict, subrelation_witness)
from ..treefield.bass_serre import bass_serre_amalgam
from ..treefield.graph_field import GraphField, is_treefield

logger = get_logger('ProductVerifier')


@dataclass(frozen=True)
class Accept:
    """
    Certificate that a relation is the free (or amalgamated) product of its factors.

    Attributes
    ----------
    kind : CertificateKind
        FREE_PRODUCT or AMALGAM.

    relation : EquivRelation
        The product.

    factors : Tuple[EquivRelation, ...]
        Factors, extended trivially to the whole space.

    core : EquivRelation or None
        Amalgamated sub-relation.
    """
    kind: CertificateKind
    relation: EquivRelation
    factors: Tuple[EquivRelation, ...]
    core: Optional[EquivRelation] = None

    @property
    def verdict(self) -> Verdict:
        return Verdict.ACCEPT


@dataclass(frozen=True)
class Reject:
    """Refutation of a product structure by a closing reduced tuple."""
    kind: CertificateKind
    relation: EquivRelation
    factors: Tuple[EquivRelation, ...]
    closing_tuple: ReducedTuple
    core: Optional[EquivRelation] = None

    @property
    def verdict(self) -> Verdict:
        return Verdict.REJECT


ProductVerdict = Union[Accept, Reject]


def _check_generation(R: EquivRelation, factors: Sequence[EquivRelation]) -> EquivRelation:
    generated = join(list(factors))
    witness = subrelation_witness(generated, R)
    if witness is not None:
        raise NotSubrelation(f'join of the factors is not a sub-relation of {R}: pair {witness}', witness=witness)
    pair = missing_pair(R, generated)
    if pair is not None:
        raise NotGenerated(f'factors do not generate {R}', witness=pair)
    return generated


def _incidence_graph(factors: Sequence[EquivRelation]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(('point', x) for x in factors[0].space.points())
    for i, factor in enumerate(factors):
        for class_ in factor.classes():
            if len(class_) > 1:
                graph.add_edges_from((('point', x), ('class', i, class_[0])) for x in class_)
    return graph


def verify_free_product(R: EquivRelation, factors: Sequence[EquivRelation]) -> ProductVerdict:
    """
    Decide whether R is the free product of the factors.

    Inside every class of R, points are joined to the non-trivial factor classes containing them. R is
    the free product iff this incidence graph is a forest; a cycle gives a closing reduced tuple.

    Parameters
    ----------
    R : EquivRelation
        Relation to decompose. Points outside its domain are treated as singletons.

    factors : Sequence[EquivRelation]
        Factors, possibly on sub-domains (extended trivially).

    Returns
    -------
    verdict : Accept or Reject
    """
    R = R.extend_trivially()
    factors = tuple(f.extend_trivially() for f in factors)
    for f in factors:
        R.space.check_same(f.space)
    _check_generation(R, factors)
    graph = _incidence_graph(factors)
    for x in R.space.points():
        try:
            cycle_edges = nx.find_cycle(graph, source=('point', x))
        except nx.NetworkXNoCycle:
            continue
        nodes = [u for u, _ in cycle_edges]
        if nodes[0][0] != 'point':
            nodes = nodes[1:] + nodes[:1]
        # nodes alternate between points and the factor classes joining them
        closing = closing_tuple_from_cycle([node[1] for node in nodes[::2]], [node[1] for node in nodes[1::2]])
        logger.debug(f'incidence cycle through {closing.points}')
        return Reject(CertificateKind.FREE_PRODUCT, R, factors, closing)
    return Accept(CertificateKind.FREE_PRODUCT, R, factors)


def check_free_product(factors: Sequence[EquivRelation], R: Optional[EquivRelation] = None) -> Accept:
    """Accept certificate for the free product of factors (by default R is their join); raises NotFreeProduct."""
    R = join(list(factors)) if R is None else R
    verdict = verify_free_product(R, factors)
    if isinstance(verdict, Reject):
        raise NotFreeProduct('relations are not in free product', verdict.closing_tuple.points)
    return verdict


def verify_amalgam(R: EquivRelation, R1: EquivRelation, R2: EquivRelation, R3: EquivRelation) -> ProductVerdict:
    """
    Decide whether R is the amalgamated product of R1 and R2 over R3 by checking that the Bass-Serre
    field is a tree field. A cycle of the field gives a closing tuple made of points of the R3-classes
    it crosses.
    """
    R, R1, R2, R3 = (rel.extend_trivially() for rel in (R, R1, R2, R3))
    check_subrelation(R3, intersect(R1, R2), 'amalgamated relation')
    _check_generation(R, [R1, R2])
    field = bass_serre_amalgam(R, R1, R2, R3)
    witness = is_treefield(field)
    factors = (R1, R2)
    if witness is None:
        return Accept(CertificateKind.AMALGAM, R, factors, R3)
    cycle_edges = nx.find_cycle(field.fiber_graph(witness.base_point), source=witness.vertices[0])
    # consecutive edges of the cycle meet at a vertex whose color names the factor
    points = [key[1] for _, _, key in cycle_edges]
    tags = [v[0] - 1 for _, v, _ in cycle_edges]
    return Reject(CertificateKind.AMALGAM, R, factors, closing_tuple_from_cycle(points, tags), R3)


def check_amalgam(R: EquivRelation, R1: EquivRelation, R2: EquivRelation, R3: EquivRelation) -> Accept:
    verdict = verify_amalgam(R, R1, R2, R3)
    if isinstance(verdict, Reject):
        raise NotFreeProduct('relations are not in amalgamated product', verdict.closing_tuple.points)
    return verdict


def stabilizer_decomposition(A: GraphField, d: PartialSection) -> Tuple[EquivRelation, EquivRelation, Accept]:
    """
    Free product decomposition of the acting relation read off a tree field with an edge section.

    d must meet every geometric edge orbit once, on a complete domain, and the vertex orbits of its
    origins and termini must split the vertices in two. The factors are the stabilizers of the
    origin and terminus sections.

    Returns
    -------
    R1, R2 : EquivRelation
        Stabilizers of o(d) and t(d).

    certificate : Accept
        Free product certificate for the acting relation restricted to the domain of d.
    """
    R = A.relation
    tree_witness = is_treefield(A)
    if tree_witness is not None:
        raise HypothesisViolation('tree-field', tree_witness.base_point)
    if classify_domain(R, d.domain) == DomainKind.NEITHER:
        raise HypothesisViolation('complete-domain', sorted(d.domain.members))
    orbits = orbit_relation(A.edges, A.edge_action)
    both = [A.edges.index(e) for e in d.image()] + [A.edges.index(A.opposite[e]) for e in d.image()]
    if len(set(both)) != len(both) or classify_domain(orbits, orbits.space.subset(both)) != DomainKind.BOTH:
        raise HypothesisViolation('edge-fundamental-domain', d.image())
    origins = PartialSection(d.domain, {x: A.origin[e] for x, e in d.items()})
    termini = PartialSection(d.domain, {x: A.terminus[e] for x, e in d.items()})
    first = orbit_saturation(A.vertices, A.vertex_action, origins.image())
    second = orbit_saturation(A.vertices, A.vertex_action, termini.image())
    overlap = first & second
    if overlap or len(first) + len(second) != len(A.vertices):
        witness = min(overlap, key=A.vertices.index) if overlap else \
            next(v for v in A.vertices.carrier() if v not in first and v not in second)
        raise HypothesisViolation('vertex-bipartition', witness)
    R1 = stabilizer(A.vertices, A.vertex_action, origins)
    R2 = stabilizer(A.vertices, A.vertex_action, termini)
    verdict = verify_free_product(restrict(R, d.domain), [R1, R2])
    if isinstance(verdict, Reject):
        raise HypothesisViolation('free-product', verdict.closing_tuple.points)
    return R1, R2, verdict
