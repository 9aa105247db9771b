import networkx as nx
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from .graph_field import GraphField, is_treefield
from .graphing_field import from_graphing
from .staged_sections import StagedSections
from ..common.constants import DomainKind
from ..common.dev_utils import get_logger
from ..common.errors import NotCompleteDomain, NotFundamentalDomain, ValidationError
from ..fibered.fibered_space import Action, FiberedSpace, FiberPoint, PartialSection
from ..fibered.orbits import orbit_relation, rf_fundamental_domain, validate_action
from ..space.equiv_relation import EquivRelation, classify_domain, is_subrelation
from ..space.finite_space import PointSet
from ..space.graphing import Treeing

logger = get_logger('Extraction')


@dataclass(frozen=True)
class Subforest:
    """
    Sub-field of a tree field living over a part of the base.

    Attributes
    ----------
    field : GraphField
        Ambient tree field.

    staged : StagedSections
        Construction that produced the subforest.

    vertices : Dict[int, Tuple[FiberPoint, ...]]
        Vertices over every point of domain.

    edges : Dict[int, Tuple[FiberPoint, ...]]
        Oriented edges (both orientations) over every point of domain.
    """
    field: GraphField
    staged: StagedSections
    vertices: Dict[int, Tuple[FiberPoint, ...]]
    edges: Dict[int, Tuple[FiberPoint, ...]]

    @property
    def domain(self) -> PointSet:
        return self.field.base.subset(self.vertices)

    def root_section(self) -> PartialSection:
        return self.staged.pieces[0].section

    def fiber_graph(self, x: int) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices[x])
        graph.add_edges_from((self.field.origin[e], self.field.terminus[e]) for e in self.edges[x])
        return graph

    def num_vertices(self) -> int:
        return sum(len(v) for v in self.vertices.values())


def quasi_free_check(G: GraphField) -> FrozenSet[FiberPoint]:
    """
    Fundamental domain of the vertex-orbit relation, the witness that the action is quasi-free.

    Raises InvalidAction when an action table is corrupted.
    """
    if not G.has_action():
        raise ValidationError('quasi-freeness needs a field with actions')
    validate_action(G.vertices, G.vertex_action)
    validate_action(G.edges, G.edge_action)
    return rf_fundamental_domain(G.vertices, G.vertex_action)


def fundamental_subforest(A: GraphField, root_edge: Optional[PartialSection] = None) -> Subforest:
    """
    Subforest whose vertices form a fundamental domain of the vertex-orbit relation.

    Parameters
    ----------
    A : GraphField
        Tree field with actions.

    root_edge : PartialSection, optional (default=None)
        Edge section to start from. By default the first stage picks the least-numbered vertices.

    Returns
    -------
    subforest : Subforest
        Connected fibers over the root domain.
    """
    staged = StagedSections(A, fundamental=True, root_edge=root_edge)
    vertices: Dict[int, list] = {x: [] for x in staged.root_domain()}
    edges: Dict[int, list] = {x: [] for x in staged.root_domain()}
    for piece in staged.pieces:
        for x, v in piece.section.items():
            vertices[x].append(v)
        if piece.edge is not None:
            for x, e in piece.edge.items():
                edges[x].extend((e, A.opposite[e]))
    logger.debug(f'fundamental subforest over {len(vertices)} points with {sum(map(len, vertices.values()))} '
                 f'vertices')
    return Subforest(A, staged, {x: tuple(v) for x, v in vertices.items()}, {x: tuple(e) for x, e in edges.items()})


def contract(A: GraphField, subforest: Subforest) -> Tuple[GraphField, PartialSection]:
    """
    Collapse every translate of the subforest to a point.

    The translate (y, x) . A'_x is named after the vertex (y, x) . s(x), s being the root section of
    the subforest. Edges joining two vertices with the same name disappear.

    Returns
    -------
    contracted : GraphField
        Field whose vertices are the names.

    section : PartialSection
        Root section of the subforest, whose image is a fundamental domain of the contracted vertex orbits.
    """
    act = A.vertex_action
    R = act.relation
    s = subforest.root_section()
    name = {}
    for x, vertices in subforest.vertices.items():
        for y in R.class_members(x):
            label = act.act(y, x, s(x))
            for u in vertices:
                name[act.act(y, x, u)] = label
    vertex_fibers = tuple(tuple(v for v in A.vertices.fiber(x) if name[v] == v) for x in A.base.points())
    edge_fibers = tuple(tuple(e for e in A.edges.fiber(x) if name[A.origin[e]] != name[A.terminus[e]])
                        for x in A.base.points())
    vertices, edges = FiberedSpace(A.base, vertex_fibers), FiberedSpace(A.base, edge_fibers, allow_empty=True)
    kept_edges = set(edges.carrier())
    contracted = GraphField(
        vertices, edges,
        {e: name[A.origin[e]] for e in kept_edges},
        {e: name[A.terminus[e]] for e in kept_edges},
        {e: A.opposite[e] for e in kept_edges},
        Action(R, {key: image for key, image in act.table.items() if key[2] in name and name[key[2]] == key[2]}),
        Action(R, {key: image for key, image in A.edge_action.table.items() if key[2] in kept_edges}))
    return contracted, s


def retraction_treeing(R: EquivRelation, A: PointSet) -> Treeing:
    """Star treeing joining every point outside A to the least point of A in its class."""
    if classify_domain(R, A) == DomainKind.NEITHER:
        raise NotCompleteDomain('retraction needs a complete domain')
    pairs = []
    for class_ in R.classes():
        center = min(x for x in class_ if x in A)
        pairs.extend((x, center) for x in class_ if x not in A)
    return Treeing.from_unordered(R.space, pairs)


def treeing_from_fd_section(A: GraphField, s: PartialSection) -> Treeing:
    """
    Treeing of the acting relation read off a section whose image is a fundamental domain of the
    vertex orbits: x and y are joined when s(x) is adjacent to (x, y) . s(y).

    When s is only defined on a complete domain, the retraction treeing of the complement is added.
    """
    act = A.vertex_action
    R = act.relation
    if classify_domain(R, s.domain) == DomainKind.NEITHER:
        raise NotCompleteDomain('section domain is not a complete domain of the acting relation')
    orbits = orbit_relation(A.vertices, act)
    image = orbits.space.subset(A.vertices.index(t) for t in s.image())
    if len(image) != len(s.domain) or classify_domain(orbits, image) != DomainKind.BOTH:
        raise NotFundamentalDomain('section image is not a fundamental domain of the vertex orbits')
    neighbours = {}
    for x in s.domain:
        graph = A.fiber_graph(x)
        neighbours[x] = set(graph.neighbors(s(x)))
    pairs = [(x, y) for x in s.domain for y in R.class_members(x)
             if y != x and y in s.domain and act.act(x, y, s(y)) in neighbours[x]]
    treeing = Treeing.from_unordered(R.space, pairs)
    if not s.domain.is_full():
        treeing = Treeing.of(treeing.union(retraction_treeing(R, s.domain)))
    return treeing


def extract_treeing(A: GraphField) -> Treeing:
    """
    Treeing of the relation acting on a tree field: fundamental subforest, contraction, then reading
    adjacency along the root section.
    """
    witness = is_treefield(A)
    if witness is not None:
        raise ValidationError('treeing extraction needs a tree field', f'fiber over {witness.base_point}')
    quasi_free_check(A)
    subforest = fundamental_subforest(A)
    contracted, section = contract(A, subforest)
    treeing = treeing_from_fd_section(contracted, section)
    logger.info(f'treeing with {len(treeing.unordered_edges())} edges extracted from {subforest.num_vertices()} '
                f'representative vertices')
    return treeing


def union_treeing(Gr1: Treeing, Gr2: Treeing) -> Treeing:
    """Union of treeings of two relations in free product; raises NotFreeProduct otherwise."""
    from ..decomp.product_verifier import check_free_product
    Gr1.space.check_same(Gr2.space)
    R1, R2 = Gr1.generated_relation(), Gr2.generated_relation()
    check_free_product([R1, R2])
    return Treeing.of(Gr1.union(Gr2))


def subrelation_treeing(Gr: Treeing, S: EquivRelation) -> Treeing:
    """Treeing of a sub-relation of the relation generated by Gr (S extended trivially off its domain)."""
    S = S.extend_trivially()
    R, field = from_graphing(Gr)
    if not is_subrelation(S, R):
        raise ValidationError('relation is not a sub-relation of the treed relation')
    return extract_treeing(field.with_acting_relation(S))


def amalgam_subrelation_treeing(R: EquivRelation, R1: EquivRelation, R2: EquivRelation, R3: EquivRelation,
                                S: EquivRelation) -> Treeing:
    """Treeing of a sub-relation of an amalgamated product, through its action on the Bass-Serre field."""
    from ..decomp.product_verifier import check_amalgam
    from .bass_serre import bass_serre_amalgam
    check_amalgam(R, R1, R2, R3)
    field = bass_serre_amalgam(R, R1, R2, R3)
    return extract_treeing(field.with_acting_relation(S.extend_trivially()))
