from dataclasses import dataclass, replace
from typing import Dict, Hashable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .graph_of_relations import GraphOfRelations, RelationEdge, RootedTreeOfRelations
from ..common.constants import Bullet
from ..common.dev_utils import arboretum_logger
from ..common.errors import ValidationError
from ..fibered.fibered_space import FiberPoint, PartialSection
from ..fibered.orbits import orbit_saturation, stabilizer
from ..space.equiv_relation import EquivRelation, intersect, restrict
from ..space.finite_space import PointSet
from ..space.partial_iso import PartialIso, conjugate, pseudogroup_member
from ..treefield.graph_field import GraphField, is_treefield
from ..treefield.staged_sections import StagedSections

logger = arboretum_logger.getChild('Desingularization')


def tree_edge_name(child: int, orientation: int = 1) -> Tuple[str, int, int]:
    return 'tree', child, orientation


def extra_edge_name(k: int, orientation: int = 1) -> Tuple[str, int, int]:
    return 'extra', k, orientation


@dataclass(frozen=True)
class Representation:
    """Vertex section of every tree vertex and edge section of every tree edge (oriented away from the root)."""
    vertex_sections: Dict[int, PartialSection]
    edge_sections: Dict[Hashable, PartialSection]


class RepresentativesForest(NamedTuple):
    tree: RootedTreeOfRelations
    representation: Representation
    staged: StagedSections


@dataclass(frozen=True)
class ExtraEdge:
    """
    Edge of the graph of relations outside the maximal tree.

    Attributes
    ----------
    name : Hashable
        Name of the positively oriented edge.

    origin, terminus : int
        Tree vertices it joins.

    conjugator : PartialIso
        phi with s(x) going from s_origin(x) to (x, phi(x)) . s_terminus(phi(x)).

    section : PartialSection
        Edge section s.
    """
    name: Hashable
    origin: int
    terminus: int
    conjugator: PartialIso
    section: PartialSection


@dataclass(frozen=True)
class Desingularization:
    """
    Graph of relations describing an action on a tree field.

    Attributes
    ----------
    field : GraphField
        Tree field with actions.

    max_tree : RootedTreeOfRelations
        Representatives forest, rooted at the first piece.

    representation : Representation
        Sections realizing the maximal tree in the field.

    extra_edges : Tuple[ExtraEdge, ...]
        Edges outside the maximal tree.

    gor : GraphOfRelations
        Maximal tree plus extra edges.

    domain : PointSet
        Base points the vertex sections live on.
    """
    field: GraphField
    max_tree: RootedTreeOfRelations
    representation: Representation
    extra_edges: Tuple[ExtraEdge, ...]
    gor: GraphOfRelations
    domain: PointSet

    @property
    def acting_relation(self) -> EquivRelation:
        return self.field.relation

    def vertex_section(self, vertex: int) -> PartialSection:
        return self.representation.vertex_sections[vertex]

    def without_extra_edge(self, k: int) -> 'Desingularization':
        extra = tuple(a for i, a in enumerate(self.extra_edges) if i != k)
        return replace(self, extra_edges=extra)

    def with_extra_edge(self, k: int, edge: ExtraEdge) -> 'Desingularization':
        extra = tuple(edge if i == k else a for i, a in enumerate(self.extra_edges))
        return replace(self, extra_edges=extra)


@dataclass(frozen=True)
class BulletViolation:
    bullet: Bullet
    witness: object


def _default_root_edge(A: GraphField, root_edge, root_section):
    if root_edge is None and root_section is None:
        return A.edge_section
    return root_edge


def representatives_forest(A: GraphField, root_edge: Optional[PartialSection] = None,
                           root_section: Optional[PartialSection] = None, base_domain: Optional[PointSet] = None,
                           trivial_edge_stabilizers: bool = False,
                           extra_root_edges: Sequence[PartialSection] = ()) -> RepresentativesForest:
    """
    Rooted tree of relations whose vertices are partial vertex sections with saturations partitioning
    the vertices of A.

    Every piece of the staged construction is a tree vertex carrying its stabilizer; it is joined to its
    parent by its edge section, carrying the edge stabilizer. The root starts from the distinguished edge
    section of A when there is one.

    Parameters
    ----------
    A : GraphField
        Tree field with actions.

    root_edge, root_section : PartialSection, optional (default=None)
        First stage of the construction, see StagedSections.

    base_domain : PointSet, optional (default=None)
        Base points the pieces may live on.

    trivial_edge_stabilizers : bool, optional (default=False)
        Restrict pieces so that every tree edge carries the trivial relation.

    extra_root_edges : Sequence[PartialSection], optional (default=())
        Further edge sections out of the root, each giving a child of the root.

    Returns
    -------
    forest : RepresentativesForest
    """
    witness = is_treefield(A)
    if witness is not None:
        raise ValidationError('representatives forest needs a tree field', f'fiber over {witness.base_point}')
    staged = StagedSections(A, root_edge=_default_root_edge(A, root_edge, root_section), root_section=root_section,
                            base_domain=base_domain, trivial_edge_stabilizers=trivial_edge_stabilizers,
                            extra_root_edges=extra_root_edges)
    vertex_relations = {piece.index: piece.stabilizer for piece in staged.pieces}
    vertex_sections = {piece.index: piece.section for piece in staged.pieces}
    edges, edge_sections = {}, {}
    for piece in staged.pieces:
        if piece.parent is None:
            continue
        identity = PartialIso.identity(piece.domain)
        forward, backward = tree_edge_name(piece.index, 1), tree_edge_name(piece.index, -1)
        edges[forward] = RelationEdge(piece.parent, piece.index, piece.edge_stabilizer, identity, backward)
        edges[backward] = RelationEdge(piece.index, piece.parent, piece.edge_stabilizer, identity, forward)
        edge_sections[forward] = piece.edge
    tree = RootedTreeOfRelations(vertex_relations, edges, root=0)
    logger.debug(f'representatives forest with {len(vertex_relations)} vertices')
    return RepresentativesForest(tree, Representation(vertex_sections, edge_sections), staged)


def _extra_edges(A: GraphField, staged: StagedSections) -> List[ExtraEdge]:
    R = A.relation
    covered: Set[FiberPoint] = orbit_saturation(A.edges, A.edge_action, staged.tree_edges())
    extra = []
    for P in staged.pieces:
        for Q in staged.pieces:
            saturation = orbit_saturation(A.vertices, A.vertex_action, Q.section.image())
            while True:
                assign, phi, used = {}, {}, set()
                for x, v in P.section.items():
                    candidates = [e for e in staged.out_edges(v) if e not in covered and A.terminus[e] in saturation]
                    if not candidates:
                        continue
                    e = min(candidates, key=A.edges.number)
                    y = next((y for y in R.class_members(x) if y in Q.domain and y not in used
                              and A.vertex_action.act(x, y, Q.section(y)) == A.terminus[e]), None)
                    if y is None:
                        continue
                    assign[x], phi[x] = e, y
                    used.add(y)
                    covered |= orbit_saturation(A.edges, A.edge_action, [e, A.opposite[e]])
                if not assign:
                    break
                section = PartialSection.from_mapping(A.base, assign)
                extra.append(ExtraEdge(extra_edge_name(len(extra)), P.index, Q.index,
                                       PartialIso.from_mapping(A.base, phi), section))
    return extra


def desingularize(A: GraphField, root_edge: Optional[PartialSection] = None,
                  root_section: Optional[PartialSection] = None, base_domain: Optional[PointSet] = None,
                  trivial_edge_stabilizers: bool = False,
                  extra_root_edges: Sequence[PartialSection] = ()) -> Desingularization:
    """
    Desingularization of the action on a tree field: the representatives forest plus one extra edge
    section, with its conjugator, for every family of edge orbits the forest misses.

    Extra edges are searched pair of tree vertices by pair of tree vertices, in index order; in each
    round every point takes its least-numbered uncovered edge and the least unused conjugate point.
    """
    forest = representatives_forest(A, root_edge, root_section, base_domain, trivial_edge_stabilizers,
                                    extra_root_edges)
    extra = _extra_edges(A, forest.staged)
    edges = dict(forest.tree.edges)
    vertex_relations = forest.tree.vertex_relations
    for a in extra:
        relation = stabilizer(A.edges, A.edge_action, a.section)
        backward = (a.name[0], a.name[1], -1)
        edges[a.name] = RelationEdge(a.origin, a.terminus, relation, a.conjugator, backward)
        edges[backward] = RelationEdge(a.terminus, a.origin, relation, PartialIso.identity(a.section.domain), a.name)
    logger.info(f'desingularization with {len(vertex_relations)} vertices and {len(extra)} extra edges')
    return Desingularization(A, forest.tree, forest.representation, tuple(extra),
                             GraphOfRelations(vertex_relations, edges),
                             forest.staged.base_domain)


def validate_desingularization(d: Desingularization) -> Optional[BulletViolation]:
    """
    Re-check a desingularization.

    Returns
    -------
    violation : BulletViolation or None
        The first violated condition, in the order: representatives, diagonal avoidance, extra edge
        sections, stabilizer compatibility, edge partition.
    """
    A = d.field
    R = A.relation
    sections = d.representation.vertex_sections
    covered: Set[FiberPoint] = set()
    for s in sections.values():
        saturation = orbit_saturation(A.vertices, A.vertex_action, s.image())
        if covered & saturation:
            return BulletViolation(Bullet.REPRESENTATIVES, min(covered & saturation, key=A.vertices.index))
        covered |= saturation
    missed = [v for x in d.domain for v in A.vertices.fiber(x) if v not in covered]
    if missed:
        return BulletViolation(Bullet.REPRESENTATIVES, min(missed, key=A.vertices.index))
    for name, edge in d.max_tree.edges.items():
        if name in d.representation.edge_sections:
            for x, e in d.representation.edge_sections[name].items():
                if A.origin[e] != sections[edge.origin](x) or A.terminus[e] != sections[edge.terminus](x):
                    return BulletViolation(Bullet.REPRESENTATIVES, (name, x))

    for a in d.extra_edges:
        fixed = a.conjugator.touches_diagonal()
        if fixed is not None:
            return BulletViolation(Bullet.DIAGONAL_AVOIDANCE, (a.name, fixed))
    for a in d.extra_edges:
        s_p, s_q, phi = sections[a.origin], sections[a.terminus], a.conjugator
        if phi.source != a.section.domain or not a.section.domain.issubset(s_p.domain) \
                or not phi.target.issubset(s_q.domain) or not pseudogroup_member(phi, R):
            return BulletViolation(Bullet.EXTRA_EDGE_SECTION, (a.name, None))
        for x, e in a.section.items():
            if A.origin[e] != s_p(x) or A.terminus[e] != A.vertex_action.act(x, phi(x), s_q(phi(x))):
                return BulletViolation(Bullet.EXTRA_EDGE_SECTION, (a.name, x))
    for a in d.extra_edges:
        s_p, s_q, phi = sections[a.origin], sections[a.terminus], a.conjugator
        expected = intersect(restrict(stabilizer(A.vertices, A.vertex_action, s_p), a.section.domain),
                             conjugate(restrict(stabilizer(A.vertices, A.vertex_action, s_q), phi.target), phi))
        if stabilizer(A.edges, A.edge_action, a.section) != expected:
            return BulletViolation(Bullet.STABILIZER_COMPATIBILITY, a.name)

    edge_families = [s for s in d.representation.edge_sections.values()] + [a.section for a in d.extra_edges]
    covered = set()
    for s in edge_families:
        saturation = orbit_saturation(A.edges, A.edge_action, s.image() + [A.opposite[e] for e in s.image()])
        if covered & saturation:
            return BulletViolation(Bullet.EDGE_PARTITION, min(covered & saturation, key=A.edges.index))
        covered |= saturation
    missed = [e for x in d.domain for e in A.edges.fiber(x) if e not in covered]
    if missed:
        return BulletViolation(Bullet.EDGE_PARTITION, min(missed, key=A.edges.index))
    return None
