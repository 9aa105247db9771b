from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .graph_field import GraphField
from ..common.dev_utils import arboretum_logger
from ..fibered.fibered_space import FiberPoint, PartialSection
from ..fibered.orbits import orbit_saturation, stabilizer
from ..space.equiv_relation import EquivRelation, fundamental_domain
from ..space.finite_space import PointSet


@dataclass(frozen=True)
class Piece:
    """
    One partial vertex section of a staged construction.

    Attributes
    ----------
    index : int
        Position in the construction order.

    stage : int
        Stage that produced the piece; stage 0 is the root.

    parent : int or None
        Index of the piece whose vertex over x is adjacent to this piece's vertex over x.

    section : PartialSection
        Vertex section.

    edge : PartialSection or None
        Edge section going from the parent's vertices to this piece's vertices.

    stabilizer : EquivRelation
        Stabilizer of section for the acting relation.

    edge_stabilizer : EquivRelation or None
        Stabilizer of edge.
    """
    index: int
    stage: int
    parent: Optional[int]
    section: PartialSection
    edge: Optional[PartialSection]
    stabilizer: EquivRelation
    edge_stabilizer: Optional[EquivRelation]

    @property
    def domain(self) -> PointSet:
        return self.section.domain


class StagedSections:
    """
    Stage by stage exhaustion of the vertex orbits of a tree field by partial sections.

    Stage 0 sections the least-numbered vertex of every fiber over the base domain (or the origin of
    a root edge section, whose terminus then forms stage 1). Every later stage sections, over each x,
    the least-numbered vertex adjacent to the vertices already chosen over x whose orbit is not yet
    covered. The choices of a stage are split by the piece they are adjacent to; a point whose new
    vertex lies in an orbit covered earlier in the same stage waits for the next stage.

    Parameters
    ----------
    field : GraphField
        Tree field with actions.

    fundamental : bool, optional (default=False)
        Restrict every piece to a fundamental domain of its stabilizer, so that the chosen vertices form
        a fundamental domain of the vertex-orbit relation. Later stages only extend the root domain.

    root_edge : PartialSection, optional (default=None)
        Edge section whose origins form the root piece and whose termini form the first child.

    root_section : PartialSection, optional (default=None)
        Vertex section forming the root piece. Ignored when root_edge is given.

    extra_root_edges : Sequence[PartialSection], optional (default=())
        Further edge sections leaving the root piece; the termini of each one form a stage 1 piece.

    base_domain : PointSet, optional (default=None)
        Base points where pieces may live. Default is the whole base.

    trivial_edge_stabilizers : bool, optional (default=False)
        Restrict every non-root piece to a fundamental domain of the stabilizer of its edge section.

    Attributes
    ----------
    pieces : List[Piece]
        Pieces in construction order.

    chosen : Dict[int, List[Tuple[FiberPoint, int]]]
        Vertices chosen over every base point, with the piece that chose them.
    """
    logger = arboretum_logger.getChild('StagedSections')

    def __init__(self, field: GraphField, fundamental: bool = False, root_edge: Optional[PartialSection] = None,
                 base_domain: Optional[PointSet] = None, trivial_edge_stabilizers: bool = False,
                 root_section: Optional[PartialSection] = None, extra_root_edges: Sequence[PartialSection] = ()):
        if not field.has_action():
            raise ValueError('staged sections need a field with actions')
        self.field = field
        self.fundamental = fundamental
        self.trivial_edge_stabilizers = trivial_edge_stabilizers
        self.base_domain = field.base.full() if base_domain is None else base_domain
        self.pieces: List[Piece] = []
        self.chosen: Dict[int, List[Tuple[FiberPoint, int]]] = {x: [] for x in field.base.points()}
        self._covered: Set[FiberPoint] = set()
        self._out_edges = self._compute_out_edges()
        self._build(root_edge, root_section, extra_root_edges)

    def _compute_out_edges(self) -> Dict[FiberPoint, List[FiberPoint]]:
        out_edges = {v: [] for v in self.field.vertices.carrier()}
        for e in self.field.edges.carrier():
            out_edges[self.field.origin[e]].append(e)
        return out_edges

    def _build(self, root_edge: Optional[PartialSection], root_section: Optional[PartialSection],
               extra_root_edges: Sequence[PartialSection]):
        vertices = self.field.vertices
        if root_edge is None and root_section is None:
            root = {x: (vertices.fiber(x)[0], None) for x in self.base_domain}
        elif root_edge is None:
            root = {x: (v, None) for x, v in root_section.items() if x in self.base_domain}
        else:
            root = {x: (self.field.origin[e], None) for x, e in root_edge.items() if x in self.base_domain}
        self._add_stage(0, root)
        stage = 1
        first_edges = ([] if root_edge is None else [root_edge]) + list(extra_root_edges)
        if first_edges and self.pieces:
            first = self.pieces[0]
            for edge in first_edges:
                child = {x: (self.field.terminus[edge(x)], edge(x)) for x in first.domain
                         if x in edge.domain and self.field.terminus[edge(x)] not in self._covered}
                self._add_stage(stage, child)
            stage += 1
        while True:
            candidates = self._candidates()
            if not candidates:
                break
            self._add_stage(stage, candidates)
            stage += 1
        self.logger.debug(f'{len(self.pieces)} pieces in {stage} stages')

    def _candidates(self) -> Dict[int, Tuple[FiberPoint, FiberPoint]]:
        vertices = self.field.vertices
        candidates = {}
        for x in self.base_domain:
            best = None
            for v, _ in self.chosen[x]:
                for e in self._out_edges[v]:
                    w = self.field.terminus[e]
                    if w in self._covered:
                        continue
                    if best is None or vertices.number(w) < vertices.number(best[0]):
                        best = (w, e)
            if best is not None:
                candidates[x] = best
        return candidates

    def _parent_of(self, x: int, edge: Optional[FiberPoint]) -> Optional[int]:
        if edge is None:
            return None
        origin = self.field.origin[edge]
        return next(p for v, p in self.chosen[x] if v == origin)

    def _add_stage(self, stage: int, candidates: Dict[int, Tuple[FiberPoint, Optional[FiberPoint]]]):
        """candidates maps a base point to its new vertex and the edge reaching it (None at the root)."""
        groups: Dict[Optional[int], Dict[int, Tuple[FiberPoint, Optional[FiberPoint]]]] = {}
        for x, (v, e) in sorted(candidates.items()):
            groups.setdefault(self._parent_of(x, e), {})[x] = (v, e)
        covered_in_stage: Set[FiberPoint] = set()
        for parent in sorted(groups, key=lambda p: -1 if p is None else p):
            group = {x: (v, e) for x, (v, e) in groups[parent].items() if v not in covered_in_stage}
            piece = self._make_piece(stage, parent, group)
            if piece is None:
                self.logger.debug(f'empty section dropped at stage {stage}')
                continue
            saturation = orbit_saturation(self.field.vertices, self.field.vertex_action, piece.section.image())
            covered_in_stage |= saturation
            self._covered |= saturation
            self.pieces.append(piece)
            for x, v in piece.section.items():
                self.chosen[x].append((v, piece.index))

    def _make_piece(self, stage: int, parent: Optional[int],
                    group: Dict[int, Tuple[FiberPoint, Optional[FiberPoint]]]) -> Optional[Piece]:
        base = self.field.base
        section = PartialSection.from_mapping(base, {x: v for x, (v, _) in group.items()})
        edge = None if parent is None else PartialSection.from_mapping(base, {x: e for x, (_, e) in group.items()})
        if edge is not None and self.trivial_edge_stabilizers:
            kept = fundamental_domain(stabilizer(self.field.edges, self.field.edge_action, edge))
            section, edge = section.restrict(kept), edge.restrict(kept)
        vertex_stabilizer = stabilizer(self.field.vertices, self.field.vertex_action, section)
        if self.fundamental:
            kept = fundamental_domain(vertex_stabilizer)
            section = section.restrict(kept)
            edge = None if edge is None else edge.restrict(kept)
            vertex_stabilizer = stabilizer(self.field.vertices, self.field.vertex_action, section)
        if section.is_empty():
            return None
        edge_stabilizer = None if edge is None else stabilizer(self.field.edges, self.field.edge_action, edge)
        return Piece(len(self.pieces), stage, parent, section, edge, vertex_stabilizer, edge_stabilizer)

    def root_domain(self) -> PointSet:
        return self.pieces[0].domain if self.pieces else self.field.base.empty()

    def out_edges(self, v: FiberPoint) -> List[FiberPoint]:
        return self._out_edges[v]

    def covered(self) -> Set[FiberPoint]:
        return set(self._covered)

    def tree_edges(self) -> List[FiberPoint]:
        """Edges of the pieces' edge sections and their opposites."""
        edges = []
        for piece in self.pieces:
            if piece.edge is not None:
                for e in piece.edge.image():
                    edges.extend((e, self.field.opposite[e]))
        return edges
