import networkx as nx
from dataclasses import dataclass, field, replace
from typing import Hashable, List, Mapping, Optional, Tuple

from ..common.constants import Color, WitnessKind
from ..common.dev_utils import get_logger
from ..common.errors import ValidationError
from ..fibered.canonical_spaces import restrict_action
from ..fibered.fibered_space import Action, FiberedSpace, FiberPoint, PartialSection
from ..space.equiv_relation import EquivRelation


@dataclass(frozen=True)
class FiberWitness:
    """
    Reason why the graph over a base point is not a tree.

    Attributes
    ----------
    base_point : int
        Least base point whose fiber graph fails.

    kind : WitnessKind
        CYCLE or DISCONNECTED.

    vertices : Tuple[FiberPoint, ...]
        The vertices of the cycle, in order, or one vertex of each connected component.
    """
    base_point: int
    kind: WitnessKind
    vertices: Tuple[FiberPoint, ...]


@dataclass(frozen=True)
class GraphField:
    """
    Field of graphs over a finite base, optionally acted on by an equivalence relation.

    Parameters
    ----------
    vertices : FiberedSpace
        Vertex space.

    edges : FiberedSpace
        Oriented edge space, over the same base.

    origin, terminus : Mapping[FiberPoint, FiberPoint]
        Fiber-preserving maps from edges to vertices.

    opposite : Mapping[FiberPoint, FiberPoint]
        Fixed-point free involution of the edges with origin(opposite(e)) = terminus(e).

    vertex_action, edge_action : Action, optional (default=None)
        Actions of the same relation on vertices and edges. Both or none.

    edge_section : PartialSection, optional (default=None)
        Distinguished edge section, used as first stage by the constructions on the field.
    """
    vertices: FiberedSpace
    edges: FiberedSpace
    origin: Mapping[FiberPoint, FiberPoint]
    terminus: Mapping[FiberPoint, FiberPoint]
    opposite: Mapping[FiberPoint, FiberPoint]
    vertex_action: Optional[Action] = None
    edge_action: Optional[Action] = None
    edge_section: Optional[PartialSection] = None

    logger = get_logger('GraphField')

    @property
    def base(self):
        return self.vertices.base

    @property
    def relation(self) -> Optional[EquivRelation]:
        return None if self.vertex_action is None else self.vertex_action.relation

    def has_action(self) -> bool:
        return self.vertex_action is not None

    def unordered_edges(self, x: int) -> List[FiberPoint]:
        """One oriented edge per geometric edge over x: the one coming first in the fiber."""
        return [e for e in self.edges.fiber(x) if self.edges.index(e) < self.edges.index(self.opposite[e])]

    def fiber_graph(self, x: int) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices.fiber(x))
        for e in self.unordered_edges(x):
            graph.add_edge(self.origin[e], self.terminus[e], key=e)
        return graph

    def check(self):
        """Raise ValidationError unless the structure maps are consistent (and equivariant when acted on)."""
        self.vertices.base.check_same(self.edges.base)
        for e in self.edges.carrier():
            x = self.edges.proj(e)
            opposite = self.opposite[e]
            if opposite == e or self.opposite[opposite] != e:
                raise ValidationError('opposite must be a fixed-point free involution', f'edge {e}')
            if self.origin[opposite] != self.terminus[e]:
                raise ValidationError('origin of the opposite edge must be the terminus', f'edge {e}')
            if self.vertices.proj(self.origin[e]) != x or self.vertices.proj(self.terminus[e]) != x \
                    or self.edges.proj(opposite) != x:
                raise ValidationError('structure maps must preserve fibers', f'edge {e}')
        if (self.vertex_action is None) != (self.edge_action is None):
            raise ValidationError('vertex and edge actions go together')
        if self.vertex_action is not None:
            self._check_equivariance()

    def _check_equivariance(self):
        R = self.vertex_action.relation
        if R != self.edge_action.relation:
            raise ValidationError('vertex and edge actions must be actions of the same relation')
        for class_ in R.classes():
            for x in class_:
                for y in class_:
                    for e in self.edges.fiber(y):
                        moved = self.edge_action.act(x, y, e)
                        if self.origin[moved] != self.vertex_action.act(x, y, self.origin[e]) or \
                                self.terminus[moved] != self.vertex_action.act(x, y, self.terminus[e]) or \
                                self.opposite[moved] != self.edge_action.act(x, y, self.opposite[e]):
                            raise ValidationError('structure maps must commute with the actions',
                                                  f'pair ({x}, {y}), edge {e}')

    def with_acting_relation(self, S: EquivRelation) -> 'GraphField':
        """Same field acted on by a sub-relation S of the acting relation (S defined on the whole base)."""
        if not self.has_action():
            raise ValidationError('field has no action to restrict')
        return replace(self, vertex_action=restrict_action(self.vertex_action, S),
                       edge_action=restrict_action(self.edge_action, S))

    def with_edge_section(self, section: Optional[PartialSection]) -> 'GraphField':
        return replace(self, edge_section=section)


@dataclass(frozen=True)
class ColoredTreeField(GraphField):
    """Tree field with an action-invariant 2-coloring of its vertices; every edge joins both colors."""
    colors: Mapping[FiberPoint, Color] = field(default_factory=dict)

    def check(self):
        super().check()
        for e in self.edges.carrier():
            if self.colors[self.origin[e]] == self.colors[self.terminus[e]]:
                raise ValidationError('every edge must join the two colors', f'edge {e}')
        if self.vertex_action is not None:
            for (x, y, v), image in self.vertex_action.table.items():
                if self.colors[v] != self.colors[image]:
                    raise ValidationError('coloring must be invariant under the action', f'vertex {v}')

    def colored(self, color: Color) -> List[FiberPoint]:
        return [v for v in self.vertices.carrier() if self.colors[v] == color]


def is_treefield(G: GraphField) -> Optional[FiberWitness]:
    """
    Check that the graph over every base point is a tree.

    Returns
    -------
    witness : FiberWitness or None
        None when every fiber is a tree, otherwise the failure at the least base point.
    """
    for x in G.base.points():
        graph = G.fiber_graph(x)
        if nx.is_tree(graph):
            continue
        cycle = _find_cycle(graph, G.vertices.fiber(x))
        if cycle is not None:
            G.logger.debug(f'cycle of length {len(cycle)} over {x}')
            return FiberWitness(x, WitnessKind.CYCLE, tuple(cycle))
        components = sorted(nx.connected_components(graph), key=lambda c: min(G.vertices.index(v) for v in c))
        representatives = tuple(min(c, key=G.vertices.index) for c in components)
        G.logger.debug(f'{len(components)} components over {x}')
        return FiberWitness(x, WitnessKind.DISCONNECTED, representatives)
    return None


def _find_cycle(graph: nx.MultiGraph, ordered_vertices) -> Optional[List[Hashable]]:
    for v in ordered_vertices:
        try:
            cycle_edges = nx.find_cycle(graph, source=v)
        except nx.NetworkXNoCycle:
            continue
        return [u for u, _, _ in cycle_edges]
    return None


def fiber_distance(G: GraphField, v: FiberPoint, w: FiberPoint) -> int:
    x = G.vertices.proj(v)
    return nx.shortest_path_length(G.fiber_graph(x), v, w)
