import networkx as nx
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional

from ..common.errors import ValidationError
from ..space.equiv_relation import EquivRelation, is_subrelation
from ..space.partial_iso import PartialIso, conjugate, invert


@dataclass(frozen=True)
class RelationEdge:
    """
    Oriented edge of a graph of relations.

    morphism carries relation into the relation of the terminus vertex.
    """
    origin: Hashable
    terminus: Hashable
    relation: EquivRelation
    morphism: PartialIso
    opposite: Hashable


@dataclass(frozen=True)
class GraphOfRelations:
    """
    Graph whose vertices and edges carry equivalence relations.

    Parameters
    ----------
    vertex_relations : Dict[Hashable, EquivRelation]
        Relation of every vertex.

    edges : Dict[Hashable, RelationEdge]
        Oriented edges by name; every edge has its opposite in the dictionary.
    """
    vertex_relations: Dict[Hashable, EquivRelation]
    edges: Dict[Hashable, RelationEdge]

    def check(self):
        for name, edge in self.edges.items():
            opposite = self.edges[edge.opposite]
            if opposite.opposite != name or opposite.origin != edge.terminus or edge.opposite == name:
                raise ValidationError('opposite edges must pair up', f'edge {name}')
            if opposite.relation != edge.relation:
                raise ValidationError('an edge and its opposite carry the same relation', f'edge {name}')
            if edge.morphism.source != edge.relation.domain:
                raise ValidationError('edge morphism must be defined on the edge relation', f'edge {name}')
            image = conjugate(edge.relation, invert(edge.morphism))
            if not is_subrelation(image, self.vertex_relations[edge.terminus]):
                raise ValidationError('edge morphism must land in the terminus relation', f'edge {name}')

    def graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertex_relations)
        added = set()
        for name, edge in self.edges.items():
            if edge.opposite not in added:
                graph.add_edge(edge.origin, edge.terminus, key=name)
                added.add(name)
        return graph

    def edge_between(self, origin: Hashable, terminus: Hashable) -> Optional[Hashable]:
        return next((name for name, edge in self.edges.items()
                     if edge.origin == origin and edge.terminus == terminus), None)


@dataclass(frozen=True)
class RootedTreeOfRelations(GraphOfRelations):
    """Graph of relations whose graph is a tree, with a root vertex."""
    root: Hashable = None

    def check(self):
        super().check()
        if not nx.is_tree(self.graph()):
            raise ValidationError('the graph of a rooted tree of relations must be a tree')
        if self.root not in self.vertex_relations:
            raise ValidationError('root must be a vertex', f'{self.root}')

    def parent(self, vertex: Hashable) -> Optional[Hashable]:
        if vertex == self.root:
            return None
        path = nx.shortest_path(self.graph(), self.root, vertex)
        return path[-2]

    def vertices_from_root(self) -> List[Hashable]:
        return list(nx.bfs_tree(self.graph(), self.root))

    def geodesic(self, P: Hashable, Q: Hashable) -> List[Hashable]:
        return nx.shortest_path(self.graph(), P, Q)

    def show(self) -> str:
        from ..treefield.display import show_tree
        return show_tree(self)
