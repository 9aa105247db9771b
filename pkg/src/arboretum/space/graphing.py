import networkx as nx
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .equiv_relation import EquivRelation, relation_generated_by
from .finite_space import FiniteSpace
from ..common.errors import ValidationError


@dataclass(frozen=True)
class Graphing:
    """
    Symmetric irreflexive set of ordered pairs on a finite space.

    Parameters
    ----------
    space : FiniteSpace
        Ambient space.

    edges : FrozenSet[Tuple[int, int]]
        Ordered pairs; (x, y) is present iff (y, x) is.
    """
    space: FiniteSpace
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        edges = frozenset((int(x), int(y)) for x, y in self.edges)
        object.__setattr__(self, 'edges', edges)
        for x, y in edges:
            if not (0 <= x < self.space.size and 0 <= y < self.space.size):
                raise ValidationError('point index out of range', f'edge ({x}, {y})')
            if x == y:
                raise ValidationError('graphing must be irreflexive', f'loop at {x}')
            if (y, x) not in edges:
                raise ValidationError('graphing must be symmetric', f'({x}, {y}) present without ({y}, {x})')

    @classmethod
    def from_unordered(cls, space: FiniteSpace, pairs: Iterable[Tuple[int, int]]):
        edges = set()
        for x, y in pairs:
            edges.add((x, y))
            edges.add((y, x))
        return cls(space, frozenset(edges))

    def unordered_edges(self) -> List[Tuple[int, int]]:
        return sorted((x, y) for x, y in self.edges if x < y)

    def generated_relation(self) -> EquivRelation:
        return relation_generated_by(self.space, self.edges)

    def union(self, other: 'Graphing') -> 'Graphing':
        self.space.check_same(other.space)
        return Graphing(self.space, self.edges | other.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.space.points())
        graph.add_edges_from(self.unordered_edges())
        return graph

    def cycle(self) -> Optional[List[int]]:
        """Points of a cycle of the graphing, or None if every class graph is a tree."""
        try:
            cycle_edges = nx.find_cycle(self.to_networkx())
        except nx.NetworkXNoCycle:
            return None
        return [u for u, _ in cycle_edges]

    def is_treeing_of(self, R: EquivRelation) -> bool:
        self.space.check_same(R.space)
        relation = self.generated_relation()
        return relation == R.extend_trivially() and self.cycle() is None

    def __len__(self):
        return len(self.edges)


class Treeing(Graphing):
    """A graphing whose graph on every class of the relation it generates is a tree."""

    def __post_init__(self):
        super().__post_init__()
        cycle = self.cycle()
        if cycle is not None:
            raise ValidationError('treeing must be acyclic', f'cycle through {cycle}')

    @classmethod
    def empty(cls, space: FiniteSpace) -> 'Treeing':
        return cls(space, frozenset())

    @classmethod
    def of(cls, graphing: Graphing) -> 'Treeing':
        return cls(graphing.space, graphing.edges)

    def union(self, other: 'Graphing') -> Graphing:
        return Graphing(self.space, self.edges | other.edges)


def spanning_treeing(graphing: Graphing) -> Treeing:
    """A treeing contained in graphing that generates the same relation (a spanning forest)."""
    forest = nx.minimum_spanning_tree(graphing.to_networkx())
    return Treeing.from_unordered(graphing.space, forest.edges())
