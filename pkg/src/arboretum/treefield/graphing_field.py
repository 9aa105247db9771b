from typing import Tuple

from .graph_field import GraphField
from ..fibered.canonical_spaces import canonical_left
from ..fibered.fibered_space import Action, FiberedSpace
from ..space.equiv_relation import EquivRelation
from ..space.graphing import Graphing


def from_graphing(phi: Graphing) -> Tuple[EquivRelation, GraphField]:
    """
    Canonical graph field of a graphing.

    The vertices are the canonical left space of the generated relation R. Over x there is one edge
    (x, y, z) for every (y, z) in the graphing with y ~ x, going from (x, y) to (x, z). Pairs of R move
    edges horizontally.

    Parameters
    ----------
    phi : Graphing
        Graphing on the whole space.

    Returns
    -------
    R : EquivRelation
        Relation generated by phi.

    field : GraphField
        Its canonical field; a tree field iff phi is a treeing.
    """
    R = phi.generated_relation()
    vertices, vertex_action, _ = canonical_left(R)
    ordered = sorted(phi.edges)
    fibers = [tuple((x, y, z) for y, z in ordered if R.equivalent(x, y)) for x in R.space.points()]
    edges = FiberedSpace(R.space, tuple(fibers), allow_empty=True)
    table = {}
    for class_ in R.classes():
        for w in class_:
            for x in class_:
                for _, y, z in edges.fiber(x):
                    table[(w, x, (x, y, z))] = (w, y, z)
    carrier = edges.carrier()
    origin = {e: (e[0], e[1]) for e in carrier}
    terminus = {e: (e[0], e[2]) for e in carrier}
    opposite = {e: (e[0], e[2], e[1]) for e in carrier}
    return R, GraphField(vertices, edges, origin, terminus, opposite, vertex_action, Action(R, table))


def free_product_treeing_field(Gr1: Graphing, Gr2: Graphing) -> GraphField:
    """Canonical field of the union of two treeings: a tree field iff the union is a treeing of the join."""
    _, field = from_graphing(Gr1.union(Gr2))
    return field
