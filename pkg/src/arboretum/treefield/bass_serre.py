from typing import Sequence

from .graph_field import ColoredTreeField, GraphField
from ..common.constants import Color, Orientation
from ..common.dev_utils import get_logger
from ..common.errors import DomainMismatch, NotSubrelation
from ..fibered.canonical_spaces import quotient
from ..fibered.fibered_space import Action, FiberedSpace, PartialSection
from ..fibered.morphisms import induced_morphism
from ..space.equiv_relation import EquivRelation, check_subrelation, intersect, join, subrelation_witness
from ..space.finite_space import PointSet

logger = get_logger('BassSerre')


def _check_on_whole_space(*relations: EquivRelation):
    for R in relations:
        R.space.check_same(relations[0].space)
        if not R.domain.is_full():
            missing = sorted(R.domain.complement().members)[0]
            raise DomainMismatch(f'relation {R} must be defined on the whole space', witness=missing)


def bass_serre_amalgam(R: EquivRelation, R1: EquivRelation, R2: EquivRelation,
                       R3: EquivRelation) -> ColoredTreeField:
    """
    Canonical bi-colored graph field of an amalgamated product of R1 and R2 over R3.

    Edges over x are the R3-classes c inside the class of x, each with both orientations: the point
    (x, c, 1) goes from the color 1 vertex (1, x, [c]_R1) to the color 2 vertex (2, x, [c]_R2) and
    (x, c, -1) goes backwards. The field is a tree field iff R is the amalgamated product.

    Parameters
    ----------
    R : EquivRelation
        Join of R1 and R2.

    R1, R2 : EquivRelation
        Factors, on the whole space.

    R3 : EquivRelation
        Common sub-relation of R1 and R2.

    Returns
    -------
    field : ColoredTreeField
        Field with the action of R and the edge section x -> (x, [x]_R3, 1).
    """
    _check_on_whole_space(R, R1, R2, R3)
    check_subrelation(R3, intersect(R1, R2), 'amalgamated relation')
    if join([R1, R2]) != R:
        witness = subrelation_witness(R, join([R1, R2])) or subrelation_witness(join([R1, R2]), R)
        raise NotSubrelation(f'{R} is not the join of the factors', witness=witness)

    edge_space, edge_action, d3 = quotient(R, R3)
    parts = {}
    for color, Ri in ((Color.FIRST, R1), (Color.SECOND, R2)):
        space, action, section = quotient(R, Ri)
        parts[color] = (space, action, induced_morphism(edge_space, edge_action, d3, space, action, section))

    def tag(color, point):
        return (color.value,) + point

    vertex_fibers = [tuple(tag(color, v) for color in Color for v in parts[color][0].fiber(x))
                     for x in R.space.points()]
    vertex_table = {(x, y, tag(color, v)): tag(color, image)
                    for color in Color for (x, y, v), image in parts[color][1].table.items()}
    edge_fibers = [tuple((x, c, s.value) for _, c in edge_space.fiber(x) for s in Orientation)
                   for x in R.space.points()]
    edge_table = {(x, y, (y, c, s.value)): (x, c, s.value)
                  for (x, y, (_, c)), _image in edge_action.table.items() for s in Orientation}

    origin, terminus, opposite = {}, {}, {}
    for x, c in edge_space.carrier():
        first = tag(Color.FIRST, parts[Color.FIRST][2]((x, c)))
        second = tag(Color.SECOND, parts[Color.SECOND][2]((x, c)))
        positive, negative = (x, c, Orientation.POSITIVE.value), (x, c, Orientation.NEGATIVE.value)
        origin[positive], terminus[positive] = first, second
        origin[negative], terminus[negative] = second, first
        opposite[positive], opposite[negative] = negative, positive

    vertices = FiberedSpace(R.space, tuple(vertex_fibers))
    edges = FiberedSpace(R.space, tuple(edge_fibers), allow_empty=True)
    colors = {v: Color(v[0]) for v in vertices.carrier()}
    edge_section = PartialSection(d3.domain, {x: t + (Orientation.POSITIVE.value,) for x, t in d3.items()})
    logger.debug(f'Bass-Serre field of {R1} and {R2} over {R3}: {len(vertices)} vertices')
    return ColoredTreeField(vertices, edges, origin, terminus, opposite,
                            Action(R, vertex_table), Action(R, edge_table), edge_section, colors)


def bass_serre_free(R: EquivRelation, R1: EquivRelation, R2: EquivRelation) -> ColoredTreeField:
    """Canonical bi-colored graph field of a free product: the amalgam over the trivial relation."""
    _check_on_whole_space(R, R1, R2)
    return bass_serre_amalgam(R, R1, R2, EquivRelation.trivial(R.space))


def vertex_section(field: ColoredTreeField, color: Color) -> PartialSection:
    """Vertex section of the given color at the ends of the distinguished edge section."""
    end = field.origin if color == Color.FIRST else field.terminus
    return PartialSection(field.edge_section.domain, {x: end[e] for x, e in field.edge_section.items()})


def free_product_field(R: EquivRelation, factors: Sequence[EquivRelation]) -> GraphField:
    """
    Graph field of a free product of finitely many factors.

    Over x, the point vertices (0, x, y) stand for the points y of the class of x and the factor vertices
    (i + 1, x, c) for the classes c of factors[i] inside it. The edge (x, y, i, 1) goes from (0, x, y) to
    the vertex of the factors[i]-class of y and (x, y, i, -1) goes backwards. Every fiber is the
    incidence graph of the factor classes, so the field is a tree field iff R is the free product.

    Parameters
    ----------
    R : EquivRelation
        Join of the factors.

    factors : Sequence[EquivRelation]
        Factors, on the whole space.

    Returns
    -------
    field : GraphField
        Field with the action of R and the edge section x -> (x, x, 0, 1).
    """
    _check_on_whole_space(R, *factors)
    if not factors:
        raise ValueError('free product field needs at least one factor')
    if join(list(factors)) != R:
        witness = subrelation_witness(R, join(list(factors))) or subrelation_witness(join(list(factors)), R)
        raise NotSubrelation(f'{R} is not the join of the factors', witness=witness)

    point_space, point_action, _ = quotient(R, EquivRelation.trivial(R.space))
    parts = [quotient(R, Ri) for Ri in factors]
    vertex_fibers = [tuple((0,) + t for t in point_space.fiber(x)) +
                     tuple((i + 1,) + t for i, (space, _, _) in enumerate(parts) for t in space.fiber(x))
                     for x in R.space.points()]
    vertex_table = {(x, y, (0,) + t): (0,) + image for (x, y, t), image in point_action.table.items()}
    for i, (_, action, _) in enumerate(parts):
        vertex_table.update({(x, y, (i + 1,) + t): (i + 1,) + image for (x, y, t), image in action.table.items()})

    signs = [s.value for s in Orientation]
    edge_fibers = [tuple((x, y, i, s) for _, y in point_space.fiber(x) for i in range(len(factors)) for s in signs)
                   for x in R.space.points()]
    edge_table = {(x, z, (z, y, i, s)): (x, y, i, s)
                  for (x, z, (_, y)), _image in point_action.table.items()
                  for i in range(len(factors)) for s in signs}
    origin, terminus, opposite = {}, {}, {}
    for x, y in point_space.carrier():
        for i, Ri in enumerate(factors):
            positive, negative = (x, y, i, Orientation.POSITIVE.value), (x, y, i, Orientation.NEGATIVE.value)
            origin[positive], terminus[positive] = (0, x, y), (i + 1, x, Ri.class_of(y))
            origin[negative], terminus[negative] = terminus[positive], origin[positive]
            opposite[positive], opposite[negative] = negative, positive

    vertices = FiberedSpace(R.space, tuple(vertex_fibers))
    edges = FiberedSpace(R.space, tuple(edge_fibers), allow_empty=True)
    edge_section = factor_edge_section(R.space.full(), 0)
    logger.debug(f'free product field of {len(factors)} factors: {len(vertices)} vertices')
    return GraphField(vertices, edges, origin, terminus, opposite,
                      Action(R, vertex_table), Action(R, edge_table), edge_section)


def factor_edge_section(domain: PointSet, i: int) -> PartialSection:
    """Edge section of a free product field joining the point vertex of x to its factors[i]-class."""
    return PartialSection(domain, {x: (x, x, i, Orientation.POSITIVE.value) for x in domain})
