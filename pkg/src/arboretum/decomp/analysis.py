from dataclasses import dataclass
from functools import reduce
from typing import Hashable, List, Tuple

from .desingularization import Desingularization
from .product_verifier import ProductVerdict, verify_amalgam
from ..common.dev_utils import get_logger
from ..common.errors import EmptyGeodesic, EmptyIntersection
from ..space.equiv_relation import EquivRelation, intersect, join, relation_generated_by, restrict
from ..space.finite_space import PointSet
from ..space.graphing import Graphing, Treeing, spanning_treeing

logger = get_logger('Analysis')


@dataclass(frozen=True)
class GeodesicAmalgam:
    """
    Amalgam carried by a geodesic of the maximal tree.

    Attributes
    ----------
    path : Tuple[Hashable, ...]
        Tree vertices from P to Q.

    domain : PointSet
        Points where every vertex of the path is represented.

    core : EquivRelation
        Intersection of the edge relations along the path, on domain.

    verdict : ProductVerdict
        Amalgam verdict for the join of both end relations over core.
    """
    path: Tuple[Hashable, ...]
    domain: PointSet
    core: EquivRelation
    verdict: ProductVerdict


def geodesic_amalgam(d: Desingularization, P: Hashable, Q: Hashable) -> GeodesicAmalgam:
    """
    Restrict the relations of two tree vertices to the points represented all along the geodesic
    joining them, and decide whether they are amalgamated over the edge relations of the geodesic.
    """
    if P == Q:
        raise EmptyGeodesic(f'geodesic from {P} to itself carries no edge')
    tree = d.max_tree
    path = tree.geodesic(P, Q)
    domain = reduce(PointSet.intersection, (d.vertex_section(v).domain for v in path))
    if not len(domain):
        raise EmptyIntersection(f'no point is represented along the geodesic {path}')
    edges = [tree.edges[tree.edge_between(u, v)].relation for u, v in zip(path, path[1:])]
    core = reduce(intersect, (restrict(relation, domain) for relation in edges))
    first = restrict(tree.vertex_relations[P], domain)
    last = restrict(tree.vertex_relations[Q], domain)
    verdict = verify_amalgam(join([first, last]), first, last, core)
    logger.debug(f'geodesic {path} over {len(domain)} points: {verdict.verdict.value}')
    return GeodesicAmalgam(tuple(path), domain, core, verdict)


@dataclass(frozen=True)
class GenerationSplit:
    """
    Splitting of the acting relation of a desingularization.

    Attributes
    ----------
    vertex_join : EquivRelation
        Join of the vertex relations (R').

    conjugator_relation : EquivRelation
        Relation generated by the conjugators of the extra edges (R'').

    treeing : Treeing
        Treeing of conjugator_relation.

    trivial_intersections : Tuple[Hashable, ...]
        Vertices whose relation meets conjugator_relation outside the diagonal (none when the
        splitting holds).

    generates : bool
        Whether vertex_join and conjugator_relation generate the acting relation.
    """
    vertex_join: EquivRelation
    conjugator_relation: EquivRelation
    treeing: Treeing
    trivial_intersections: Tuple[Hashable, ...]
    generates: bool

    def ok(self) -> bool:
        return not self.trivial_intersections and self.generates \
            and self.treeing.is_treeing_of(self.conjugator_relation)


def _conjugator_pairs(d: Desingularization) -> List[Tuple[int, int]]:
    return [(x, y) for a in d.extra_edges for x, y in a.conjugator.pairs]


def generation_split(d: Desingularization) -> GenerationSplit:
    """
    Split the acting relation into the join of the vertex relations and a treeable relation generated
    by the conjugators of the extra edges.
    """
    R = d.acting_relation.extend_trivially()
    space = R.space
    vertex_join = join([relation.extend_trivially() for relation in d.gor.vertex_relations.values()])
    pairs = _conjugator_pairs(d)
    conjugator_relation = relation_generated_by(space, pairs)
    treeing = spanning_treeing(Graphing.from_unordered(space, pairs))
    meeting = tuple(vertex for vertex, relation in d.gor.vertex_relations.items()
                    if not intersect(relation.extend_trivially(), conjugator_relation).is_trivial())
    generates = join([vertex_join, conjugator_relation]) == R
    logger.info(f'{len(d.gor.vertex_relations)} vertex relations and {len(d.extra_edges)} conjugators, '
                f'treeing with {len(treeing.unordered_edges())} edges')
    return GenerationSplit(vertex_join, conjugator_relation, treeing, meeting, generates)
