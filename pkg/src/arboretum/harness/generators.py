import numpy as np
from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

from .instance_file import DeclaredStructure, InstanceFile
from ..common.constants import GeneratorKind
from ..common.dev_utils import get_logger
from ..common.errors import ValidationError
from ..space.equiv_relation import EquivRelation, join, relation_generated_by
from ..space.finite_space import FiniteSpace
from ..space.graphing import Treeing

logger = get_logger('Generators')


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Parameters of a random instance.

    Parameters
    ----------
    seed : int, optional (default=0)
        Seed of the numpy generator; it fully determines the instance.

    size : int, optional (default=6)
        Number of points.

    factors : int, optional (default=2)
        Number of free factors (amalgams always have two).

    min_class, max_class : int, optional (default=1, 4)
        Bounds on the size of the classes of the product.

    density : float, optional (default=0.5)
        Probability of merging consecutive points when sampling a sub-relation.

    kind : GeneratorKind, optional (default=GeneratorKind.FREE)
        Kind of instance produced by generate.
    """
    seed: int = 0
    size: int = 6
    factors: int = 2
    min_class: int = 1
    max_class: int = 4
    density: float = 0.5
    kind: GeneratorKind = GeneratorKind.FREE

    def __post_init__(self):
        if self.size < 1 or self.factors < 1 or not 1 <= self.min_class <= self.max_class:
            raise ValidationError('generator configuration out of range', f'{self}')
        if not 0.0 <= self.density <= 1.0:
            raise ValidationError('density must lie in [0, 1]', f'got {self.density}')


def _random_classes(rng: np.random.Generator, cfg: GeneratorConfig) -> List[List[int]]:
    points = [int(x) for x in rng.permutation(cfg.size)]
    classes = []
    while points:
        k = int(rng.integers(cfg.min_class, cfg.max_class + 1))
        classes.append(sorted(points[:k]))
        points = points[k:]
    return classes


def _random_tree(rng: np.random.Generator, nodes: List[int]) -> List[Tuple[int, int]]:
    """Edges of a uniform random recursive tree on nodes, visited in a random order."""
    order = [nodes[i] for i in rng.permutation(len(nodes))]
    return [(order[int(rng.integers(0, k))], order[k]) for k in range(1, len(order))]


def _named(prefix: str, relations: List[EquivRelation]) -> Dict[str, EquivRelation]:
    return {f'{prefix}{i + 1}': R for i, R in enumerate(relations)}


def gen_subrelation(seed: int, R: EquivRelation, density: float = 0.5) -> EquivRelation:
    """
    Random sub-relation of R on the same domain: every class is shuffled and walked, each point joining
    the block of the previous one with probability density.
    """
    rng = np.random.default_rng(seed)
    blocks = []
    for class_ in R.classes():
        order = [class_[i] for i in rng.permutation(len(class_))]
        current = [order[0]]
        for x in order[1:]:
            if rng.random() < density:
                current.append(x)
            else:
                blocks.append(current)
                current = [x]
        blocks.append(current)
    return EquivRelation.from_classes(R.space, blocks, R.domain)


def gen_free_product(cfg: GeneratorConfig) -> InstanceFile:
    """
    Free product instance: inside every class a random tree is drawn and each of its edges is given to
    a random factor; factor classes are the components of the edges a factor gets.
    """
    rng = np.random.default_rng(cfg.seed)
    space = FiniteSpace(cfg.size)
    edges: List[List[Tuple[int, int]]] = [[] for _ in range(cfg.factors)]
    for class_ in _random_classes(rng, cfg):
        for edge in _random_tree(rng, class_):
            edges[int(rng.integers(0, cfg.factors))].append(edge)
    factors = [relation_generated_by(space, pairs) for pairs in edges]
    R = join(factors)
    S = gen_subrelation(cfg.seed, R, cfg.density)
    relations = {'R': R, 'S': S, **_named('R', factors)}
    structure = DeclaredStructure('R', tuple(_named('R', factors)), sub='S')
    logger.debug(f'free product instance, seed {cfg.seed}: {R.num_classes()} classes')
    return InstanceFile(space, relations, structure=structure)


def gen_amalgam(cfg: GeneratorConfig) -> InstanceFile:
    """
    Amalgam instance: every class is cut into blocks (the classes of the core), which become the edges of
    a random bipartite tree; the classes of each factor are the unions of blocks around a vertex of its
    color.
    """
    rng = np.random.default_rng(cfg.seed)
    space = FiniteSpace(cfg.size)
    core_blocks, first_blocks, second_blocks = [], [], []
    for class_ in _random_classes(rng, cfg):
        points = [class_[i] for i in rng.permutation(len(class_))]
        blocks = []
        while points:
            k = int(rng.integers(1, max(1, len(points) // 2) + 1))
            blocks.append(points[:k])
            points = points[k:]
        # vertices of the bipartite tree: (color, index); vertex 0 of color 0 is the first one
        around: Dict[Tuple[int, int], List[int]] = {(0, 0): []}
        for block in blocks:
            u = list(around)[int(rng.integers(0, len(around)))]
            v = (1 - u[0], len(around))
            around[v] = []
            around[u].extend(block)
            around[v].extend(block)
        core_blocks.extend(blocks)
        first_blocks.extend(b for (color, _), b in around.items() if color == 0 and b)
        second_blocks.extend(b for (color, _), b in around.items() if color == 1 and b)
    R3 = EquivRelation.from_classes(space, core_blocks)
    R1 = EquivRelation.from_classes(space, first_blocks)
    R2 = EquivRelation.from_classes(space, second_blocks)
    R = join([R1, R2])
    S = gen_subrelation(cfg.seed, R, cfg.density)
    relations = {'R': R, 'R1': R1, 'R2': R2, 'R3': R3, 'S': S}
    return InstanceFile(space, relations, structure=DeclaredStructure('R', ('R1', 'R2'), core='R3', sub='S'))


def gen_treeing(cfg: GeneratorConfig) -> InstanceFile:
    """Random treeing T (one random tree per class) with the relation R it generates."""
    rng = np.random.default_rng(cfg.seed)
    space = FiniteSpace(cfg.size)
    pairs = [edge for class_ in _random_classes(rng, cfg) for edge in _random_tree(rng, class_)]
    treeing = Treeing.from_unordered(space, pairs)
    R = treeing.generated_relation()
    S = gen_subrelation(cfg.seed, R, cfg.density)
    return InstanceFile(space, {'R': R, 'S': S}, graphings={'T': treeing})


def perturb(instance: InstanceFile, seed: int) -> InstanceFile:
    """
    Merge two classes of one declared factor lying in the same class of the product. The result is usually
    no longer a free (or amalgamated) product; the instance is returned unchanged when no merge exists.
    """
    rng = np.random.default_rng(seed)
    R = instance.product()
    choices = []
    for name in instance.structure.factors:
        factor = instance.relation(name)
        for class_ in R.classes():
            labels = sorted({factor.class_of(x) for x in class_ if factor.in_domain(x)})
            if len(labels) >= 2:
                choices.append((name, labels))
    if not choices:
        logger.warning('no two factor classes share a class of the product, instance left unchanged')
        return instance
    name, labels = choices[int(rng.integers(0, len(choices)))]
    first, second = (labels[int(i)] for i in rng.choice(len(labels), size=2, replace=False))
    factor = instance.relation(name)
    merged = [c for c in factor.classes() if c[0] not in (first, second)]
    merged.append(factor.class_members(first) + factor.class_members(second))
    relations = dict(instance.relations)
    relations[name] = EquivRelation.from_classes(factor.space, merged, factor.domain)
    return replace(instance, relations=relations)


def generate(cfg: GeneratorConfig) -> InstanceFile:
    if cfg.kind == GeneratorKind.FREE:
        return gen_free_product(cfg)
    if cfg.kind == GeneratorKind.AMALGAM:
        return gen_amalgam(cfg)
    if cfg.kind == GeneratorKind.TREEING:
        return gen_treeing(cfg)
    return perturb(gen_free_product(cfg), cfg.seed + 1)
