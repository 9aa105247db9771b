from dataclasses import dataclass
from typing import Dict

from .canonical_spaces import canonical_left
from .fibered_space import Action, FiberedMorphism, FiberedSpace, PartialSection, SectionedSpace
from .orbits import check_saturating, is_homogeneous, orbit_relation, stabilizer
from ..common.constants import DomainKind
from ..common.dev_utils import get_logger
from ..common.errors import DomainMismatch, NotFundamentalDomain, NotHomogeneous, StabilizerNotIncluded
from ..space.equiv_relation import EquivRelation, classify_domain, subrelation_witness

logger = get_logger('Morphisms')


def _check_fundamental_image(F: FiberedSpace, act: Action, s: PartialSection):
    orbits = orbit_relation(F, act)
    image = orbits.space.subset(F.index(t) for t in s.image())
    seen = {}
    for x, t in s.items():
        label = orbits.class_of(F.index(t))
        if label in seen:
            raise NotFundamentalDomain(f'section meets the orbit of {t} twice (over {seen[label]} and {x})',
                                       witness=t)
        seen[label] = x
    if classify_domain(orbits, image) != DomainKind.BOTH:
        missed = next(t for t in F.carrier() if orbits.class_of(F.index(t)) not in seen)
        raise NotFundamentalDomain(f'section misses the orbit of {missed}', witness=missed)


def induced_morphism(F1: FiberedSpace, act1: Action, s1: PartialSection,
                     F2: FiberedSpace, act2: Action, s2: PartialSection) -> FiberedMorphism:
    """
    Morphism F1 -> F2 sending s1 to s2, extended by equivariance.

    Every point of F1 is (x, y) . s1(y) for some y of the common domain A; it is sent to
    (x, y) . s2(y). This is well defined because the stabilizer of s1 is included in that of s2.

    Parameters
    ----------
    F1, F2 : FiberedSpace
        Source and target, over the same base.

    act1, act2 : Action
        Actions of the same relation.

    s1, s2 : PartialSection
        Sections on the same complete domain; s1 must be saturating.

    Returns
    -------
    morphism : FiberedMorphism
    """
    F1.base.check_same(F2.base)
    if s1.domain != s2.domain:
        witness = sorted(s1.domain.members ^ s2.domain.members)[0]
        raise DomainMismatch('sections must share their domain', witness=witness)
    check_saturating(F1, act1, s1, 'source section')
    witness = subrelation_witness(stabilizer(F1, act1, s1), stabilizer(F2, act2, s2))
    if witness is not None:
        raise StabilizerNotIncluded('stabilizer of the source section is not included in the target one',
                                    witness=witness)
    R = act1.relation
    mapping = {}
    for y, t in s1.items():
        for x in R.class_members(y):
            u = act1.act(x, y, t)
            if u not in mapping:
                mapping[u] = act2.act(x, y, s2(y))
    return FiberedMorphism(F1, F2, mapping)


def canonical_iso(F: FiberedSpace, act: Action, s: PartialSection) -> FiberedMorphism:
    """
    Isomorphism from F onto the canonical left space of the acting relation, sending s to the diagonal.

    s must be defined everywhere and its image must be a fundamental domain of the orbit relation.
    """
    if not s.domain.is_full():
        missing = sorted(s.domain.complement().members)[0]
        raise NotFundamentalDomain(f'section must be defined everywhere: {missing} is missing', witness=missing)
    _check_fundamental_image(F, act, s)
    left = canonical_left(act.relation).space
    mapping = {}
    for y, t in s.items():
        for x in act.relation.class_members(y):
            mapping[act.act(x, y, t)] = (x, y)
    return FiberedMorphism(F, left, mapping)


@dataclass(frozen=True)
class StableConjugacy:
    """
    Reduction r between two saturating sections with the stabilizers it relates.

    Attributes
    ----------
    reduction : Dict[int, int]
        r(x) for every x in the domain of the first section.

    source_stabilizer, target_stabilizer : EquivRelation
        Stabilizers of the two sections.

    verified : bool
        Whether s'(r(x)) = (r(x), x) . s(x) held everywhere and r(A) is a complete domain of the target
        stabilizer.
    """
    reduction: Dict[int, int]
    source_stabilizer: EquivRelation
    target_stabilizer: EquivRelation
    verified: bool


def stable_conjugacy_witness(F: FiberedSpace, act: Action, s: PartialSection,
                             s_prime: PartialSection) -> StableConjugacy:
    """
    Reduction showing that the stabilizers of two saturating sections are stably conjugate.

    r(x) is the least a' in the domain of s' with s'(a') = (a', x) . s(x).
    """
    if is_homogeneous(F, act) is None:
        raise NotHomogeneous('fibered space is not homogeneous')
    check_saturating(F, act, s, 'first section')
    check_saturating(F, act, s_prime, 'second section')
    R = act.relation
    reduction = {}
    for x, t in s.items():
        reduction[x] = next(a for a in R.class_members(x) if a in s_prime.domain and act.act(a, x, t) == s_prime(a))
    target_stabilizer = stabilizer(F, act, s_prime)
    verified = all(s_prime(r) == act.act(r, x, s(x)) for x, r in reduction.items())
    verified &= classify_domain(target_stabilizer, R.space.subset(reduction.values())) != DomainKind.NEITHER
    return StableConjugacy(reduction, stabilizer(F, act, s), target_stabilizer, verified)


def extend_to_canonical(F: FiberedSpace, act: Action, s: PartialSection) -> SectionedSpace:
    """
    Extend a section whose image is a fundamental domain of the orbit relation to the whole base.

    Over every x, the points ('ext', x, y) for y ~ x outside the section domain are added, acted on
    horizontally, and the new section is y -> ('ext', y, y) outside the old domain. The result is
    isomorphic to the canonical left space.
    """
    _check_fundamental_image(F, act, s)
    R = act.relation
    A = s.domain
    fibers = [F.fiber(x) + tuple(('ext', x, y) for y in R.class_members(x) if y not in A)
              for x in F.base.points()]
    table = dict(act.table)
    for class_ in R.classes():
        outside = [y for y in class_ if y not in A]
        for z in class_:
            for x in class_:
                for y in outside:
                    table[(z, x, ('ext', x, y))] = ('ext', z, y)
    assign = dict(s.assign)
    assign.update({y: ('ext', y, y) for y in F.base.points() if y not in A})
    extended = FiberedSpace(F.base, tuple(fibers))
    logger.debug(f'section extended from {len(A)} to {F.base.size} base points')
    return SectionedSpace(extended, Action(R, table), PartialSection.from_mapping(F.base, assign))
