from typing import Dict, List

from .fibered_space import Action, FiberedMorphism, FiberedSpace, PartialSection, SectionedSpace
from ..common.constants import DomainKind
from ..common.dev_utils import get_logger
from ..common.errors import DomainMismatch, NotCompleteDomain
from ..space.equiv_relation import EquivRelation, check_subrelation, classify_domain

logger = get_logger('CanonicalSpaces')


def _check_full_domain(R: EquivRelation, what: str):
    if not R.domain.is_full():
        missing = sorted(R.domain.complement().members)[0]
        raise DomainMismatch(f'{what} must be defined on the whole space: point {missing} is outside',
                             witness=missing)


def canonical_left(R: EquivRelation) -> SectionedSpace:
    """
    Canonical left fibered space of R with its horizontal action and diagonal section.

    The carrier is the set of pairs (x, y) with x ~ y, projected on the first coordinate.
    The action is (x, y) . (y, z) = (x, z) and the diagonal section is x -> (x, x).

    Parameters
    ----------
    R : EquivRelation
        Relation defined on the whole space.

    Returns
    -------
    canonical : SectionedSpace
    """
    _check_full_domain(R, 'relation of the canonical fibered space')
    return quotient(R, EquivRelation.trivial(R.space))


def _representatives_in_class(R: EquivRelation, S: EquivRelation) -> Dict[int, List[int]]:
    # R-class label -> least points of the S-classes it contains, ascending
    reps: Dict[int, List[int]] = {}
    for class_ in S.classes():
        reps.setdefault(R.class_of(class_[0]), []).append(class_[0])
    return reps


def _check_quotient_inputs(R: EquivRelation, S: EquivRelation):
    R.space.check_same(S.space)
    _check_full_domain(R, 'relation of the quotient')
    check_subrelation(S, R, 'quotiented relation')
    if classify_domain(R, S.domain) == DomainKind.NEITHER:
        label = next(label for label in sorted(set(R.labels)) if
                     not any(R.class_of(a) == label for a in S.domain))
        raise NotCompleteDomain(f'domain of the quotiented relation misses the class of {label}', witness=label)


def quotient(R: EquivRelation, S: EquivRelation) -> SectionedSpace:
    """
    Quotient fibered space R/S.

    A point over x is an S-class inside the R-class of x, stored as the pair (x, c) with c the least
    point of the S-class. The action is induced by the horizontal one, (x, y) . (y, c) = (x, c), and
    the section d_S sends a in S.domain to (a, least point of its S-class). Its stabilizer is S.

    Parameters
    ----------
    R : EquivRelation
        Relation on the whole space.

    S : EquivRelation
        Sub-relation of R whose domain is a complete domain of R.

    Returns
    -------
    quotient : SectionedSpace
    """
    _check_quotient_inputs(R, S)
    reps = _representatives_in_class(R, S)
    fibers = [tuple((x, c) for c in reps[R.class_of(x)]) for x in R.space.points()]
    table = {}
    for class_ in R.classes():
        for c in reps[class_[0]]:
            for x in class_:
                for y in class_:
                    table[(x, y, (y, c))] = (x, c)
    section = PartialSection(S.domain, {a: (a, S.class_of(a)) for a in S.domain})
    logger.debug(f'quotient {R} / {S}: {sum(len(f) for f in fibers)} fiber points')
    return SectionedSpace(FiberedSpace(R.space, tuple(fibers)), Action(R, table), section)


def right_quotient(R: EquivRelation, S: EquivRelation) -> SectionedSpace:
    """
    Right quotient S\\R: S-classes c with the point y they are R-equivalent to, projected on y.

    Stored as pairs (c, y). The action is (z, y) . (c, y) = (c, z) and the section is a -> ([a]_S, a).
    """
    _check_quotient_inputs(R, S)
    reps = _representatives_in_class(R, S)
    fibers = [tuple((c, y) for c in reps[R.class_of(y)]) for y in R.space.points()]
    table = {}
    for class_ in R.classes():
        for c in reps[class_[0]]:
            for z in class_:
                for y in class_:
                    table[(z, y, (c, y))] = (c, z)
    section = PartialSection(S.domain, {a: (S.class_of(a), a) for a in S.domain})
    return SectionedSpace(FiberedSpace(R.space, tuple(fibers)), Action(R, table), section)


def right_quotient_symmetry(R: EquivRelation, S: EquivRelation) -> FiberedMorphism:
    """Isomorphism R/S -> S\\R induced by the swap (x, c) -> (c, x)."""
    left = quotient(R, S).space
    right = right_quotient(R, S).space
    return FiberedMorphism(left, right, {(x, c): (c, x) for x, c in left.carrier()})


def restrict_action(act: Action, S: EquivRelation) -> Action:
    """
    Action of a sub-relation S (defined on the whole base) obtained by keeping the pairs of S only.
    """
    check_subrelation(S, act.relation, 'acting sub-relation')
    _check_full_domain(S, 'acting sub-relation')
    table = {(x, y, t): image for (x, y, t), image in act.table.items() if S.equivalent(x, y)}
    return Action(S, table)
