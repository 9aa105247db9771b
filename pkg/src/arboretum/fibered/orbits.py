import numpy as np
from typing import FrozenSet, Iterable, List, Optional, Set

from .fibered_space import Action, FiberedSpace, FiberPoint, PartialSection
from ..common.dev_utils import get_logger
from ..common.errors import InvalidAction, NotSaturating
from ..common.math_utils import UNDEFINED
from ..space.equiv_relation import EquivRelation, fundamental_domain

logger = get_logger('Orbits')


def validate_action(F: FiberedSpace, act: Action):
    """
    Check that act is an action of its relation on F.

    The identity law (z, z) . t = t, the fiber compatibility ((x, y) . - maps the fiber over y onto
    the fiber over x) and the cocycle law (x, y) . ((y, z) . t) = (x, z) . t are checked on every
    triple. The first violation raises InvalidAction with the offending triple.
    """
    R = act.relation
    F.base.check_same(R.space)
    if not R.domain.is_full():
        x = sorted(R.domain.complement().members)[0]
        raise InvalidAction('acting relation must be defined on the whole base', witness=(x, x, None))
    for class_ in R.classes():
        for x in class_:
            fiber_x = set(F.fiber(x))
            for t in F.fiber(x):
                if act.act(x, x, t) != t:
                    raise InvalidAction('identity law fails', witness=(x, x, t))
            for y in class_:
                images = [act.act(x, y, t) for t in F.fiber(y)]
                if set(images) != fiber_x or len(images) != len(fiber_x):
                    raise InvalidAction('pair does not map a fiber bijectively onto the other', witness=(x, y, None))
    for class_ in R.classes():
        for x in class_:
            for y in class_:
                for z in class_:
                    for t in F.fiber(z):
                        if act.act(x, y, act.act(y, z, t)) != act.act(x, z, t):
                            raise InvalidAction('cocycle law fails', witness=(x, y, z, t))


def orbit_relation(F: FiberedSpace, act: Action) -> EquivRelation:
    """
    Orbit relation of the action, on the carrier space (points indexed by F.index).

    t ~ t' iff (proj(t), proj(t')) . t' = t.
    """
    labels = np.full(len(F), UNDEFINED, dtype=np.int64)
    for t in F.carrier():
        i = F.index(t)
        if labels[i] != UNDEFINED:
            continue
        orbit = [F.index(u) for u in act.orbit(F, t)]
        labels[orbit] = min(orbit)
    return EquivRelation.from_array(F.carrier_space(), labels)


def orbit_saturation(F: FiberedSpace, act: Action, points: Iterable[FiberPoint]) -> Set[FiberPoint]:
    saturation = set()
    for t in points:
        if t not in saturation:
            saturation.update(act.orbit(F, t))
    return saturation


def is_saturating(F: FiberedSpace, act: Action, s: PartialSection) -> bool:
    return len(orbit_saturation(F, act, s.image())) == len(F)


def check_saturating(F: FiberedSpace, act: Action, s: PartialSection, what: str = 'section'):
    covered = orbit_saturation(F, act, s.image())
    for t in F.carrier():
        if t not in covered:
            raise NotSaturating(f'{what} is not saturating: orbit of {t} is missed', witness=t)


def stabilizer(F: FiberedSpace, act: Action, s: PartialSection) -> EquivRelation:
    """
    Stabilizer of a partial section: x ~ y iff (y, x) . s(x) = s(y).

    Parameters
    ----------
    F : FiberedSpace
        Fibered space.

    act : Action
        Action of R on F.

    s : PartialSection
        Section defined on A.

    Returns
    -------
    stabilizer : EquivRelation
        Sub-relation of R restricted to A.
    """
    R = act.relation
    labels = np.full(R.space.size, UNDEFINED, dtype=np.int64)
    for x, t in s.items():
        if labels[x] != UNDEFINED:
            continue
        labels[x] = x
        for y in R.class_members(x):
            if y in s.domain and labels[y] == UNDEFINED and act.act(y, x, t) == s(y):
                labels[y] = x
    return EquivRelation.from_array(R.space, labels)


def exhaust_sections(F: FiberedSpace, act: Action) -> List[PartialSection]:
    """
    Partial sections whose image orbits partition the carrier.

    Each round sections the least-numbered remaining point of every fiber that still has one, then
    removes the orbits of the chosen points.
    """
    remaining = set(F.carrier())
    sections = []
    while remaining:
        assign = {}
        for x in F.base.points():
            candidates = [t for t in F.fiber(x) if t in remaining]
            if candidates:
                assign[x] = candidates[0]
        section = PartialSection.from_mapping(F.base, assign)
        remaining -= orbit_saturation(F, act, section.image())
        sections.append(section)
    logger.debug(f'carrier of {len(F)} points exhausted by {len(sections)} sections')
    return sections


def rf_fundamental_domain(F: FiberedSpace, act: Action) -> FrozenSet[FiberPoint]:
    """Fundamental domain of the orbit relation: union of the sections restricted to a fundamental
    domain of their stabilizers."""
    domain = set()
    for s in exhaust_sections(F, act):
        kept = fundamental_domain(stabilizer(F, act, s))
        domain.update(s(x) for x in kept)
    return frozenset(domain)


def is_homogeneous(F: FiberedSpace, act: Action) -> Optional[PartialSection]:
    """
    Look for a saturating section meeting each orbit once (a complete domain of the orbit relation on
    which the projection is injective).

    Orbits are taken in order of their least carrier point; each picks its least-index point lying over
    an unused base point.

    Returns
    -------
    section : PartialSection or None
        None when the greedy search gets stuck.
    """
    orbits = orbit_relation(F, act)
    carrier = F.carrier()
    assign = {}
    for class_ in orbits.classes():
        chosen = next((carrier[i] for i in class_ if F.proj(carrier[i]) not in assign), None)
        if chosen is None:
            logger.debug(f'no free base point left for the orbit of {carrier[class_[0]]}')
            return None
        assign[F.proj(chosen)] = chosen
    return PartialSection.from_mapping(F.base, assign)
