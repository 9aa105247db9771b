"""
Second, independent verification path for certificates.

Only the finite-space primitives and the bounded closing tuple search are used here, so that a bug in
the incidence-graph decision or in the tree-field constructions cannot certify itself.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .kurosh import KuroshDecomposition, RestrictionDecomposition
from .product_verifier import Accept, ProductVerdict, Reject
from .reduced_tuple import find_closing_tuple, is_reduced
from ..common.constants import CertificateKind
from ..common.dev_utils import get_logger
from ..common.errors import TagMismatch
from ..space.equiv_relation import EquivRelation, join
from ..space.graphing import Graphing

logger = get_logger('CertificateChecker')


@dataclass(frozen=True)
class CheckReport:
    kind: CertificateKind
    failures: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures


def _generation_failure(relation: EquivRelation, parts: Sequence[EquivRelation]) -> Optional[str]:
    if join([p.extend_trivially() for p in parts]) != relation.extend_trivially():
        return 'generation: the parts do not generate the relation'
    return None


def check_product(verdict: ProductVerdict, max_length: Optional[int] = None) -> CheckReport:
    """
    Re-check an Accept or Reject verdict: generation, then either no closing tuple within the search
    bound, or a closing tuple that is reduced for the factors.
    """
    failures: List[str] = []
    factors = [f.extend_trivially() for f in verdict.factors]
    generation = _generation_failure(verdict.relation, factors)
    if generation is not None:
        failures.append(generation)
    if isinstance(verdict, Accept):
        found = find_closing_tuple(factors, verdict.core, max_length)
        if found is not None:
            failures.append(f'freeness: closing tuple {found.points} with tags {found.tags}')
    else:
        t = verdict.closing_tuple
        try:
            reduced = is_reduced(t, factors, verdict.core)
        except TagMismatch as e:
            reduced = False
            failures.append(f'closing tuple: pair {e.position} is not in its factor')
        if not t.is_closing():
            failures.append('closing tuple: last point differs from the first one')
        elif not reduced:
            failures.append('closing tuple: not reduced')
    return CheckReport(verdict.kind, tuple(failures))


def check_treeing(relation: EquivRelation, treeing: Graphing) -> CheckReport:
    failures = []
    if treeing.cycle() is not None:
        failures.append(f'treeing: cycle through {treeing.cycle()}')
    if treeing.generated_relation() != relation.extend_trivially():
        failures.append('treeing: does not generate the relation')
    return CheckReport(CertificateKind.TREEING, tuple(failures))


def _formula_failure(position: int, decomposition: KuroshDecomposition) -> Optional[str]:
    k = decomposition.factors[position]
    Ri = decomposition.free_factors[k.factor]
    S = decomposition.relation
    full = isinstance(decomposition, RestrictionDecomposition)
    phi = k.conjugator.mapping()
    if k.relation.domain != k.conjugator.source:
        return f'formula: record {position} is not defined on the source of its conjugator'
    for x in phi:
        if not decomposition.ambient.equivalent(x, phi[x]):
            return f'formula: record {position} moves {x} out of its class'
        if not Ri.in_domain(phi[x]):
            return f'formula: record {position} sends {x} outside the factor domain'
        for y in phi:
            expected = Ri.equivalent(phi[x], phi[y]) and (full or S.equivalent(x, y))
            if k.relation.equivalent(x, y) != expected:
                return f'formula: record {position} differs from the conjugate at ({x}, {y})'
    return None


def check_kurosh(decomposition: KuroshDecomposition, max_length: Optional[int] = None) -> CheckReport:
    """
    Re-check a Kurosh or restriction decomposition pointwise: factor formula, identity records,
    generation by join, freeness by the closing tuple search and, for restrictions, the partition of
    the factor domains.
    """
    failures: List[str] = []
    for position in range(len(decomposition.factors)):
        failure = _formula_failure(position, decomposition)
        if failure is not None:
            failures.append(failure)
    for i, position in enumerate(decomposition.identity_factors):
        expected = decomposition.identity_domain(i)
        if position is None:
            if len(expected):
                failures.append(f'identity: factor {i} has no identity record')
            continue
        k = decomposition.factors[position]
        if not all(x == y for x, y in k.conjugator.pairs) or k.conjugator.source != expected:
            failures.append(f'identity: record {position} is not the identity on {sorted(expected.members)}')
    if decomposition.treeing.cycle() is not None:
        failures.append(f'treeing: cycle through {decomposition.treeing.cycle()}')
    parts = decomposition.relations()
    generation = _generation_failure(decomposition.relation, parts)
    if generation is not None:
        failures.append(generation)
    found = find_closing_tuple([p.extend_trivially() for p in parts], max_length=max_length)
    if found is not None:
        failures.append(f'freeness: closing tuple {found.points} with tags {found.tags}')
    if isinstance(decomposition, RestrictionDecomposition):
        witness = decomposition.partition_witness()
        if witness is not None:
            failures.append(f'partition: factor {witness[0]} at point {witness[1]}')
    logger.debug(f'{decomposition.kind.value} decomposition checked: {len(failures)} failures')
    return CheckReport(decomposition.kind, tuple(failures))


def check_certificate(certificate, max_length: Optional[int] = None) -> CheckReport:
    """Dispatch on the certificate type."""
    if isinstance(certificate, KuroshDecomposition):
        return check_kurosh(certificate, max_length)
    if isinstance(certificate, (Accept, Reject)):
        return check_product(certificate, max_length)
    raise TypeError(f'no check for {type(certificate).__name__}')
