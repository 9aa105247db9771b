import time
from typing import Any, Dict, List, Sequence

from .generators import GeneratorConfig, generate
from .instance_file import InstanceFile
from ..common.constants import GeneratorKind, Verdict
from ..common.dev_utils import get_logger
from ..common.errors import ValidationError
from ..decomp.certificate_checker import check_kurosh
from ..decomp.kurosh import kurosh
from ..decomp.product_verifier import Accept, verify_amalgam, verify_free_product
from ..decomp.reduced_tuple import find_closing_tuple
from ..treefield.bass_serre import bass_serre_amalgam, free_product_field
from ..treefield.graph_field import is_treefield

logger = get_logger('Batch')


def _tree_field_agrees(instance: InstanceFile, accepted: bool) -> bool:
    R, factors, core = instance.product(), instance.factors(), instance.core()
    if core is not None:
        field = bass_serre_amalgam(R.extend_trivially(), *(f.extend_trivially() for f in factors),
                                   core.extend_trivially())
    else:
        field = free_product_field(R.extend_trivially(), [f.extend_trivially() for f in factors])
    return (is_treefield(field) is None) == accepted


def run_instance(cfg: GeneratorConfig) -> Dict[str, Any]:
    """
    Run one generated instance through the verifier, the closing tuple search, the Bass-Serre field
    and, for accepted free products with a sub-relation, the Kurosh decomposition and its check.
    """
    instance = generate(cfg)
    R, factors, core = instance.product(), instance.factors(), instance.core()
    row: Dict[str, Any] = {'seed': cfg.seed, 'kind': cfg.kind.value, 'size': cfg.size}

    start = time.perf_counter()
    verdict = verify_free_product(R, factors) if core is None else verify_amalgam(R, *factors, core)
    row['verify_s'] = time.perf_counter() - start
    row['verdict'] = verdict.verdict.value

    start = time.perf_counter()
    closing = find_closing_tuple([f.extend_trivially() for f in factors], core)
    row['oracle_s'] = time.perf_counter() - start
    row['oracle_verdict'] = (Verdict.ACCEPT if closing is None else Verdict.REJECT).value
    row['agreement'] = row['verdict'] == row['oracle_verdict']

    accepted = isinstance(verdict, Accept)
    row['tree_field'] = _tree_field_agrees(instance, accepted)

    row['kurosh_ok'] = None
    row['kurosh_s'] = None
    if accepted and core is None and instance.structure.sub is not None:
        start = time.perf_counter()
        decomposition = kurosh(R, [f.extend_trivially() for f in factors], instance.sub())
        row['kurosh_ok'] = check_kurosh(decomposition).ok
        row['kurosh_s'] = time.perf_counter() - start
    return row


def run_batch(seeds: Sequence[int], kind: GeneratorKind = GeneratorKind.FREE, size: int = 6,
              factors: int = 2) -> List[Dict[str, Any]]:
    """One row per seed, in seed order."""
    if kind == GeneratorKind.TREEING:
        raise ValidationError('batches run product instances', f'got {kind.value}')
    rows = []
    for seed in sorted(seeds):
        rows.append(run_instance(GeneratorConfig(seed=seed, size=size, factors=factors, kind=kind)))
    logger.info(f'{len(rows)} {kind.value} instances run, '
                f'{sum(not row["agreement"] for row in rows)} disagreements with the closing tuple search')
    return rows
