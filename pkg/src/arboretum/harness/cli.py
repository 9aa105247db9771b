import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .batch import run_batch
from .generators import GeneratorConfig, generate
from .instance_file import (InstanceFile, TreeingCertificate, digest, parse_certificate, parse_instance,
                            serialize_certificate, serialize_instance)
from ..common.constants import ExitCode, GeneratorKind
from ..common.dev_utils import get_logger, set_verbosity
from ..common.errors import (ArboretumError, CoverageViolation, DomainMismatch, HypothesisViolation, NotFreeProduct,
                             NotSubrelation, ParseError, SpaceMismatch, ValidationError)
from ..decomp.analysis import generation_split
from ..decomp.certificate_checker import check_certificate, check_treeing
from ..decomp.desingularization import desingularize, validate_desingularization
from ..decomp.kurosh import kurosh, restrict_decomposition
from ..decomp.product_verifier import Reject, check_free_product, verify_amalgam, verify_free_product
from ..report.batch_report_generator import BatchReportGenerator
from ..space.graphing import Treeing
from ..treefield.bass_serre import bass_serre_amalgam, bass_serre_free, free_product_field
from ..treefield.extraction import amalgam_subrelation_treeing, extract_treeing, subrelation_treeing
from ..treefield.graph_field import is_treefield

logger = get_logger('Cli')

INPUT_ERRORS = (ParseError, ValidationError, DomainMismatch, SpaceMismatch, NotSubrelation, CoverageViolation,
                HypothesisViolation, OSError)


def _read_instance(args) -> InstanceFile:
    if args.inp is None:
        raise ValidationError('an instance is needed', 'pass --in')
    return parse_instance(Path(args.inp).read_text(encoding='utf-8'))


def _emit(args, text: str):
    if args.out is not None:
        Path(args.out).write_text(text, encoding='utf-8')
        logger.info(f'written to {args.out}')
    else:
        sys.stdout.write(text)


def _emit_report(args, report: Dict[str, Any]):
    _emit(args, json.dumps(report, indent=2, sort_keys=True) + '\n')


def _restriction_points(args) -> Optional[Tuple[int, ...]]:
    if args.restrict is None:
        return None
    try:
        return tuple(int(x) for x in args.restrict.split(',') if x.strip())
    except ValueError:
        raise ValidationError('restriction set must be a comma separated list of points', args.restrict)


def _whole(instance: InstanceFile):
    """Product and factors, extended trivially to the whole space."""
    return instance.product().extend_trivially(), [f.extend_trivially() for f in instance.factors()]


def cmd_validate(args) -> ExitCode:
    instance = _read_instance(args)
    _emit_report(args, {'digest': digest(instance), 'relations': sorted(instance.relations),
                        'size': instance.space.size})
    return ExitCode.ACCEPT


def cmd_verify_free(args) -> ExitCode:
    instance = _read_instance(args)
    verdict = verify_free_product(instance.product(), instance.factors())
    _emit(args, serialize_certificate(verdict, digest(instance)))
    if isinstance(verdict, Reject):
        logger.info(f'rejected, closing tuple {verdict.closing_tuple.points}')
        return ExitCode.REJECT
    return ExitCode.ACCEPT


def cmd_verify_amalgam(args) -> ExitCode:
    instance = _read_instance(args)
    factors, core = instance.factors(), instance.core()
    if len(factors) != 2 or core is None:
        raise ValidationError('an amalgam declares two factors and a core', f'{len(factors)} factors')
    verdict = verify_amalgam(instance.product(), factors[0], factors[1], core)
    _emit(args, serialize_certificate(verdict, digest(instance)))
    if isinstance(verdict, Reject):
        logger.info(f'rejected, closing tuple {verdict.closing_tuple.points}')
        return ExitCode.REJECT
    return ExitCode.ACCEPT


def cmd_bass_serre(args) -> ExitCode:
    instance = _read_instance(args)
    R, factors = _whole(instance)
    core = instance.core()
    if core is not None:
        field = bass_serre_amalgam(R, factors[0], factors[1], core.extend_trivially())
    elif len(factors) == 2:
        field = bass_serre_free(R, factors[0], factors[1])
    else:
        field = free_product_field(R, factors)
    witness = is_treefield(field)
    report = {'digest': digest(instance), 'tree_field': witness is None,
              'vertices': len(field.vertices), 'edges': len(field.edges)}
    if witness is not None:
        report['witness'] = {'base_point': witness.base_point, 'kind': witness.kind.value,
                             'vertices': [list(v) for v in witness.vertices]}
    _emit_report(args, report)
    return ExitCode.ACCEPT if witness is None else ExitCode.REJECT


def cmd_extract_treeing(args) -> ExitCode:
    """
    Treeing of the sub-relation: read from the first graphing of the instance when it has one, otherwise
    from the action of the sub-relation on the Bass-Serre field of the declared structure.
    """
    instance = _read_instance(args)
    if instance.graphings:
        graphing = instance.graphings[sorted(instance.graphings)[0]]
        declared = instance.structure is not None and instance.structure.sub is not None
        S = instance.sub(args.sub) if args.sub or declared else graphing.generated_relation()
        treeing = subrelation_treeing(Treeing.of(graphing), S)
    else:
        R, factors = _whole(instance)
        S = instance.sub(args.sub).extend_trivially()
        core = instance.core()
        if core is not None:
            treeing = amalgam_subrelation_treeing(R, factors[0], factors[1], core.extend_trivially(), S)
        else:
            check_free_product(factors, R)
            treeing = extract_treeing(free_product_field(R, factors).with_acting_relation(S))
    _emit(args, serialize_certificate(TreeingCertificate(S.extend_trivially(), treeing), digest(instance)))
    return ExitCode.ACCEPT


def cmd_desingularize(args) -> ExitCode:
    instance = _read_instance(args)
    R, factors = _whole(instance)
    check_free_product(factors, R)
    S = instance.sub(args.sub).extend_trivially()
    d = desingularize(free_product_field(R, factors).with_acting_relation(S))
    violation = validate_desingularization(d)
    split = generation_split(d)
    report = {'digest': digest(instance), 'tree_vertices': len(d.max_tree.vertex_relations),
              'extra_edges': [{'origin': a.origin, 'terminus': a.terminus,
                               'conjugator': [list(p) for p in a.conjugator.pairs]} for a in d.extra_edges],
              'treeing': [list(e) for e in split.treeing.unordered_edges()],
              'violation': None if violation is None else violation.bullet.value,
              'generation_split': split.ok()}
    _emit_report(args, report)
    return ExitCode.ACCEPT if violation is None and split.ok() else ExitCode.REJECT


def cmd_kurosh(args) -> ExitCode:
    instance = _read_instance(args)
    R, factors = _whole(instance)
    decomposition = kurosh(R, factors, instance.sub(args.sub))
    _emit(args, serialize_certificate(decomposition, digest(instance)))
    return ExitCode.ACCEPT


def cmd_restrict(args) -> ExitCode:
    instance = _read_instance(args)
    Y = instance.restriction_set(_restriction_points(args))
    decomposition = restrict_decomposition(instance.product(), instance.factors(), Y)
    _emit(args, serialize_certificate(decomposition, digest(instance)))
    return ExitCode.ACCEPT


def cmd_check(args) -> ExitCode:
    if args.cert is None:
        raise ValidationError('a certificate is needed', 'pass --cert')
    certificate, certified = parse_certificate(Path(args.cert).read_text(encoding='utf-8'))
    if args.inp is not None:
        actual = digest(_read_instance(args))
        if actual != certified:
            raise ValidationError('certificate digest must match the instance', f'{certified} != {actual}')
    if isinstance(certificate, TreeingCertificate):
        report = check_treeing(certificate.relation, certificate.treeing)
    else:
        report = check_certificate(certificate, args.max_tuple_len)
    _emit_report(args, {'kind': report.kind.value, 'ok': report.ok, 'failures': list(report.failures)})
    return ExitCode.ACCEPT if report.ok else ExitCode.REJECT


def cmd_gen(args) -> ExitCode:
    cfg = GeneratorConfig(seed=args.seed, size=args.size, factors=args.factors, density=args.density,
                          kind=GeneratorKind(args.kind))
    _emit(args, serialize_instance(generate(cfg)))
    return ExitCode.ACCEPT


def cmd_batch(args) -> ExitCode:
    if args.out is None:
        raise ValidationError('a report path is needed', 'pass --out')
    rows = run_batch(range(args.seed, args.seed + args.count), GeneratorKind(args.kind), args.size, args.factors)
    for line in BatchReportGenerator.generate(rows, args.out):
        print(line)
    return ExitCode.ACCEPT if all(row['agreement'] and row['tree_field'] is not False and row['kurosh_ok'] is not False
                                  for row in rows) else ExitCode.REJECT


COMMANDS = {
    'validate': (cmd_validate, 'Parse an instance and print its digest'),
    'verify-free': (cmd_verify_free, 'Decide the declared free product'),
    'verify-amalgam': (cmd_verify_amalgam, 'Decide the declared amalgamated product'),
    'bass-serre': (cmd_bass_serre, 'Build the Bass-Serre field and test it is a tree field'),
    'extract-treeing': (cmd_extract_treeing, 'Extract a treeing of the sub-relation'),
    'desingularize': (cmd_desingularize, 'Desingularize the action of the sub-relation on the Bass-Serre field'),
    'kurosh': (cmd_kurosh, 'Kurosh decomposition of the sub-relation'),
    'restrict': (cmd_restrict, 'Decomposition of the restriction of the product to a set'),
    'check': (cmd_check, 'Re-check a certificate independently'),
    'gen': (cmd_gen, 'Generate a seeded random instance'),
    'batch': (cmd_batch, 'Run seeded instances and write a CSV report'),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='arboretum', description='Bass-Serre fields of finite equivalence relations')
    parser.add_argument('--verbose', action='store_true', help='Log pipeline details')
    parser.add_argument('--quiet', action='store_true', help='Only log warnings')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('--in', dest='inp', default=None, help='Instance JSON path')
        sub.add_argument('--out', dest='out', default=None, help='Output path (default: standard output)')
        sub.add_argument('--sub', dest='sub', default=None, help='Name of the sub-relation')
        sub.add_argument('--restrict', dest='restrict', default=None, help='Comma separated restriction set')
        sub.add_argument('--cert', dest='cert', default=None, help='Certificate JSON path')
        sub.add_argument('--seed', dest='seed', type=int, default=0, help='Seed of the generators')
        sub.add_argument('--count', dest='count', type=int, default=100, help='Number of seeds of a batch')
        sub.add_argument('--size', dest='size', type=int, default=6, help='Number of points of generated instances')
        sub.add_argument('--factors', dest='factors', type=int, default=2, help='Number of generated factors')
        sub.add_argument('--density', dest='density', type=float, default=0.5,
                         help='Density of generated sub-relations')
        sub.add_argument('--kind', dest='kind', default=GeneratorKind.FREE.value,
                         choices=[k.value for k in GeneratorKind], help='Kind of generated instances')
        sub.add_argument('--max-tuple-len', dest='max_tuple_len', type=int, default=None,
                         help='Bound of the closing tuple search (default: twice the size)')
        sub.add_argument('--format', dest='format', default='json', choices=['json'], help='Output format')
    return parser


def run_command(argv: Optional[List[str]] = None) -> ExitCode:
    args = build_parser().parse_args(argv)
    set_verbosity(args.verbose, args.quiet)
    command, _ = COMMANDS[args.command]
    try:
        return command(args)
    except INPUT_ERRORS as e:
        logger.error(f'input error: {e}')
        return ExitCode.INPUT_ERROR
    except NotFreeProduct as e:
        logger.error(f'rejected: {e}')
        return ExitCode.REJECT
    except ArboretumError as e:
        logger.error(f'{type(e).__name__}: {e}')
        return ExitCode.REJECT


def main(argv: Optional[List[str]] = None) -> int:
    return run_command(argv).value


if __name__ == '__main__':
    sys.exit(main())
