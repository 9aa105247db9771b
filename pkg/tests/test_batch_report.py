import pytest

from arboretum.harness.batch import run_batch, run_instance
from arboretum.harness.generators import GeneratorConfig
from arboretum.common.constants import GeneratorKind
from arboretum.report import BatchReportGenerator, IReportGenerator


def _row(seed, agreement, kurosh_ok=None):
    return {'seed': seed, 'kind': 'free', 'size': 4, 'agreement': agreement, 'tree_field': True,
            'kurosh_ok': kurosh_ok}


def test_summary_counts_the_rows_where_a_check_ran():
    report = BatchReportGenerator.to_frame([_row(2, True), _row(0, False, True), _row(1, True, True)])
    assert list(report['seed']) == [0, 1, 2]
    assert BatchReportGenerator.summary(report) == ['agreement: 2/3', 'tree_field: 3/3', 'kurosh_ok: 2/2']


def test_generate_writes_csv(tmp_path):
    path = tmp_path / 'report.csv'
    lines = BatchReportGenerator.generate([_row(0, True)], str(path))
    assert path.read_text(encoding='utf-8').splitlines()[0] == 'seed,kind,size,agreement,tree_field,kurosh_ok'
    assert lines[0] == 'agreement: 1/1'


def test_run_instance():
    row = run_instance(GeneratorConfig(seed=7, size=6))
    assert row['verdict'] == 'accept'
    assert row['agreement'] and row['tree_field']
    assert row['kurosh_ok']


@pytest.mark.slow
def test_perturbed_instances_agree():
    rows = run_batch(range(5), GeneratorKind.PERTURBED, size=6)
    assert [row['seed'] for row in rows] == list(range(5))
    assert all(row['agreement'] and row['tree_field'] for row in rows)


def test_amalgam_instances():
    rows = run_batch([3, 1], GeneratorKind.AMALGAM, size=6)
    assert [row['seed'] for row in rows] == [1, 3]
    assert all(row['verdict'] == 'accept' and row['kurosh_ok'] is None for row in rows)


def test_report_generators_implement_generate():
    assert issubclass(BatchReportGenerator, IReportGenerator)
    BatchReportGenerator()
