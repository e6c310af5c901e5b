# tests/test_cli.py
import json

import pandas as pd
import pytest

from app import main
from services.benchmarks import FUNCTIONS
from tests import reference_tables as ref

SMALL_RUN = [
    'run', '--functions', 'sphere,rastrigin', '--algos', 'pso,tlbo',
    '--dim', '2', '--runs', '2', '--budget-per-dim', '100', '--jobs', '1', '--seed', '5',
]


def run_cli(tmp_path, name='out', extra=()):
    out = tmp_path / name
    code = main(SMALL_RUN + ['--out', str(out)] + list(extra))
    return code, out


def write_means(path, means):
    rows = [
        {'function': f, 'algorithm': a, 'mean': m}
        for f, cells in means.items() for a, m in cells.items()
    ]
    pd.DataFrame(rows).to_csv(path, index=False, float_format='%.17e')


# ── list ──────────────────────────────────────────────────────────────────────

def test_list(capsys):
    assert main(['list']) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()

    function_lines = [l for l in lines if l.split('  ')[0] in FUNCTIONS]
    assert len(function_lines) == 20
    assert 'sphere  [-100,100]  unimodal  F*=0' in lines
    assert any(l.startswith('quartic  ') and 'F*=variable' in l for l in lines)
    assert any(l.startswith('schwefel  ') and 'F*=-418.983' in l for l in lines)

    algorithm_lines = [l for l in lines if l.split('  ')[0] in ('ga', 'pso', 'abc', 'tlbo', 'coa')]
    assert len(algorithm_lines) == 5
    assert 'tlbo  (no tunable parameters)' in out
    assert 'inertia=0.25' in out


# ── run ───────────────────────────────────────────────────────────────────────

def test_run_writes_results(tmp_path):
    code, out = run_cli(tmp_path)
    assert code == 0

    summary = pd.read_csv(out / 'summary.csv')
    assert list(summary.columns) == [
        'function', 'algorithm', 'variant', 'dim', 'runs', 'mean', 'sd', 'mean_error', 'ffe_budget',
    ]
    assert len(summary) == 4
    assert set(summary['ffe_budget']) == {200}
    assert (summary['mean'] == summary['mean_error']).all()

    ranks = pd.read_csv(out / 'ranks.csv')
    assert list(ranks.columns) == ['function', 'pso', 'tlbo']
    assert list(ranks['function']) == ['sphere', 'rastrigin', 'rank_sum', 'lex_rank']

    traces = sorted(p.name for p in (out / 'traces').iterdir())
    assert len(traces) == 8
    assert 'sphere_pso_0.csv' in traces
    trace = pd.read_csv(out / 'traces' / 'rastrigin_tlbo_1.csv')
    assert list(trace.columns) == ['ffe', 'best_so_far']
    assert trace['best_so_far'].is_monotonic_decreasing

    meta = json.loads((out / 'run_meta.json').read_text())
    assert meta['plan']['base_seed'] == 5
    assert meta['plan']['max_ffe'] == 200
    assert meta['parameters']['pso']['inertia'] == 0.25
    assert len(meta['cells']['sphere/pso']['seeds']) == 2


def test_rerun_is_byte_identical(tmp_path):
    _, first  = run_cli(tmp_path, 'a')
    _, second = run_cli(tmp_path, 'b')
    for name in ('summary.csv', 'ranks.csv', 'traces/sphere_tlbo_1.csv'):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_unknown_function_exits_2(tmp_path, capsys):
    code = main(['run', '--functions', 'nosuchfn', '--out', str(tmp_path / 'x')])
    assert code == 2
    assert 'nosuchfn' in capsys.readouterr().err
    assert not (tmp_path / 'x').exists()


def test_config_file(tmp_path):
    config = tmp_path / 'experiment.json'
    config.write_text(json.dumps({
        'functions': ['step'],
        'algorithms': ['pso', 'abc'],
        'dimension': 2,
        'runs': 1,
        'budget_per_dim': 50,
        'jobs': 1,
        'parameters': {'pso': {'population_size': 10}, 'abc': {'limit': 5}},
        'out': str(tmp_path / 'cfg'),
    }))
    assert main(['run', str(config)]) == 0
    meta = json.loads((tmp_path / 'cfg' / 'run_meta.json').read_text())
    assert meta['parameters']['pso']['population_size'] == 10
    assert meta['parameters']['abc']['limit'] == 5


def test_flags_override_config_file(tmp_path):
    config = tmp_path / 'experiment.json'
    config.write_text(json.dumps({'functions': ['nosuchfn'], 'runs': 1, 'jobs': 1}))
    code = main(['run', str(config), '--functions', 'sphere', '--algos', 'pso',
                 '--dim', '1', '--budget-per-dim', '40', '--out', str(tmp_path / 'o')])
    assert code == 0


@pytest.mark.parametrize('payload', [
    {'functions': ['sphere'], 'colour': 'blue'},
    {'parameters': {'pso': {'momentum': 0.1}}},
    {'runs': 0},
    {'variant': 'rotated'},
])
def test_bad_config_file_exits_2(tmp_path, payload):
    config = tmp_path / 'bad.json'
    config.write_text(json.dumps(payload))
    assert main(['run', str(config), '--out', str(tmp_path / 'o')]) == 2


def test_unreadable_config_exits_2(tmp_path):
    config = tmp_path / 'bad.json'
    config.write_text('{not json')
    assert main(['run', str(config)]) == 2
    assert main(['run', str(tmp_path / 'missing.json')]) == 2


def test_seed_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv('METABENCH_SEED', '5')
    out = tmp_path / 'env'
    argv = [a for a in SMALL_RUN if a not in ('--seed', '5')]
    assert main(argv + ['--out', str(out)]) == 0
    _, flagged = run_cli(tmp_path, 'flag')
    assert (out / 'summary.csv').read_bytes() == (flagged / 'summary.csv').read_bytes()
    assert json.loads((out / 'run_meta.json').read_text())['plan']['base_seed'] == 5


# ── rank ──────────────────────────────────────────────────────────────────────

def test_rank_round_trip(tmp_path):
    _, out = run_cli(tmp_path)
    again = tmp_path / 'again'
    assert main(['rank', str(out / 'summary.csv'), '--out', str(again)]) == 0
    assert (again / 'ranks.csv').read_bytes() == (out / 'ranks.csv').read_bytes()


def test_rank_defaults_next_to_summary(tmp_path):
    summary = tmp_path / 'summary.csv'
    write_means(summary, ref.UNIMODAL_PLAIN_MEANS)
    assert main(['rank', str(summary)]) == 0
    assert (tmp_path / 'ranks.csv').exists()


@pytest.mark.parametrize('means, sums, lex', [
    (ref.UNIMODAL_PLAIN_MEANS, ref.UNIMODAL_PLAIN_SUMS, ref.UNIMODAL_PLAIN_LEX),
    (ref.UNIMODAL_SHIFTED_MEANS, ref.UNIMODAL_SHIFTED_SUMS, ref.UNIMODAL_SHIFTED_LEX),
    (ref.MULTIMODAL_SHIFTED_MEANS, None, ref.MULTIMODAL_SHIFTED_LEX),
], ids=['unimodal-plain', 'unimodal-shifted', 'multimodal-shifted'])
def test_rank_published_means(tmp_path, means, sums, lex):
    summary = tmp_path / 'summary.csv'
    write_means(summary, means)
    assert main(['rank', str(summary)]) == 0

    ranks = pd.read_csv(tmp_path / 'ranks.csv').set_index('function')
    if sums is not None:
        assert ranks.loc['rank_sum'].to_dict() == sums
    assert ranks.loc['lex_rank'].to_dict() == lex


def test_rank_single_algorithm(tmp_path):
    summary = tmp_path / 'summary.csv'
    write_means(summary, {'sphere': {'abc': 1e-3}, 'step': {'abc': 0.0}, 'discus': {'abc': 2.0}})
    assert main(['rank', str(summary)]) == 0
    ranks = pd.read_csv(tmp_path / 'ranks.csv').set_index('function')
    assert ranks.loc['rank_sum', 'abc'] == 3
    assert ranks.loc['lex_rank', 'abc'] == 1


@pytest.mark.parametrize('content', [
    'garbage\n1\n',
    'function,algorithm,mean\nsphere,ga,abc\n',
    'function,algorithm,mean\n',
    'function,algorithm,mean\nsphere,ga,1.0\nsphere,ga,2.0\n',
    'function,algorithm,mean\nsphere,ga,1.0\nstep,pso,2.0\n',
    'function,algorithm,mean\nsphere,ga,\n',
])
def test_rank_rejects_malformed_summary(tmp_path, capsys, content):
    summary = tmp_path / 'summary.csv'
    summary.write_text(content)
    assert main(['rank', str(summary)]) == 2
    assert capsys.readouterr().err.startswith('❌')


def test_rank_missing_summary(tmp_path):
    assert main(['rank', str(tmp_path / 'nope.csv')]) == 2
