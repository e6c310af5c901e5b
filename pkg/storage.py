# storage.py
import json
from pathlib import Path

import pandas as pd

from services.benchmarks import error_from_optimum, get_spec

FLOAT_FORMAT = '%.17e'

SUMMARY_COLUMNS = [
    'function', 'algorithm', 'variant', 'dim', 'runs',
    'mean', 'sd', 'mean_error', 'ffe_budget',
]


class SummaryFormatError(ValueError):
    pass


# ── Summary ───────────────────────────────────────────────────────────────────

def summary_frame(summaries, plan):
    rows = []
    for cell in summaries:
        spec = get_spec(cell.function_id, plan.dimension)
        mean_error = None
        if spec.optimum_value is not None:
            mean_error = error_from_optimum(spec, cell.mean)
        rows.append({
            'function':   cell.function_id,
            'algorithm':  cell.algorithm,
            'variant':    plan.variant,
            'dim':        plan.dimension,
            'runs':       len(cell.runs),
            'mean':       cell.mean,
            'sd':         cell.sd,
            'mean_error': mean_error,
            'ffe_budget': plan.max_ffe,
        })
    frame = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
    frame['mean_error'] = frame['mean_error'].astype(float)
    return frame


def write_summary(path, frame):
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep='')


def read_summary(path):
    try:
        frame = pd.read_csv(path, float_precision='round_trip')
    except FileNotFoundError:
        raise SummaryFormatError(f"summary not found: {path}")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise SummaryFormatError(f"cannot parse {path}: {e}")

    missing = [c for c in ('function', 'algorithm', 'mean') if c not in frame.columns]
    if missing:
        raise SummaryFormatError(f"{path}: missing column(s) {', '.join(missing)}")
    if frame.empty:
        raise SummaryFormatError(f"{path}: no rows")
    try:
        frame['mean'] = pd.to_numeric(frame['mean'], errors='raise').astype(float)
    except (ValueError, TypeError) as e:
        raise SummaryFormatError(f"{path}: non-numeric mean ({e})")
    if frame['mean'].isna().any():
        raise SummaryFormatError(f"{path}: empty mean value")
    if 'variant' in frame.columns and frame['variant'].nunique() > 1:
        raise SummaryFormatError(f"{path}: mixes variants {sorted(frame['variant'].unique())}")
    if frame.duplicated(subset=['function', 'algorithm']).any():
        raise SummaryFormatError(f"{path}: duplicate (function, algorithm) rows")
    return frame


def means_from_summary(frame):
    """{function: {algorithm: mean}} in order of first appearance."""
    algorithms = list(dict.fromkeys(frame['algorithm']))
    means = {}
    for row in frame.itertuples(index=False):
        means.setdefault(row.function, {})[row.algorithm] = float(row.mean)
    for function_id, cells in means.items():
        absent = [a for a in algorithms if a not in cells]
        if absent:
            raise SummaryFormatError(f"{function_id}: no mean for {', '.join(absent)}")
        means[function_id] = {a: cells[a] for a in algorithms}
    return means


# ── Ranks ─────────────────────────────────────────────────────────────────────

def write_ranks(path, table):
    algorithms = table.algorithms
    rows = [
        [function_id] + [ranks[a] for a in algorithms]
        for function_id, ranks in table.per_function_ranks.items()
    ]
    rows.append(['rank_sum'] + [table.rank_sums[a] for a in algorithms])
    rows.append(['lex_rank'] + [table.lexicographic_ranks[a] for a in algorithms])
    pd.DataFrame(rows, columns=['function'] + algorithms).to_csv(path, index=False)


# ── Traces / meta ─────────────────────────────────────────────────────────────

def write_trace(path, trace):
    frame = pd.DataFrame(
        {'ffe': [s.ffe for s in trace], 'best_so_far': [s.best_so_far for s in trace]},
        columns=['ffe', 'best_so_far'],
    )
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def write_meta(path, meta):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(meta, f, indent=2, sort_keys=True, default=str)


def ensure_dir(path):
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path
