# commands/run.py
import json
import sys
from datetime import datetime
from pathlib import Path

import sentry_sdk
from marshmallow import RAISE, Schema, ValidationError, fields, validate

from config import (
    ALGORITHMS, DEFAULT_JOBS, OUTPUT_DIR, SENTRY_DSN, TIMEZONE, VARIANTS, VERSION,
    default_base_seed,
)
from services.analysis import rank_summaries
from services.benchmarks import FUNCTIONS
from services.core import ConfigurationError
from services.harness import ExperimentPlan, RunFailure, run_experiment
from services.optimizers import config_to_dict
from storage import (
    ensure_dir, summary_frame, write_meta, write_ranks, write_summary, write_trace,
)


# ── Schemas ───────────────────────────────────────────────────────────────────

class _Strict(Schema):
    class Meta:
        unknown = RAISE


unit = validate.Range(min=0.0, max=1.0)


class GAParamsSchema(_Strict):
    population_size  = fields.Int(validate=validate.Range(min=2))
    mutation_coeff   = fields.Float(validate=unit)
    crossover_coeff  = fields.Float(validate=unit)
    selection        = fields.Str(validate=validate.OneOf(['rank']))
    crossover        = fields.Str(validate=validate.OneOf(['one_point']))
    stop_on_collapse = fields.Bool()


class PSOParamsSchema(_Strict):
    population_size  = fields.Int(validate=validate.Range(min=2))
    c1               = fields.Float()
    c2               = fields.Float()
    inertia          = fields.Float()
    phi_draw         = fields.Str(validate=validate.OneOf(['signed', 'unit']))
    stop_on_collapse = fields.Bool()


class ABCParamsSchema(_Strict):
    population_size  = fields.Int(validate=validate.Range(min=4))
    global_coeff     = fields.Float()
    local_coeff      = fields.Float()
    limit            = fields.Int(allow_none=True, validate=validate.Range(min=1))
    stop_on_collapse = fields.Bool()


class TLBOParamsSchema(_Strict):
    population_size  = fields.Int(validate=validate.Range(min=2))
    stop_on_collapse = fields.Bool()


class COAParamsSchema(_Strict):
    population_size   = fields.Int(validate=validate.Range(min=2))
    elr_coeff         = fields.Float(validate=validate.Range(min=0.0, min_inclusive=False))
    migration_scale   = fields.Float()
    clusters          = fields.Int(validate=validate.OneOf([1]))
    egg_min           = fields.Int(validate=validate.Range(min=1))
    egg_max           = fields.Int(validate=validate.Range(min=1))
    egg_kill_epsilon  = fields.Float(validate=validate.Range(min=0.0))
    egg_kill_fraction = fields.Float(validate=unit)
    stop_on_collapse  = fields.Bool()


class ParametersSchema(_Strict):
    ga   = fields.Nested(GAParamsSchema)
    pso  = fields.Nested(PSOParamsSchema)
    abc  = fields.Nested(ABCParamsSchema)
    tlbo = fields.Nested(TLBOParamsSchema)
    coa  = fields.Nested(COAParamsSchema)


class CliConfigSchema(_Strict):
    functions      = fields.List(fields.Str(), validate=validate.Length(min=1))
    algorithms     = fields.List(fields.Str(), validate=validate.Length(min=1))
    dimension      = fields.Int(validate=validate.Range(min=1))
    runs           = fields.Int(validate=validate.Range(min=1))
    budget_per_dim = fields.Int(validate=validate.Range(min=1))
    variant        = fields.Str(validate=validate.OneOf(VARIANTS))
    base_seed      = fields.Int()
    trace_stride   = fields.Int(allow_none=True, validate=validate.Range(min=1))
    jobs           = fields.Int()
    out            = fields.Str()
    parameters     = fields.Nested(ParametersSchema)


# ── Config çözümleme ──────────────────────────────────────────────────────────

def _split(value):
    return [item.strip() for item in value.split(',') if item.strip()]


FLAG_KEYS = {
    'functions':      ('functions', _split),
    'algos':          ('algorithms', _split),
    'dim':            ('dimension', None),
    'runs':           ('runs', None),
    'seed':           ('base_seed', None),
    'variant':        ('variant', None),
    'out':            ('out', None),
    'jobs':           ('jobs', None),
    'trace_stride':   ('trace_stride', None),
    'budget_per_dim': ('budget_per_dim', None),
}


def load_config_file(path):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except OSError as e:
        raise ConfigurationError(f"cannot read config {path}: {e}")
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"config {path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ConfigurationError(f"config {path} must hold a JSON object")
    return data


def resolve_settings(args):
    """Config file first, then command-line flags on top; validated as one document."""
    raw = load_config_file(args.config) if args.config else {}
    for flag, (key, convert) in FLAG_KEYS.items():
        value = getattr(args, flag, None)
        if value is not None:
            raw[key] = convert(value) if convert else value
    return CliConfigSchema().load(raw)


def build_plan(settings):
    plan = ExperimentPlan(
        function_ids=settings.get('functions', list(FUNCTIONS)),
        algorithms=settings.get('algorithms', list(ALGORITHMS)),
        base_seed=settings.get('base_seed', default_base_seed()),
        parameters=settings.get('parameters', {}),
    )
    for key in ('dimension', 'runs', 'budget_per_dim', 'variant', 'trace_stride'):
        if key in settings:
            setattr(plan, key, settings[key])
    return plan


# ── Çıktılar ──────────────────────────────────────────────────────────────────

def write_outputs(out_dir, plan, configs, summaries, started_at, jobs):
    out_dir    = ensure_dir(out_dir)
    traces_dir = ensure_dir(out_dir / 'traces')

    write_summary(out_dir / 'summary.csv', summary_frame(summaries, plan))
    write_ranks(out_dir / 'ranks.csv', rank_summaries(summaries))

    for cell in summaries:
        for run_index, record in enumerate(cell.runs):
            name = f"{cell.function_id}_{cell.algorithm}_{run_index}.csv"
            write_trace(traces_dir / name, record.trace)

    meta = {
        'version':     VERSION,
        'started_at':  started_at.isoformat(),
        'finished_at': datetime.now(TIMEZONE).isoformat(),
        'jobs':        jobs,
        'plan': {
            'functions':      plan.function_ids,
            'algorithms':     plan.algorithms,
            'dimension':      plan.dimension,
            'runs':           plan.runs,
            'budget_per_dim': plan.budget_per_dim,
            'max_ffe':        plan.max_ffe,
            'variant':        plan.variant,
            'base_seed':      plan.base_seed,
            'trace_stride':   plan.trace_stride,
        },
        'parameters': {name: config_to_dict(c) for name, c in configs.items()},
        'cells': {
            f"{cell.function_id}/{cell.algorithm}": {
                'seeds':            cell.seeds,
                'transforms':       cell.fingerprints,
                'ffe_used':         [r.ffe_used for r in cell.runs],
                'terminated_early': [r.terminated_early for r in cell.runs],
            }
            for cell in summaries
        },
    }
    write_meta(out_dir / 'run_meta.json', meta)


# ── Komut ─────────────────────────────────────────────────────────────────────

def cmd_run(args):
    try:
        settings = resolve_settings(args)
        plan     = build_plan(settings)
        configs  = plan.validate()
    except ValidationError as err:
        print(f"❌ Configuration error: {err.messages}", file=sys.stderr, flush=True)
        return 2
    except ValueError as err:
        print(f"❌ Configuration error: {err}", file=sys.stderr, flush=True)
        return 2

    out_dir = Path(settings.get('out', OUTPUT_DIR))
    jobs    = settings.get('jobs', DEFAULT_JOBS)
    cells   = len(plan.function_ids) * len(plan.algorithms)
    print(f"🔬 {cells} cell(s) × {plan.runs} run(s), D={plan.dimension}, "
          f"{plan.max_ffe} FFE, variant={plan.variant}, seed={plan.base_seed}", flush=True)

    started_at = datetime.now(TIMEZONE)
    try:
        summaries = run_experiment(plan, jobs=jobs)
    except RunFailure as e:
        print(f"❌ {e}", file=sys.stderr, flush=True)
        if SENTRY_DSN:
            sentry_sdk.set_tag('cell', e.cell)
            sentry_sdk.capture_exception(e)
        return 1

    for cell in summaries:
        early = sum(r.terminated_early for r in cell.runs)
        note  = f" ({early} early stop)" if early else ""
        print(f"✅ {cell.function_id}/{cell.algorithm}: mean={cell.mean:.6e} sd={cell.sd:.6e}{note}",
              flush=True)

    try:
        write_outputs(out_dir, plan, configs, summaries, started_at, jobs)
    except OSError as e:
        print(f"❌ Cannot write results to {out_dir}: {e}", file=sys.stderr, flush=True)
        if SENTRY_DSN:
            sentry_sdk.capture_exception(e)
        return 1

    print(f"✅ Results written to {out_dir}", flush=True)
    return 0


def register(subparsers):
    parser = subparsers.add_parser('run', help='run a replicated experiment')
    parser.add_argument('config', nargs='?', help='JSON experiment config')
    parser.add_argument('--functions', help='comma-separated function names')
    parser.add_argument('--algos', help='comma-separated algorithm names')
    parser.add_argument('--dim', type=int)
    parser.add_argument('--runs', type=int)
    parser.add_argument('--seed', type=lambda s: int(s, 0))
    parser.add_argument('--variant', choices=VARIANTS)
    parser.add_argument('--out')
    parser.add_argument('--jobs', type=int, help='worker processes (-1 = all cores)')
    parser.add_argument('--trace-stride', dest='trace_stride', type=int)
    parser.add_argument('--budget-per-dim', dest='budget_per_dim', type=int)
    parser.set_defaults(handler=cmd_run)
