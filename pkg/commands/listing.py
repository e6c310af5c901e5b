# commands/listing.py
from config import ALGORITHM_DEFAULTS, ALGORITHMS
from services.benchmarks import FUNCTIONS


def _format_optimum(value):
    return 'variable' if value is None else f"{value:g}"


def list_text():
    lines = [f"Functions ({len(FUNCTIONS)}):"]
    for name, info in FUNCTIONS.items():
        lines.append(
            f"{name}  {info.bounds.label()}  {info.modality}  F*={_format_optimum(info.value)}"
        )

    lines.append("")
    lines.append(f"Algorithms ({len(ALGORITHMS)}):")
    for name in ALGORITHMS:
        params = {k: v for k, v in ALGORITHM_DEFAULTS[name].items() if k != 'stop_on_collapse'}
        pop = params.pop('population_size')
        if params:
            shown = ' '.join(f"{k}={'auto' if v is None else v}" for k, v in params.items())
            lines.append(f"{name}  population_size={pop} {shown}")
        else:
            lines.append(f"{name}  (no tunable parameters)  population_size={pop}")
    return '\n'.join(lines)


def cmd_list(args):
    print(list_text(), flush=True)
    return 0


def register(subparsers):
    parser = subparsers.add_parser('list', help='list benchmark functions and algorithms')
    parser.set_defaults(handler=cmd_list)
