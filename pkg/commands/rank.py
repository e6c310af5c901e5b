# commands/rank.py
import sys
from pathlib import Path

from services.analysis import RankingError, build_rank_table
from storage import SummaryFormatError, ensure_dir, means_from_summary, read_summary, write_ranks


def cmd_rank(args):
    summary_path = Path(args.summary)
    out_dir      = Path(args.out) if args.out else summary_path.parent

    try:
        frame = read_summary(summary_path)
        table = build_rank_table(means_from_summary(frame))
    except (SummaryFormatError, RankingError) as e:
        print(f"❌ {e}", file=sys.stderr, flush=True)
        return 2

    ranks_path = ensure_dir(out_dir) / 'ranks.csv'
    write_ranks(ranks_path, table)

    for algorithm in table.algorithms:
        print(f"{algorithm}  rank_sum={table.rank_sums[algorithm]}  "
              f"lex_rank={table.lexicographic_ranks[algorithm]}", flush=True)
    print(f"✅ Ranks written to {ranks_path}", flush=True)
    return 0


def register(subparsers):
    parser = subparsers.add_parser('rank', help='rank algorithms from an existing summary.csv')
    parser.add_argument('summary', help='path to summary.csv')
    parser.add_argument('--out', help='directory for ranks.csv (default: next to the summary)')
    parser.set_defaults(handler=cmd_rank)
