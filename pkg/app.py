# app.py: metabench CLI
import argparse
import sys

import sentry_sdk

from config import SENTRY_DSN, VERSION
from commands import COMMANDS


# ── Sentry ────────────────────────────────────────────────────────────────────
def init_monitoring():
    if not SENTRY_DSN:
        return False
    sentry_sdk.init(
        dsn=SENTRY_DSN,
        traces_sample_rate=0.0,
        environment="research",
        release=f"metabench@{VERSION}",
    )
    print("✅ Sentry monitoring enabled!", file=sys.stderr, flush=True)
    return True


# ── CLI ───────────────────────────────────────────────────────────────────────
def build_parser():
    parser = argparse.ArgumentParser(
        prog='metabench',
        description='Benchmark GA, PSO, ABC, TLBO and COA on classical test functions.',
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest='command', required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    init_monitoring()
    return args.handler(args)


# ── Entry point ───────────────────────────────────────────────────────────────
if __name__ == '__main__':
    sys.exit(main())
