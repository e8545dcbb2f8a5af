import argparse
import logging
import sys
import time
from typing import Optional

from lccc.constants import (
    DEFAULT_SEED,
    EXIT_INPUT_ERROR,
    EXIT_LAW_FAILURE,
    EXIT_LIMIT,
    EXIT_OK,
)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--limit',
        type=int,
        default=None,
        help=(
            'Largest enumeration any construction may attempt. Defaults to the '
            'LCCC_LIMIT environment variable, then 10000'
        ),
    )
    common.add_argument(
        '--seed', type=int, default=DEFAULT_SEED, help='Seed for sampled checks'
    )
    common.add_argument(
        '--format',
        type=str,
        default='text',
        choices=['text', 'structured'],
        help='Report format; structured reports are JSON',
    )
    common.add_argument(
        '--output',
        type=str,
        default=None,
        help='Write the report here instead of stdout',
    )
    common.add_argument(
        '--log-level',
        type=str,
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Logging level; logs go to stderr',
    )
    common.add_argument(
        '--log-file', type=str, default=None, help='Also log to this file'
    )
    common.add_argument(
        '--timing',
        default=False,
        action='store_true',
        help='Append wall time to text reports',
    )
    return common


def get_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='lccc', description='Slice categories of finite sets, computed.'
    )
    subparsers = parser.add_subparsers()

    _pullback_parser = subparsers.add_parser(
        'pullback', parents=[common], help='Pullback of a cospan f, g'
    )
    _pullback_parser.add_argument('file', type=str, help='Diagram file (JSON)')
    _pullback_parser.add_argument('f', type=str, help='Map B → A')
    _pullback_parser.add_argument('g', type=str, help='Map C → A')
    _pullback_parser.set_defaults(which='pullback')

    for which, help_text in (
        ('sigma', 'Dependent sum f_! p of a family p along f'),
        ('pi', 'Dependent product f_* p of a family p along f'),
        ('pull', 'Base change f^* p of a family p over the codomain of f'),
    ):
        _family_parser = subparsers.add_parser(which, parents=[common], help=help_text)
        _family_parser.add_argument('file', type=str, help='Diagram file (JSON)')
        _family_parser.add_argument('f', type=str, help='Map B → A')
        _family_parser.add_argument(
            'p', type=str, help='Family, a map into B (into A for pull)'
        )
        _family_parser.set_defaults(which=which)

    _exp_parser = subparsers.add_parser(
        'exp', parents=[common], help='Exponential Y^X of two sets'
    )
    _exp_parser.add_argument('file', type=str, help='Diagram file (JSON)')
    _exp_parser.add_argument('X', type=str, help='Exponent set')
    _exp_parser.add_argument('Y', type=str, help='Base set')
    _exp_parser.add_argument(
        '--ev', default=False, action='store_true', help='Include the evaluation table'
    )
    _exp_parser.set_defaults(which='exp')

    _adjoint_parser = subparsers.add_parser(
        'adjoint-check',
        parents=[common],
        help='Certify the chain f_! ⊣ f^* ⊣ f_*',
    )
    _adjoint_parser.add_argument('file', type=str, help='Diagram file (JSON)')
    _adjoint_parser.add_argument('f', type=str, help='Map B → A')
    _adjoint_parser.add_argument(
        '--slice-exp',
        default=False,
        action='store_true',
        help=(
            'Also certify (−)×_A B ⊣ (−)^B and its agreement with '
            'f_! f^* ⊣ f_* f^*'
        ),
    )
    _adjoint_parser.add_argument(
        '--max-total',
        type=int,
        default=2,
        help='Largest total of the slice objects checked exhaustively',
    )
    _adjoint_parser.add_argument(
        '--workers', type=int, default=1, help='Threads used for certification'
    )
    _adjoint_parser.set_defaults(which='adjoint-check')

    _eval_parser = subparsers.add_parser(
        'eval', parents=[common], help='Evaluate a DSL program'
    )
    _eval_parser.add_argument('file', type=str, help='DSL source file')
    _eval_parser.set_defaults(which='eval')

    return parser


def _run(args: argparse.Namespace, limit: int) -> dict:
    from lccc import commands

    common = {'limit': limit, 'seed': args.seed}
    if args.which == 'pullback':
        return commands.cmd_pullback(args.file, args.f, args.g, **common)
    if args.which == 'sigma':
        return commands.cmd_sigma(args.file, args.f, args.p, **common)
    if args.which == 'pi':
        return commands.cmd_pi(args.file, args.f, args.p, **common)
    if args.which == 'pull':
        return commands.cmd_pull(args.file, args.f, args.p, **common)
    if args.which == 'exp':
        return commands.cmd_exp(args.file, args.X, args.Y, ev=args.ev, **common)
    if args.which == 'adjoint-check':
        return commands.cmd_adjoint_check(
            args.file,
            args.f,
            slice_exp=args.slice_exp,
            max_total=args.max_total,
            workers=args.workers,
            verbose=args.log_level in ('DEBUG', 'INFO'),
            **common,
        )
    return commands.cmd_eval(args.file, **common)


def main(argv: Optional[list[str]] = None) -> int:
    from lccc.commands import describe_failures
    from lccc.constants import get_default_limit
    from lccc.diagram import write_text
    from lccc.errors import DslError, EnumerationTooLarge, InputError, LCCCError
    from lccc.logger import setup_logging
    from lccc.report import render

    parser = get_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, 'which'):
        parser.print_help()
        return EXIT_INPUT_ERROR

    setup_logging(args.log_file, getattr(logging, args.log_level))
    start = time.perf_counter()
    try:
        limit = args.limit if args.limit is not None else get_default_limit()
        if limit <= 0:
            raise InputError(f'--limit must be positive, got {limit}')
        if args.which == 'adjoint-check':
            if args.workers < 1:
                raise InputError(f'--workers must be at least 1, got {args.workers}')
            if args.max_total < 0:
                raise InputError(
                    f'--max-total must not be negative, got {args.max_total}'
                )
        dump = _run(args, limit)
    except EnumerationTooLarge as e:
        print(f'lccc {args.which}: {e}', file=sys.stderr)
        return EXIT_LIMIT
    except DslError as e:
        print(f'{args.file}: {e}', file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (InputError, LCCCError) as e:
        print(f'lccc {args.which}: {e}', file=sys.stderr)
        return EXIT_INPUT_ERROR
    elapsed = time.perf_counter() - start
    logging.info(f'{args.which} finished in {elapsed:.3f}s')

    text = render(dump, args.format, elapsed if args.timing else None)
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)

    if dump.get('passed', True):
        return EXIT_OK
    for line in describe_failures(dump, limit=5):
        print(line, file=sys.stderr)
    return EXIT_LAW_FAILURE


if __name__ == '__main__':
    sys.exit(main())
