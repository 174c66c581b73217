"""Command-line interface for meander-py."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Initialize colorama for Windows ANSI support
try:
    import colorama
    colorama.just_fix_windows_console()
    from colorama import Fore, Style
    COLORAMA_AVAILABLE = True
except ImportError:
    COLORAMA_AVAILABLE = False

from .composition import SeaweedPair, parse_pair, render_pair
from .config import Config
from .enumeration import (
    OutputFormat, Predicate, SweepSpec, run_sweep, verify_families, write_rows,
)
from .errors import CompositionError, MeanderError, OracleError, TheoremViolation
from .highlighter import SyntaxHighlighter
from .index import (
    FamilyKind, classify_family, closed_form_frobenius, dk_index, necessary_conditions,
)
from .meander import build_meander, component_census
from .oracle import (
    build_rmatrix, cybe_residual, frobenius_functional, functional_to_dict,
    oracle_index, seaweed_shape,
)
from .permutation import bottom_map, format_cycles, meander_permutation, top_map
from .renderer import MeanderRenderer
from .utils import format_bool, is_terminal

logger = logging.getLogger("meander_py")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class LevelFormatter(logging.Formatter):
    """`LEVEL: message`, with the level colored on terminals."""

    COLORS = {
        "DEBUG": "CYAN",
        "INFO": "GREEN",
        "WARNING": "YELLOW",
        "ERROR": "RED",
        "CRITICAL": "RED",
    }

    def __init__(self, use_color: bool):
        super().__init__()
        self.use_color = use_color and COLORAMA_AVAILABLE

    def format(self, record: logging.LogRecord) -> str:
        level = record.levelname
        if self.use_color:
            color = getattr(Fore, self.COLORS.get(level, "WHITE"))
            level = f"{color}{level}{Style.RESET_ALL}"
        return f"{level}: {record.getMessage()}"


def setup_logging(verbose: int) -> None:
    """One stderr handler on the package logger."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(LevelFormatter(is_terminal(sys.stderr)))
    logger.handlers[:] = [handler]
    logger.setLevel(level)


def _pair(args) -> SeaweedPair:
    return parse_pair(args.pair)


def cmd_index(args, config: Config) -> int:
    report = dk_index(_pair(args))
    if args.json:
        print(json.dumps(report.to_dict()))
        return EXIT_OK
    print(f"pair={render_pair(report.pair)} components={report.components} "
          f"cycles={report.cycles} index_sl={report.index_sl} "
          f"frobenius={format_bool(report.frobenius)}")
    return EXIT_OK


def cmd_perm(args, config: Config) -> int:
    pair = _pair(args)
    modified = build_meander(pair, modified=True)
    perm = meander_permutation(pair)
    vertices = range(1, pair.n + 1)
    print(f"sigma={format_cycles(perm, verbose=args.verbose_cycles)}")
    print("t=" + ",".join(str(top_map(modified, i)) for i in vertices))
    print("b=" + ",".join(str(bottom_map(modified, i)) for i in vertices))
    print(f"n_cycle={format_bool(len(perm.cycle_decomposition) == 1)}")
    return EXIT_OK


def cmd_frobenius(args, config: Config) -> int:
    pair = _pair(args)
    report = dk_index(pair)
    tag = classify_family(pair)
    violations = necessary_conditions(pair)
    census = component_census(build_meander(pair))
    print(f"frobenius={format_bool(report.frobenius)} index_sl={report.index_sl}")
    print(f"family={tag} closed_form={format_bool(closed_form_frobenius(tag))}")
    if violations:
        print("necessary=" + "; ".join(str(v) for v in violations))
    else:
        print("necessary=ok")
    for path in census.paths:
        print("path=" + ",".join(str(v) for v in path))
    return EXIT_OK


def cmd_shape(args, config: Config) -> int:
    shape = seaweed_shape(_pair(args))
    print(shape.picture())
    print(f"dim_gl={shape.dim_gl} dim_sl={shape.dim_sl}")
    return EXIT_OK


def cmd_oracle(args, config: Config) -> int:
    pair = _pair(args)
    result = oracle_index(
        pair,
        trials=config.get("oracle.trials"),
        prime=config.get("oracle.prime"),
        seed=config.get("oracle.seed"),
        basis=config.get("oracle.basis"),
        workers=config.get("oracle.workers"),
    )
    meander = dk_index(pair).index_sl
    agree = meander == result.index_sl
    print(f"index_gl={result.index_gl} index_sl={result.index_sl} rank={result.rank} "
          f"dim={result.dim} basis={result.basis} meander_index_sl={meander} "
          f"agree={format_bool(agree)}")
    if not agree:
        logger.error("oracle disagrees with the meander on %s", render_pair(pair))
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_rmatrix(args, config: Config) -> int:
    pair = _pair(args)
    prime = config.get("oracle.prime")
    functional = frobenius_functional(
        pair, attempts=config.get("oracle.attempts"), prime=prime, seed=config.get("oracle.seed")
    )
    if functional is None:
        report = dk_index(pair)
        if report.frobenius:
            logger.error("no Frobenius functional found for %s; retry with more --attempts "
                         "or another --seed", render_pair(pair))
            return EXIT_VIOLATION
        print(f"not Frobenius: index_sl={report.index_sl}")
        return EXIT_OK

    r = build_rmatrix(pair, functional, prime)
    document = {"functional": functional_to_dict(functional), "rmatrix": r.to_dict()}
    if pair.n <= config.get("oracle.max_cybe_n"):
        document["cybe_residual"] = cybe_residual(r, seaweed_shape(pair))
    else:
        logger.warning("skipping CYBE check: n=%d exceeds oracle.max_cybe_n", pair.n)
    print(json.dumps(document, indent=2))
    return EXIT_OK if document.get("cybe_residual", 0) == 0 else EXIT_VIOLATION


def cmd_sweep(args, config: Config) -> int:
    n_min = args.n if args.n is not None else args.n_min
    n_max = args.n if args.n is not None else args.n_max
    if n_min is None or n_max is None:
        print("Error: sweep needs --n or both --n-min and --n-max", file=sys.stderr)
        return EXIT_USAGE
    spec = SweepSpec(
        n_min=n_min,
        n_max=n_max,
        shape=FamilyKind(args.shape) if args.shape else None,
        predicate=Predicate(args.predicate),
        output=OutputFormat(config.get("sweep.format")),
        workers=config.get("sweep.workers"),
    )
    result = run_sweep(spec)
    write_rows(result, spec.output, sys.stdout)
    return EXIT_OK


def cmd_render(args, config: Config) -> int:
    fmt = config.get("render.format")
    renderer = MeanderRenderer(config)
    document = renderer.render_pair(_pair(args), fmt, modified=args.modified)
    if args.output:
        Path(args.output).write_text(document, encoding="utf-8")
        return EXIT_OK
    color = config.get("output.color", "auto")
    enabled = color == "always" or (color == "auto" and is_terminal(sys.stdout))
    highlighter = SyntaxHighlighter(enabled=enabled, style=config.get("output.style", "monokai"))
    sys.stdout.write(highlighter.highlight_document(document, fmt))
    return EXIT_OK


def cmd_verify_families(args, config: Config) -> int:
    if args.max_n < 2:
        print("Error: --max-n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    counts = verify_families(args.max_n)
    for kind, count in counts.items():
        print(f"{kind.value}: {count} pairs OK")
    print("OK")
    return EXIT_OK


def cmd_config(args, config: Config) -> int:
    if args.create:
        path = config.create_default_config()
        if path is None:
            return EXIT_VIOLATION
        print(f"Created default config at: {path}")
        return EXIT_OK
    sys.stdout.write(config.dump())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meander-py",
        description="meander-py: index and Frobenius classification of seaweed subalgebras of sl(n)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  meander-py index "5,2,2|2,4,3"          DK index from the meander
  meander-py perm "5,2,2|2,4,3"           Meander permutation in cycle notation
  meander-py oracle "3,2,2|2,5" --trials 5
  meander-py render "5,2,2|2,4,3" --modified --format tikz
  meander-py sweep --n 6 --format csv
  meander-py verify-families --max-n 12
        """
    )
    parser.add_argument('-c', '--config', type=str, help='Path to config file')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More diagnostics on stderr (-vv for debug)')
    parser.add_argument('--version', action='store_true', help='Show version and exit')

    sub = parser.add_subparsers(dest='command')

    def pair_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.add_argument('pair', help='Composition pair, e.g. "5,2,2|2,4,3"')
        command.set_defaults(handler=handler)
        return command

    index = pair_command('index', cmd_index, 'Dergachev-Kirillov index')
    index.add_argument('--json', action='store_true', help='Print the report as JSON')

    perm = pair_command('perm', cmd_perm, 'Meander permutation t o b')
    perm.add_argument('--verbose-cycles', action='store_true', help='Print fixed points as (k)')

    pair_command('frobenius', cmd_frobenius, 'Frobenius verdict, family and necessary conditions')
    pair_command('shape', cmd_shape, 'Matrix shape of the seaweed')

    oracle = pair_command('oracle', cmd_oracle, 'Index from the rank of the Kirillov form')
    oracle.add_argument('--prime', type=int, help='Prime modulus (below 2^31)')
    oracle.add_argument('--trials', type=int, help='Random functionals to try')
    oracle.add_argument('--seed', type=int, help='Root seed')
    oracle.add_argument('--basis', choices=['gl', 'sl'], help='Realization to compute in')
    oracle.add_argument('--workers', type=int, help='Processes for the trials')

    rmatrix = pair_command('rmatrix', cmd_rmatrix, 'Frobenius functional, r-matrix and CYBE residual')
    rmatrix.add_argument('--prime', type=int, help='Prime modulus (below 2^31)')
    rmatrix.add_argument('--attempts', type=int, help='Random functionals to try')
    rmatrix.add_argument('--seed', type=int, help='Root seed')

    render = pair_command('render', cmd_render, 'DOT or TikZ drawing of the meander')
    render.add_argument('--format', choices=MeanderRenderer.FORMATS, help='Output format')
    render.add_argument('--modified', action='store_true', help='Add loops at odd block middles')
    render.add_argument('-o', '--output', type=str, help='Write to a file instead of stdout')

    sweep = sub.add_parser('sweep', help='Exhaustive sweep over composition pairs')
    sweep.add_argument('--n', type=int, help='Single n to sweep')
    sweep.add_argument('--n-min', type=int, help='Smallest n')
    sweep.add_argument('--n-max', type=int, help='Largest n')
    sweep.add_argument('--shape', choices=[k.value for k in FamilyKind], help='Family shape filter')
    sweep.add_argument('--predicate', choices=[p.value for p in Predicate], default='all')
    sweep.add_argument('--format', choices=[f.value for f in OutputFormat], help='Output format')
    sweep.add_argument('--workers', type=int, help='Processes for the sweep')
    sweep.set_defaults(handler=cmd_sweep)

    verify = sub.add_parser('verify-families', help='Check the gcd theorems and Panyushev families')
    verify.add_argument('--max-n', type=int, default=12, help='Largest n to check')
    verify.set_defaults(handler=cmd_verify_families)

    config = sub.add_parser('config', help='Show or create the config file')
    config.add_argument('--create', action='store_true', help='Write the default config file')
    config.add_argument('--show', action='store_true', help='Print the merged configuration (default)')
    config.set_defaults(handler=cmd_config)

    return parser


def apply_overrides(args, config: Config) -> None:
    """Command-line flags take precedence over config values."""
    command = args.command
    if command in ('oracle', 'rmatrix'):
        config.override('oracle.prime', args.prime)
        config.override('oracle.seed', args.seed)
    if command == 'oracle':
        config.override('oracle.trials', args.trials)
        config.override('oracle.basis', args.basis)
        config.override('oracle.workers', args.workers)
    if command == 'rmatrix':
        config.override('oracle.attempts', args.attempts)
    if command == 'sweep':
        config.override('sweep.format', args.format)
        config.override('sweep.workers', args.workers)
    if command == 'render':
        config.override('render.format', args.format)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for meander-py CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    if args.version:
        from . import __version__
        print(f"meander-py version {__version__}")
        return EXIT_OK

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    config = Config(Path(args.config) if args.config else None)
    apply_overrides(args, config)

    try:
        return args.handler(args, config)
    except CompositionError as e:
        print(f"Error: {e.message}", file=sys.stderr)
        if e.text:
            print(e.caret(), file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as e:
        print(f"Theorem violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except OracleError as e:
        print(f"Oracle error: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except MeanderError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        return EXIT_VIOLATION
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_VIOLATION


if __name__ == '__main__':
    sys.exit(main())
