import argparse
import logging
from typing import List, Optional

from .config import load_config
from .driver import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_FAILURE, check_config, run_config
from .exception import ConfigError, ConvexShapeException

_LOGGER = logging.getLogger(__name__)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='convexshape',
                                     description="Shape optimization over convex domains")
    parser.add_argument('-v', '--verbose', action='store_true',
                        help="Log every optimizer iteration")
    commands = parser.add_subparsers(dest='command', required=True)

    run = commands.add_parser('run', help="Run the optimize/refine cycles of a configuration")
    run.add_argument('config', type=str,
                     help="Path to the YAML run configuration")
    run.add_argument('--out', type=str, default=None,
                     help="Output directory (overrides output.directory)")
    run.add_argument('--levels', type=int, default=None,
                     help="Number of optimize/refine cycles (overrides cycles)")
    run.add_argument('--seed', type=int, default=None,
                     help="Seed recorded in the summary and used by the integrand check")

    check = commands.add_parser('check', help="Validate a configuration without running it")
    check.add_argument('config', type=str,
                       help="Path to the YAML run configuration")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)-15s %(levelname)-8s %(message)s')

    try:
        config = load_config(args.config)
        if args.command == 'run':
            config = config.with_overrides(args.out, args.levels, args.seed)
        check_config(config)
    except ConfigError as err:
        _LOGGER.error(f'Invalid configuration: {err}')
        return EXIT_CONFIG_ERROR
    except ConvexShapeException as err:
        _LOGGER.error(f'Invalid configuration: {args.config} -> {err}')
        return EXIT_CONFIG_ERROR

    if args.command == 'check':
        return EXIT_OK

    try:
        return run_config(config)
    except ConvexShapeException:
        _LOGGER.exception('Run failed')
        return EXIT_RUNTIME_FAILURE
