import argparse
import json
import logging
import sys

from unitarylm.foundation import CacheError, ConfigError, WeylError
from unitarylm.bruhat.order import configure_store
from unitarylm.bruhat.store import ClosureStore
from unitarylm.cli.config import (COMMANDS, FORMATS, SET_KINDS, RunConfig, layered_settings,
                                  parse_vector)
from unitarylm.cli.export import is_reports_payload, render, reports_payload, write_output
from unitarylm.harness.claims import CLAIM_ALIASES, CLAIMS, plan_tasks, run_suite
from unitarylm.harness.report import FAIL
from unitarylm.permissibility.enumeration import (EnumerationResult, enumerate_admissible,
                                                  enumerate_permissible)
from unitarylm.permissibility.hull import DominantCochar
from unitarylm.spin.witness import enumerate_spin_permissible
from unitarylm.weyl.context import LevelStructure

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='INFO with -v, DEBUG with -vv')
    common.add_argument('--config', default=None,
                        help='key = value settings file (default: ./unitarylm.cfg when present)')
    common.add_argument('--cache-dir', dest='cache_dir', default=None,
                        help='directory of the on-disk closure cache')
    common.add_argument('--workers', type=int, default=None, help='size of the verification worker pool')
    common.add_argument('--seed', type=int, default=None, help='seed of every random draw')
    common.add_argument('--no-timing', dest='timing', action='store_const', const=False, default=None,
                        help='omit elapsed_ms from reports')
    common.add_argument('--format', dest='output_format', choices=FORMATS, default='json')
    common.add_argument('--output', default=None, help='output path (default: stdout)')

    group_options = argparse.ArgumentParser(add_help=False)
    group_options.add_argument('--m', type=int, default=None, help='rank m (N for GL)')
    group_options.add_argument('--s', type=int, default=None, help='signature parameter s')
    group_options.add_argument('--I', dest='indices', default=None, help="level I, e.g. '0,1'")
    group_options.add_argument('--mu', default=None, help="cocharacter, e.g. '2,1,0'")

    parser = argparse.ArgumentParser(
        prog='unitarylm',
        description='Admissible, permissible and spin-permissible sets of affine Weyl groups.')
    commands = parser.add_subparsers(dest='command')

    enumerate_parser = commands.add_parser('enumerate', parents=[common, group_options],
                                           help='enumerate one admissible or permissible set')
    enumerate_parser.add_argument('--group', type=str.upper, choices=('GL', 'GSP', 'GU'), default=None)
    enumerate_parser.add_argument('--set', dest='set_kind', choices=SET_KINDS, default=None)
    enumerate_parser.add_argument('--double', action='store_true', help='double cosets W_I\\W/W_I')

    verify_parser = commands.add_parser('verify', parents=[common, group_options],
                                        help='check a claim over its parameter range')
    verify_parser.add_argument('--claim', type=str.lower, choices=CLAIMS + tuple(CLAIM_ALIASES) + ('all',),
                               default=None, metavar='CLAIM', help='{} or all'.format(', '.join(CLAIMS)))
    verify_parser.add_argument('--samples', type=int, default=None,
                               help='random elements drawn by basic-inequalities (default 1000)')

    export_parser = commands.add_parser('export', parents=[common],
                                        help='re-render a JSON result in another format')
    export_parser.add_argument('--input', dest='input_path', default=None)

    commands.add_parser('cache-clear', parents=[common], help='remove every closure cache entry')
    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def config_from_args(args, environ=None):
    """Builds and validates the RunConfig of parsed arguments.

    Raises:
        ConfigError: If the settings or the parameter combination are invalid.
    """
    overrides = {
        'cache_dir': args.cache_dir,
        'workers': args.workers,
        'seed': args.seed,
        'timing': args.timing,
        'samples': getattr(args, 'samples', None)
    }
    settings = layered_settings(args.config, environ, overrides)
    config = RunConfig(
        args.command, settings,
        group=getattr(args, 'group', None),
        m=getattr(args, 'm', None),
        s=getattr(args, 's', None),
        indices=getattr(args, 'indices', None),
        mu=getattr(args, 'mu', None),
        set_kind=getattr(args, 'set_kind', None),
        double=getattr(args, 'double', False),
        claim=getattr(args, 'claim', None),
        output_format=args.output_format,
        output=args.output,
        input_path=getattr(args, 'input_path', None))
    return config.validate()


def run_enumerate(config):
    context = config.group_context()
    if config.indices:
        level = LevelStructure.parse(context, config.indices)
    else:
        level = LevelStructure.iwahori(context)
    kind = config.set_kind
    mu = None
    if kind in ('adm', 'perm-kr'):
        if config.mu is not None:
            mu = DominantCochar.from_vector(context, config.mu)
        else:
            mu = DominantCochar.rs(context, config.s)
    if kind == 'adm':
        elements = enumerate_admissible(context, mu, level, config.double)
    elif kind == 'perm-kr':
        variant = 'kr-gl' if context.kind == 'GL' else 'kr-gsp'
        elements = enumerate_permissible(context, variant, level, mu=mu, double=config.double)
    elif kind == 'spin':
        elements = enumerate_spin_permissible(context, level, config.s, config.double)
    else:
        elements = enumerate_permissible(context, kind, level, s=config.s, double=config.double)
    result = EnumerationResult(context, kind, level, elements, mu=mu, s=config.s, double=config.double)
    logger.info('%s: cardinality %d', kind, result.cardinality)
    return result.as_dict(), EXIT_OK


def run_verify(config):
    settings = config.settings
    indices = parse_vector(config.indices)
    tasks = plan_tasks(config.claim, m=config.m, s=config.s, indices=indices, mu=config.mu,
                       seed=settings['seed'], band=settings['band'], gu_max_rank=settings['gu_max_rank'],
                       gl_max_rank=settings['gl_max_rank'], steinberg_length=settings['steinberg_length'],
                       random_mu_count=settings['random_mu_count'], samples=settings['samples'],
                       timing=settings['timing'])
    logger.info('Running %d task(s) on %d worker(s)', len(tasks), settings['workers'])
    payload = reports_payload(run_suite(tasks, settings['workers']))
    return payload, (EXIT_FAIL if payload['verdict'] == FAIL else EXIT_OK)


def run_export(config):
    """Reads a JSON result and returns it re-validated.

    Raises:
        ConfigError: If the file is not a unitarylm result.
    """
    with open(config.input_path, 'r') as handle:
        try:
            payload = json.load(handle)
        except ValueError as exc:
            raise ConfigError('{} is not JSON: {}'.format(config.input_path, exc), path=config.input_path)
    if is_reports_payload(payload):
        return payload, (EXIT_FAIL if payload.get('verdict') == FAIL else EXIT_OK)
    try:
        result = EnumerationResult.from_dict(payload)
    except (KeyError, TypeError) as exc:
        raise ConfigError('{} is not a unitarylm result: missing {}'.format(config.input_path, exc),
                          path=config.input_path)
    return result.as_dict(), EXIT_OK


def run(config, stream=None):
    """Executes a validated RunConfig.

    Args:
        config (RunConfig): The configuration.
        stream (file): Where output goes when no --output is set. Defaults to stdout.

    Returns:
        integer: The exit status, 0 on success or PASS and 1 on FAIL.

    Raises:
        WeylError: On invalid parameters.
        CacheError: If the closure cache cannot be written.
        OSError: If the input or output path cannot be used.
    """
    stream = stream or sys.stdout
    cache_dir = config.settings['cache_dir']
    if config.command == 'cache-clear':
        removed = ClosureStore(cache_dir).clear()
        write_output('Removed {} cache entr{}\n'.format(removed, 'y' if removed == 1 else 'ies'), stream=stream)
        return EXIT_OK

    configure_store(ClosureStore(cache_dir) if cache_dir else None)
    try:
        if config.command == 'enumerate':
            payload, status = run_enumerate(config)
        elif config.command == 'verify':
            payload, status = run_verify(config)
        else:
            payload, status = run_export(config)
    finally:
        configure_store(None)
    write_output(render(payload, config.output_format), config.output, stream)
    return status


def main(argv=None, environ=None, stream=None):
    """Entry point of the `unitarylm` command. Returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command not in COMMANDS:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return run(config_from_args(args, environ), stream)
    except CacheError as exc:
        logger.error('%s', exc)
        return EXIT_IO
    except WeylError as exc:
        logger.error('%s', exc)
        return EXIT_USAGE
    except OSError as exc:
        logger.error('%s', exc)
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
