from django.core.management.base import BaseCommand, CommandError
import logging
import time

from .utils import (
    EXIT_TIMEOUT,
    ConfigBuilder,
    GraphLoader,
    SolveGraphAction,
    default_mode,
    default_time_limit)
from kplex.formats import FORMATS
from kplex.report import RunReport
from kplex.search import TIMEOUT, Mode


class Command(BaseCommand):
    help = 'Find a maximum k-plex of one graph file'

    def add_arguments(self, parser):
        # Mandatory
        parser.add_argument(
            '--graph',
            required=True,
            help='The graph file, as an edge list or in DIMACS format')
        parser.add_argument(
            '--k',
            type=int,
            required=True,
            help='Every vertex of the k-plex may miss at most k of its '
                 'members, itself included. Must be at least 2')

        # Optional
        parser.add_argument(
            '--mode',
            default=default_mode(),
            choices=Mode.choices(),
            help='The solver to run. Default: KPLEX_DEFAULT_MODE or '
                 'exact-altrb')
        parser.add_argument(
            '--time-limit',
            type=float,
            default=default_time_limit(),
            help='Seconds before the search gives up and reports the best '
                 'k-plex found. Default: KPLEX_TIME_LIMIT or 3600')
        parser.add_argument(
            '--stats-json',
            default=None,
            help='Write a JSON report of the run to this file')
        parser.add_argument(
            '--format',
            default=None,
            choices=FORMATS,
            help='The graph file format. Default: detected from the file')
        parser.add_argument(
            '--verify-bounds',
            action='store_true',
            help='Check every branch bound against the sequential bound')
        parser.add_argument(
            '--no-heuristic-probes',
            dest='heuristic_probes',
            action='store_false',
            help='Seed the lower bound with the whole-graph greedy pass only')
        parser.add_argument(
            '--quiet',
            action='store_true',
            help='Only print the size and the witness')

    def handle(self, *args, **options):
        TestableCommand(**options).execute(self.stdout)


class TestableCommand:
    def __init__(self, **options):
        self.path = options['graph']
        self.k = options['k']
        self.mode = options['mode']
        self.time_limit = options['time_limit']
        self.stats_json = options.get('stats_json')
        self.format = options.get('format')
        self.verify_bounds = options.get('verify_bounds', False)
        self.heuristic_probes = options.get('heuristic_probes', True)
        self.quiet = options.get('quiet', False)

    def execute(self, stdout):
        logger = logging.getLogger('kplex')
        level = logger.level
        if self.quiet:
            logger.setLevel(logging.WARNING)
        try:
            return self.run(stdout)
        finally:
            logger.setLevel(level)

    def run(self, stdout):
        start = time.perf_counter()
        cfg = ConfigBuilder.build(self.k, self.mode, self.time_limit,
                                  self.verify_bounds, self.heuristic_probes)
        g = GraphLoader.load(self.path, self.format)
        solution = SolveGraphAction.solve(g, cfg)
        wall_time = time.perf_counter() - start

        stdout.write(str(solution.size))
        stdout.write(' '.join(str(label) for label in solution.labels))

        if self.stats_json:
            RunReport.build(g, cfg, solution, wall_time,
                            source=self.path).write(self.stats_json)

        if solution.status == TIMEOUT:
            raise CommandError(
                'Time limit of {}s exceeded; the k-plex printed is the best '
                'found'.format(cfg.time_limit),
                returncode=EXIT_TIMEOUT)
        return solution
