from django.core.management.base import BaseCommand
import argparse
import json
import time

from .utils import (
    ConfigBuilder,
    GraphLoader,
    SolveGraphAction,
    default_time_limit)
from kplex.formats import FORMATS
from kplex.logging import get_logger
from kplex.report import GraphSummary, RunReport
from kplex.search import TIMEOUT, Mode

logger = get_logger(__name__)

DEFAULT_MODES = [Mode.EXACT_ALTRB.value, Mode.EXACT_SEQRB.value]
REFERENCE_MEAN_R = 1.13


class Command(BaseCommand):
    help = 'Solve a list of graph files with one or more solvers'

    def add_arguments(self, parser):
        # Mandatory
        parser.add_argument('files', type=argparse.FileType('r'), nargs='+')
        parser.add_argument(
            '--k',
            type=int,
            required=True,
            help='The k of the k-plex, at least 2')
        # Optional
        parser.add_argument(
            '--modes',
            nargs='+',
            default=DEFAULT_MODES,
            choices=Mode.choices(),
            help='The solvers to run on every file. '
                 'Default: exact-altrb exact-seqrb')
        parser.add_argument(
            '--time-limit',
            type=float,
            default=default_time_limit(),
            help='Seconds allowed per solve. Default: KPLEX_TIME_LIMIT or 3600')
        parser.add_argument(
            '--format',
            default=None,
            choices=FORMATS,
            help='The format of all files. Default: detected per file')
        parser.add_argument(
            '--no-heuristic-probes',
            dest='heuristic_probes',
            action='store_false',
            help='Seed the lower bound with the whole-graph greedy pass only')
        parser.add_argument(
            '--output',
            default=None,
            help='Write the JSON list of all reports to this file')

    def handle(self, *args, **options):
        reports = TestableCommand(**options).execute()
        for report in reports:
            self.stdout.write('{} {} {} {} {:.1f}'.format(
                report['source'], report['mode'], report['status'],
                report['size'], report['t_total_ms']))


class TestableCommand:
    def __init__(self, **options):
        self.files = options['files']
        self.k = options['k']
        self.modes = options['modes']
        self.time_limit = options['time_limit']
        self.format = options.get('format')
        self.output = options.get('output')
        self.heuristic_probes = options.get('heuristic_probes', True)

    def execute(self):
        configs = [ConfigBuilder.build(self.k, mode, self.time_limit,
                                       heuristic_probes=self.heuristic_probes)
                   for mode in self.modes]
        reports = []
        for f in self.files:
            reports.extend(self.solve_file(f, configs))

        MeanRoundsSummary(reports).log()
        if self.output:
            with open(self.output, 'w') as out:
                json.dump([r.as_dict() for r in reports], out,
                          sort_keys=True, indent=2)
        return reports

    def solve_file(self, f, configs):
        start = time.perf_counter()
        g = GraphLoader.read(f, self.format)
        load_time = time.perf_counter() - start
        summary = GraphSummary.of(g)

        reports = []
        for cfg in configs:
            start = time.perf_counter()
            solution = SolveGraphAction.solve(g, cfg)
            wall_time = load_time + time.perf_counter() - start
            reports.append(RunReport.build(g, cfg, solution, wall_time,
                                           source=f.name, summary=summary))

        ModeComparison(f.name, reports).log()
        return reports


class ModeComparison:
    """Checks that the modes that finished on one graph agree."""

    def __init__(self, name, reports):
        self.name = name
        self.reports = reports

    def completed(self):
        return [r for r in self.reports if r['status'] != TIMEOUT]

    def agree(self):
        return len({r['size'] for r in self.completed()}) <= 1

    def time_ratio(self):
        times = {r['mode']: r['t_total_ms'] for r in self.completed()}
        altrb = times.get(Mode.EXACT_ALTRB.value)
        seqrb = times.get(Mode.EXACT_SEQRB.value)
        if not altrb or seqrb is None:
            return None
        return seqrb / altrb

    def log(self):
        if not self.agree():
            logger.warning('{}: modes disagree on the optimum: {}', self.name, ', '.join(
                '{}={}'.format(r['mode'], r['size']) for r in self.completed()))
        ratio = self.time_ratio()
        if ratio is not None:
            logger.info('{}: exact-seqrb / exact-altrb time ratio {:.2f}', self.name, ratio)


class MeanRoundsSummary:
    """The mean number of AltRB rounds per call over every AltRB run."""

    def __init__(self, reports):
        self.reports = [r for r in reports if r['mode'] == Mode.EXACT_ALTRB.value]

    def mean_r(self):
        calls = sum(r['rb_calls'] for r in self.reports)
        if not calls:
            return None
        return sum(r['rb_rounds'] for r in self.reports) / calls

    def log(self):
        mean_r = self.mean_r()
        if mean_r is not None:
            logger.info('Mean AltRB rounds per call over {} runs: {:.3f} (reference value {})',
                        len(self.reports), mean_r, REFERENCE_MEAN_R)
