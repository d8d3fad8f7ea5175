import os

from django.conf import settings
from django.core.management.base import CommandError

from kplex.exceptions import InstanceTooLargeError, MalformedLineError
from kplex.formats import GraphFile, parse_graph, parse_lines
from kplex.search import Mode, SolverConfig, solve

EXIT_OK = 0
EXIT_INVALID_ARGS = 2
EXIT_PARSE_ERROR = 3
EXIT_TIMEOUT = 4

DEFAULT_TIME_LIMIT = 3600
DEFAULT_MODE = Mode.EXACT_ALTRB.value


def default_time_limit():
    return getattr(settings, 'KPLEX_TIME_LIMIT', DEFAULT_TIME_LIMIT)


def default_mode():
    return getattr(settings, 'KPLEX_DEFAULT_MODE', DEFAULT_MODE)


class SupportedFileChecker:
    @staticmethod
    def is_valid(path):
        return path is not None and os.path.isfile(path)


class GraphLoader:
    @staticmethod
    def load(path, format=None):
        if not SupportedFileChecker.is_valid(path):
            raise CommandError("Graph file '{}' not found".format(path),
                               returncode=EXIT_INVALID_ARGS)
        try:
            return parse_graph(GraphFile(path, format))
        except MalformedLineError as e:
            raise CommandError('Malformed graph file: {}'.format(e),
                               returncode=EXIT_PARSE_ERROR)

    @staticmethod
    def read(file, format=None):
        try:
            return parse_lines(file, format, file.name)
        except MalformedLineError as e:
            raise CommandError('Malformed graph file: {}'.format(e),
                               returncode=EXIT_PARSE_ERROR)


class ConfigBuilder:
    @staticmethod
    def build(k, mode, time_limit, verify_bounds=False, heuristic_probes=True):
        if mode not in Mode.choices():
            raise CommandError('Invalid mode "{}"'.format(mode),
                               returncode=EXIT_INVALID_ARGS)
        try:
            return SolverConfig(k=k, time_limit=time_limit, mode=mode,
                                verify_bounds=verify_bounds,
                                heuristic_probes=heuristic_probes)
        except ValueError as e:
            raise CommandError('Invalid arguments: {}'.format(e),
                               returncode=EXIT_INVALID_ARGS)


class SolveGraphAction:
    @staticmethod
    def solve(g, cfg):
        try:
            return solve(g, cfg)
        except InstanceTooLargeError as e:
            raise CommandError(str(e), returncode=EXIT_INVALID_ARGS)
