import io
import json
import logging
import os
import tempfile
from unittest.mock import MagicMock, patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase
from kplex.cli import run_cli
from kplex.management.commands.solvekplex import TestableCommand
from kplex.management.commands.utils import (
    EXIT_INVALID_ARGS,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_TIMEOUT)
from kplex.search import FOUND, TIMEOUT, Solution, Stats

K5 = ''.join('{} {}\n'.format(u, v) for u in range(5) for v in range(u + 1, 5))
C5 = '0 1\n1 2\n2 3\n3 4\n4 0\n'


class GraphFileTestCase(TestCase):
    def setUp(self):
        super(GraphFileTestCase, self).setUp()
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write_graph(self, text, name='graph.txt'):
        path = os.path.join(self.directory.name, name)
        with open(path, 'w') as f:
            f.write(text)
        return path


class TestSolveKplexCommand(GraphFileTestCase):
    def test_oracle_on_complete_graph(self):
        out = io.StringIO()
        call_command('solvekplex', '--graph', self.write_graph(K5), '--k', '2',
                     '--mode', 'oracle', stdout=out)
        self.assertEqual('5\n0 1 2 3 4\n', out.getvalue())

    def test_exact_on_complete_graph(self):
        out = io.StringIO()
        call_command('solvekplex', '--graph', self.write_graph(K5), '--k', '2', stdout=out)
        self.assertEqual('5', out.getvalue().splitlines()[0])

    def test_dimacs_labels_are_printed(self):
        out = io.StringIO()
        path = self.write_graph('p edge 4 3\ne 2 3\ne 3 4\ne 2 4\n', 'graph.clq')
        call_command('solvekplex', '--graph', path, '--k', '2', stdout=out)
        self.assertEqual('3\n2 3 4\n', out.getvalue())

    def test_command_raises_error_if_k_is_below_two(self):
        with self.assertRaises(CommandError) as cm:
            call_command('solvekplex', '--graph', self.write_graph(K5), '--k', '1')
        self.assertEqual(EXIT_INVALID_ARGS, cm.exception.returncode)

    def test_command_raises_error_if_file_does_not_exist(self):
        with self.assertRaises(CommandError) as cm:
            call_command('solvekplex', '--graph', 'missing.txt', '--k', '2')
        self.assertEqual(EXIT_INVALID_ARGS, cm.exception.returncode)

    def test_command_raises_error_if_file_is_malformed(self):
        with self.assertRaises(CommandError) as cm:
            call_command('solvekplex', '--graph', self.write_graph('0 1\n1\n'), '--k', '2')
        self.assertEqual(EXIT_PARSE_ERROR, cm.exception.returncode)
        self.assertIn('line 2', str(cm.exception))

    def test_command_raises_error_on_timeout_after_printing(self):
        out = io.StringIO()
        with self.assertRaises(CommandError) as cm:
            call_command('solvekplex', '--graph', self.write_graph(C5), '--k', '2',
                         '--time-limit', '1e-9', stdout=out)
        self.assertEqual(EXIT_TIMEOUT, cm.exception.returncode)
        self.assertEqual('3', out.getvalue().splitlines()[0])

    def test_stats_json_is_written(self):
        stats = os.path.join(self.directory.name, 'stats.json')
        call_command('solvekplex', '--graph', self.write_graph(C5), '--k', '2',
                     '--stats-json', stats, stdout=io.StringIO())
        with open(stats) as f:
            report = json.load(f)
        self.assertEqual(3, report['size'])
        self.assertEqual('found', report['status'])
        self.assertEqual(5, report['n'])

    def test_greedy_only_lower_bound(self):
        stats = os.path.join(self.directory.name, 'stats.json')
        out = io.StringIO()
        call_command('solvekplex', '--graph', self.write_graph(C5), '--k', '2',
                     '--no-heuristic-probes', '--stats-json', stats, stdout=out)
        self.assertEqual('3', out.getvalue().splitlines()[0])
        with open(stats) as f:
            report = json.load(f)
        self.assertFalse(report['heuristic_probes_enabled'])
        self.assertEqual(0, report['heuristic_probes'])

    def test_verify_bounds(self):
        out = io.StringIO()
        call_command('solvekplex', '--graph', self.write_graph(C5), '--k', '3',
                     '--verify-bounds', stdout=out)
        self.assertEqual('5', out.getvalue().splitlines()[0])


class TestTestableCommand(GraphFileTestCase):
    def make_command(self, path, **options):
        values = {'graph': path, 'k': 2, 'mode': 'exact-altrb', 'time_limit': 60}
        values.update(options)
        return TestableCommand(**values)

    def test_quiet_silences_info_logs_and_restores_the_level(self):
        logger = logging.getLogger('kplex')
        previous = logger.level
        levels = []

        def solve(g, cfg):
            levels.append(logger.level)
            return Solution(FOUND, [0], [0], Stats())

        with patch('kplex.management.commands.solvekplex.SolveGraphAction') as action:
            action.solve.side_effect = solve
            self.make_command(self.write_graph(K5), quiet=True).execute(MagicMock())
        self.assertEqual([logging.WARNING], levels)
        self.assertEqual(previous, logger.level)

    @patch('kplex.management.commands.solvekplex.SolveGraphAction')
    def test_timeout_is_reported_with_its_exit_code(self, SolveGraphAction):
        SolveGraphAction.solve.return_value = Solution(TIMEOUT, [0, 1], [0, 1], Stats())
        stdout = MagicMock()
        with self.assertRaises(CommandError) as cm:
            self.make_command(self.write_graph(K5)).execute(stdout)
        self.assertEqual(EXIT_TIMEOUT, cm.exception.returncode)
        stdout.write.assert_any_call('2')
        stdout.write.assert_any_call('0 1')


class TestRunCli(GraphFileTestCase):
    def run_cli(self, *argv):
        with patch('sys.stdout', new_callable=io.StringIO) as stdout, \
                patch('sys.stderr', new_callable=io.StringIO) as stderr:
            code = run_cli(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def test_success(self):
        code, stdout, _ = self.run_cli('--graph', self.write_graph(K5), '--k', '2')
        self.assertEqual(EXIT_OK, code)
        self.assertEqual('5', stdout.splitlines()[0])

    def test_missing_argument(self):
        code, _, stderr = self.run_cli('--k', '2')
        self.assertEqual(EXIT_INVALID_ARGS, code)
        self.assertIn('--graph', stderr)

    def test_invalid_k(self):
        code, _, _ = self.run_cli('--graph', self.write_graph(K5), '--k', '1')
        self.assertEqual(EXIT_INVALID_ARGS, code)

    def test_malformed_file(self):
        code, _, stderr = self.run_cli('--graph', self.write_graph('p edge 2 1\ne 1 3\n'),
                                       '--k', '2')
        self.assertEqual(EXIT_PARSE_ERROR, code)
        self.assertIn('outside 1..2', stderr)

    def test_timeout(self):
        code, stdout, _ = self.run_cli('--graph', self.write_graph(C5), '--k', '2',
                                       '--time-limit', '1e-9')
        self.assertEqual(EXIT_TIMEOUT, code)
        self.assertEqual('3', stdout.splitlines()[0])
