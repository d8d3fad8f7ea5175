import io
import tempfile
from unittest.mock import MagicMock, patch

from django.conf import settings
from django.core.management.base import CommandError
from django.test import TestCase, override_settings
from kplex.exceptions import InstanceTooLargeError
from kplex.management.commands.utils import (
    DEFAULT_MODE,
    EXIT_INVALID_ARGS,
    EXIT_PARSE_ERROR,
    ConfigBuilder,
    GraphLoader,
    SolveGraphAction,
    SupportedFileChecker,
    default_mode,
    default_time_limit)
from kplex.search import Mode


class TestDefaults(TestCase):
    def test_time_limit_comes_from_settings(self):
        with override_settings(KPLEX_TIME_LIMIT=5):
            self.assertEqual(5, default_time_limit())

    @override_settings()
    def test_time_limit_falls_back_to_an_hour(self):
        del settings.KPLEX_TIME_LIMIT
        self.assertEqual(3600, default_time_limit())

    def test_mode_defaults_to_exact_altrb(self):
        self.assertEqual(DEFAULT_MODE, default_mode())
        self.assertEqual('exact-altrb', DEFAULT_MODE)

    @override_settings(KPLEX_DEFAULT_MODE='exact-seqrb')
    def test_mode_comes_from_settings(self):
        self.assertEqual('exact-seqrb', default_mode())


class TestSupportedFileChecker(TestCase):
    def test_it_thinks_none_file_is_not_valid(self):
        self.assertFalse(SupportedFileChecker.is_valid(None))

    def test_it_thinks_missing_file_is_not_valid(self):
        self.assertFalse(SupportedFileChecker.is_valid('does/not/exist.clq'))

    def test_it_thinks_existing_file_is_valid(self):
        with tempfile.NamedTemporaryFile() as f:
            self.assertTrue(SupportedFileChecker.is_valid(f.name))


class TestGraphLoader(TestCase):
    def test_load_raises_error_if_file_does_not_exist(self):
        with self.assertRaises(CommandError) as cm:
            GraphLoader.load('does/not/exist.clq')
        self.assertEqual(EXIT_INVALID_ARGS, cm.exception.returncode)

    def test_load_raises_error_if_file_is_malformed(self):
        with tempfile.NamedTemporaryFile(mode='w') as f:
            f.write('p edge 2 1\ne 1\n')
            f.flush()
            with self.assertRaises(CommandError) as cm:
                GraphLoader.load(f.name)
        self.assertEqual(EXIT_PARSE_ERROR, cm.exception.returncode)

    def test_load_uses_the_given_format(self):
        with tempfile.NamedTemporaryFile(mode='w') as f:
            f.write('1 2\n2 3\n')
            f.flush()
            self.assertEqual(2, GraphLoader.load(f.name, 'edge-list').m)

    def test_read_an_open_file(self):
        file = io.StringIO('0 1\n1 2\n')
        file.name = 'graph.txt'
        self.assertEqual(3, GraphLoader.read(file).n)

    def test_read_raises_error_if_file_is_malformed(self):
        file = io.StringIO('0 x\n')
        file.name = 'graph.txt'
        with self.assertRaises(CommandError) as cm:
            GraphLoader.read(file)
        self.assertEqual(EXIT_PARSE_ERROR, cm.exception.returncode)


class TestConfigBuilder(TestCase):
    def test_it_builds_a_config(self):
        cfg = ConfigBuilder.build(3, 'exact-seqrb', 10, verify_bounds=True,
                                  heuristic_probes=False)
        self.assertEqual(3, cfg.k)
        self.assertEqual(Mode.EXACT_SEQRB, cfg.mode)
        self.assertTrue(cfg.verify_bounds)
        self.assertFalse(cfg.heuristic_probes)

    def test_it_raises_error_for_unknown_mode(self):
        with self.assertRaises(CommandError) as cm:
            ConfigBuilder.build(2, 'fastest', 10)
        self.assertEqual(EXIT_INVALID_ARGS, cm.exception.returncode)

    def test_it_raises_error_for_small_k(self):
        with self.assertRaises(CommandError) as cm:
            ConfigBuilder.build(1, 'exact-altrb', 10)
        self.assertEqual(EXIT_INVALID_ARGS, cm.exception.returncode)

    def test_it_raises_error_for_non_positive_time_limit(self):
        with self.assertRaises(CommandError):
            ConfigBuilder.build(2, 'exact-altrb', 0)


class TestSolveGraphAction(TestCase):
    @patch('kplex.management.commands.utils.solve')
    def test_data_flow(self, solve):
        g = MagicMock()
        cfg = MagicMock()
        self.assertEqual(solve.return_value, SolveGraphAction.solve(g, cfg))
        solve.assert_called_once_with(g, cfg)

    @patch('kplex.management.commands.utils.solve')
    def test_it_raises_error_if_the_oracle_refuses_the_graph(self, solve):
        solve.side_effect = InstanceTooLargeError(30, 25)
        with self.assertRaises(CommandError) as cm:
            SolveGraphAction.solve(MagicMock(), MagicMock())
        self.assertEqual(EXIT_INVALID_ARGS, cm.exception.returncode)
        self.assertIn('30', str(cm.exception))
