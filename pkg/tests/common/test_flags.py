# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import unittest
from unittest import mock

from hydraformer import command  # noqa: F401  pylint: disable=unused-import
from hydraformer.exception import UsageError
from hydraformer.common.flag import FlagParser, flags
from hydraformer.common.logger import single_char_to_level
from hydraformer.common.version import __version__


class TestFlags(unittest.TestCase):

    def test_subcommands_registered(self) -> None:
        self.assertEqual(
            sorted(flags.handlers),
            ['bench', 'decode', 'gen-data', 'train', 'transfer', 'viz'],
        )

    def test_duplicate_subcommand(self) -> None:
        with self.assertRaises(UsageError):
            flags.add_subcommand('viz', lambda args: 0, help='again')

    @mock.patch('hydraformer.common.flag.Logger.setup')
    def test_initialize(self, mock_setup: mock.Mock) -> None:
        args = FlagParser.initialize(['--log-level', 'd', 'gen-data', '--out', 'x', '--utts', '3'])
        self.assertEqual(args.command, 'gen-data')
        self.assertEqual(args.utts, 3)
        mock_setup.assert_called_once()

    def test_command_required(self) -> None:
        with self.assertRaises(UsageError):
            FlagParser.initialize([])

    def test_unknown_flag_raises(self) -> None:
        with self.assertRaises(UsageError):
            FlagParser.initialize(['gen-data', '--out', 'x', '--no-such-flag'])
        with self.assertRaises(UsageError):
            FlagParser.initialize(['gen-data'])

    def test_bad_log_level(self) -> None:
        with self.assertRaises(UsageError):
            FlagParser.initialize(['--log-level', 'z', 'gen-data', '--out', 'x'])

    @mock.patch('builtins.print')
    def test_version(self, mock_print: mock.Mock) -> None:
        with self.assertRaises(SystemExit) as ctx:
            FlagParser.initialize(['--version'])
        self.assertEqual(ctx.exception.code, 0)
        mock_print.assert_called_with(__version__)

    def test_single_char_to_level(self) -> None:
        self.assertEqual(single_char_to_level('warning'), 30)
        self.assertEqual(single_char_to_level('D'), 10)
