# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import os
import json
import tempfile

import unittest
from unittest import mock

from hydraformer.common.utils import (
    text_, bytes_, batched, json_line, name_seed, versioned, atomic_write,
    single_threaded,
)


class TestUtils(unittest.TestCase):

    def test_text_and_bytes(self) -> None:
        self.assertEqual(text_(b'abc'), 'abc')
        self.assertEqual(text_(12), '12')
        self.assertEqual(bytes_('abc'), b'abc')
        self.assertEqual(bytes_(12), b'12')
        self.assertEqual(bytes_(b'x'), b'x')

    def test_name_seed_depends_on_name(self) -> None:
        self.assertEqual(name_seed(3, 'a.weight'), name_seed(3, 'a.weight'))
        self.assertNotEqual(name_seed(3, 'a.weight'), name_seed(3, 'b.weight'))
        self.assertNotEqual(name_seed(3, 'a.weight'), name_seed(4, 'a.weight'))

    def test_versioned_puts_version_first(self) -> None:
        record = versioned({'b': 1, 'format_version': 9})
        self.assertEqual(list(record), ['format_version', 'b'])
        self.assertEqual(record['format_version'], 1)
        self.assertEqual(json.loads(json_line({'x': 2})), {'format_version': 1, 'x': 2})
        self.assertTrue(json_line({'x': 2}).startswith('{"format_version":1'))

    def test_batched(self) -> None:
        self.assertEqual(list(batched([], 3)), [])
        self.assertEqual(list(batched([1, 2, 3], 3)), [[1, 2, 3]])

    def test_atomic_write_replaces(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'out.bin')
            atomic_write(path, b'first')
            atomic_write(path, b'second')
            with open(path, 'rb') as f:
                self.assertEqual(f.read(), b'second')
            self.assertEqual(os.listdir(tmp), ['out.bin'])

    @mock.patch('threadpoolctl.threadpool_limits')
    def test_single_threaded_restores_limits(self, mock_limits: mock.Mock) -> None:
        with single_threaded() as threads:
            self.assertEqual(threads, 1)
            mock_limits.assert_called_once_with(limits=1)
        mock_limits.return_value.restore_original_limits.assert_called_once_with()

    @mock.patch('threadpoolctl.threadpool_limits')
    def test_single_threaded_decorator(self, mock_limits: mock.Mock) -> None:
        @single_threaded(2)
        def work() -> str:
            return 'done'
        self.assertEqual(work(), 'done')
        mock_limits.assert_called_once_with(limits=2)
