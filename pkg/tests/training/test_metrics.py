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

from hydraformer.training import StepRecord, MetricsWriter, read_metrics
from hydraformer.training.metrics import get_collector


def record(step: int, branch: int) -> StepRecord:
    return StepRecord(step, branch, 2.5, 3.0, 2.25, 1.5, 1e-3, 0, 12.0)


class TestMetrics(unittest.TestCase):

    def setUp(self) -> None:
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, 'metrics.jsonl')

    def tearDown(self) -> None:
        self.tmp.cleanup()

    def test_jsonl(self) -> None:
        with MetricsWriter(self.path) as writer:
            writer.write(record(1, 4))
            writer.write(record(2, 8)._replace(loss_kl=None))
        with open(self.path, encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual(json.loads(lines[0]), {'format_version': 1})
        self.assertEqual(json.loads(lines[1])['branch'], 4)
        self.assertIsNone(json.loads(lines[2])['loss_kl'])
        self.assertEqual(read_metrics(self.path), [record(1, 4), record(2, 8)._replace(loss_kl=None)])

    def test_prometheus_textfile(self) -> None:
        prom = os.path.join(self.tmp.name, 'metrics.prom')
        with MetricsWriter(self.path, prom) as writer:
            for step, branch in enumerate((4, 6, 4), start=1):
                writer.write(record(step, branch))
        with open(prom, encoding='utf-8') as f:
            text = f.read()
        self.assertIn('hydraformer_step 3.0', text)
        self.assertIn('hydraformer_branch_selected_total{branch="4"} 2.0', text)
        self.assertIn('hydraformer_branch_selected_total{branch="6"} 1.0', text)

    def test_empty_history_collects_nothing(self) -> None:
        self.assertEqual(list(get_collector([]).collect()), [])

    def test_failed_prometheus_setup_leaves_no_open_file(self) -> None:
        prom = os.path.join(self.tmp.name, 'metrics.prom')
        writer = MetricsWriter(self.path, prom)
        with mock.patch('hydraformer.training.metrics.get_collector', side_effect=ValueError('duplicate')):
            with self.assertRaises(ValueError):
                writer.open()
        self.assertIsNone(writer._file)  # pylint: disable=protected-access
        self.assertFalse(os.path.exists(self.path))

    def test_failed_header_write_closes_the_file(self) -> None:
        handle = mock.MagicMock()
        handle.write.side_effect = OSError('disk full')
        writer = MetricsWriter(self.path)
        with mock.patch('builtins.open', return_value=handle):
            with self.assertRaises(OSError):
                writer.open()
        handle.close.assert_called_once_with()
        self.assertIsNone(writer._file)  # pylint: disable=protected-access
