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

import numpy as np

from hydraformer.training import noam_lr, select_branch
from hydraformer.exception import ConfigError


class TestSchedule(unittest.TestCase):

    def test_warmup_then_decay(self) -> None:
        rates = [noam_lr(s, 2e-3, 50) for s in range(1, 400)]
        peak = int(np.argmax(rates)) + 1
        self.assertEqual(peak, 50)
        self.assertAlmostEqual(max(rates), 2e-3)
        self.assertTrue(all(a < b for a, b in zip(rates[:49], rates[1:50])))
        self.assertTrue(all(a > b for a, b in zip(rates[49:], rates[50:])))
        self.assertAlmostEqual(noam_lr(0, 2e-3, 50), noam_lr(1, 2e-3, 50))
        self.assertAlmostEqual(noam_lr(25, 2e-3, 50), 1e-3)


class TestBranchSelection(unittest.TestCase):

    def test_uniform(self) -> None:
        rng = np.random.default_rng(2024)
        draws = [select_branch(rng, (4, 6, 8)) for _ in range(30000)]
        for branch in (4, 6, 8):
            self.assertLess(abs(draws.count(branch) / 30000 - 1 / 3), 0.015)

    def test_only_rng_decides(self) -> None:
        a = [select_branch(np.random.default_rng(7), (4, 6, 8)) for _ in range(5)]
        self.assertEqual(len(set(a)), 1)
        rng = np.random.default_rng(7)
        first = [select_branch(rng, (4, 6, 8)) for _ in range(20)]
        rng = np.random.default_rng(7)
        self.assertEqual(first, [select_branch(rng, (4, 6, 8)) for _ in range(20)])

    def test_empty(self) -> None:
        with self.assertRaises(ConfigError):
            select_branch(np.random.default_rng(0), ())
