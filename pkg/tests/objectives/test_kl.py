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

from hydraformer.exception import DimensionError
from hydraformer.objectives import batch_kl_loss, smoothed_targets, kl_attention_loss
from hydraformer.core.tensor import Tensor, grad_check, log_softmax


class TestKl(unittest.TestCase):

    def setUp(self) -> None:
        self.rng = np.random.default_rng(3)

    def test_smoothed_targets(self) -> None:
        q = smoothed_targets([2, 0], 5, 0.1)
        np.testing.assert_allclose(q.sum(axis=1), 1.0)
        self.assertAlmostEqual(q[0, 2], 0.9)
        self.assertAlmostEqual(q[0, 1], 0.025)
        np.testing.assert_array_equal(smoothed_targets([1], 3, 0.0), [[0.0, 1.0, 0.0]])

    def test_matches_direct_definition(self) -> None:
        logits = self.rng.standard_normal((4, 6))
        target = [1, 4, 2, 5]
        q = smoothed_targets(target, 6, 0.1)
        log_p = log_softmax(Tensor(logits)).data
        expected = float((q * (np.log(q) - log_p)).sum(axis=1).mean())
        self.assertAlmostEqual(kl_attention_loss(Tensor(logits), target, 0.1).item(), expected, places=12)

    def test_zero_when_prediction_equals_target(self) -> None:
        q = smoothed_targets([1, 3], 4, 0.2)
        self.assertAlmostEqual(kl_attention_loss(Tensor(np.log(q)), [1, 3], 0.2).item(), 0.0, places=12)

    def test_gradients_skip_padding(self) -> None:
        logits = Tensor(self.rng.standard_normal((2, 4, 5)), requires_grad=True)
        targets = [[1, 2, 4], [3]]
        self.assertLess(grad_check(lambda: batch_kl_loss(logits, targets, 0.1), [logits]), 1e-7)
        logits.zero_grad()
        batch_kl_loss(logits, targets, 0.1).backward()
        self.assertFalse(logits.grad[0, 3:].any())
        self.assertFalse(logits.grad[1, 1:].any())

    def test_batch_is_mean_of_utterances(self) -> None:
        logits = self.rng.standard_normal((2, 3, 5))
        targets = [[1, 2, 4], [3]]
        a = kl_attention_loss(Tensor(logits[0]), targets[0], 0.1).item()
        b = kl_attention_loss(Tensor(logits[1, :1]), targets[1], 0.1).item()
        self.assertAlmostEqual(batch_kl_loss(Tensor(logits), targets, 0.1).item(), (a + b) / 2, places=12)

    def test_shape_errors(self) -> None:
        with self.assertRaises(DimensionError):
            batch_kl_loss(Tensor(np.zeros((1, 2, 5))), [[1, 2, 3]], 0.1)
        with self.assertRaises(DimensionError):
            kl_attention_loss(Tensor(np.zeros((1, 2, 5))), [1], 0.1)
