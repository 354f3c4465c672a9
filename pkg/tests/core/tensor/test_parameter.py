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

from hydraformer.core.tensor import (
    ONES, ZEROS, NORMAL, SHARED, ParamSpec, Parameter,
)


class TestParameter(unittest.TestCase):

    def test_owner(self) -> None:
        self.assertEqual(Parameter('frontend.sub6.conv0.weight', np.zeros(2)).owner, 'sub6')
        self.assertEqual(Parameter('encoder.blocks.0.ffn1.w1.weight', np.zeros(2)).owner, SHARED)
        self.assertEqual(Parameter('heads.ctc.weight', np.zeros(2)).owner, SHARED)

    def test_requires_grad_and_step_count(self) -> None:
        p = Parameter('heads.ctc.bias', np.zeros(3))
        self.assertTrue(p.tensor.requires_grad)
        self.assertEqual(p.step_count, 0)
        self.assertIsNone(p.grad)
        self.assertEqual(p.shape, (3,))

    def test_spec_sampling(self) -> None:
        rng = np.random.default_rng(0)
        self.assertTrue(np.all(ParamSpec((2, 3), ONES).sample(rng) == 1.0))
        self.assertTrue(np.all(ParamSpec((2,), ZEROS).sample(rng) == 0.0))
        self.assertEqual(ParamSpec((4, 5), NORMAL).sample(rng).shape, (4, 5))
        uniform = ParamSpec((50, 50), fan_in=16).sample(rng)
        self.assertLessEqual(np.abs(uniform).max(), 0.25)
        self.assertGreater(np.abs(uniform).max(), 0.2)

    def test_sampling_is_reproducible(self) -> None:
        spec = ParamSpec((3, 3), fan_in=3)
        np.testing.assert_array_equal(
            spec.sample(np.random.default_rng(5)),
            spec.sample(np.random.default_rng(5)),
        )
