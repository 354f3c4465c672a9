# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import numpy as np

from hydraformer.testing import TestCase
from hydraformer.exception import TooShortError, DimensionError
from hydraformer.frontend import (
    FeatureBatch, pad_tokens, length_mask, sinusoid_table, frontend_forward,
    subsampled_length, frontend_param_specs,
)
from hydraformer.core.tensor import Tensor, grad_check


class TestHydraSub(TestCase):

    def setUp(self) -> None:
        self.model = self.tiny_model(seed=3)
        rng = np.random.default_rng(0)
        self.arrays = [rng.standard_normal((n, self.FEATURE_DIM)) for n in (40, 29)]
        self.batch = FeatureBatch.from_arrays(self.arrays)

    def test_param_names_are_per_branch(self) -> None:
        frontend, _, _ = self.tiny_configs()
        names = list(frontend_param_specs(frontend))
        for factor in self.FACTORS:
            self.assertIn('frontend.sub%d.conv0.weight' % factor, names)
            self.assertIn('frontend.sub%d.norm.gain' % factor, names)
        self.assertIn('frontend.sub8.conv2.weight', names)
        self.assertNotIn('frontend.sub4.conv2.weight', names)

    def test_output_shapes(self) -> None:
        for factor in self.FACTORS:
            spec = self.model.frontend.branch(factor)
            out, lengths = frontend_forward(self.model.parameters, self.batch, spec, True)
            self.assertEqual(lengths, [subsampled_length(n, spec) for n in (40, 29)])
            self.assertEqual(out.shape, (2, lengths[0], self.MODEL_DIM))
            self.assertTrue(np.isfinite(out.data).all())

    def test_padding_does_not_leak(self) -> None:
        spec = self.model.frontend.branch(4)
        alone, lengths = frontend_forward(
            self.model.parameters, FeatureBatch.from_arrays(self.arrays[1:]), spec, True,
        )
        padded, _ = frontend_forward(self.model.parameters, self.batch, spec, True)
        np.testing.assert_allclose(padded.data[1, :lengths[0]], alone.data[0], atol=1e-12)

    def test_only_active_branch_receives_gradients(self) -> None:
        spec = self.model.frontend.branch(6)
        out, _ = frontend_forward(self.model.parameters, self.batch, spec, True)
        out.sum().backward()
        for name in self.model.names('frontend.'):
            grad = self.model[name].grad
            if name.startswith('frontend.sub6.'):
                self.assertIsNotNone(grad, name)
            else:
                self.assertIsNone(grad, name)

    def test_gradients(self) -> None:
        spec = self.model.frontend.branch(8)
        batch = FeatureBatch.from_arrays([self.arrays[1][:20]])
        cotangent = Tensor(np.random.default_rng(2).standard_normal((1, 1, self.MODEL_DIM)))
        params = [self.model[n].tensor for n in self.model.names('frontend.sub8.')]

        def f() -> Tensor:
            out, _ = frontend_forward(self.model.parameters, batch, spec, True)
            return (out * cotangent).sum()
        self.assertLess(grad_check(f, params, max_coords=6), 1e-5)

    def test_too_short(self) -> None:
        spec = self.model.frontend.branch(8)
        with self.assertRaises(TooShortError):
            frontend_forward(self.model.parameters, FeatureBatch.from_arrays([self.arrays[0][:14]]), spec, True)

    def test_sinusoid_table(self) -> None:
        table = sinusoid_table(5, 6)
        np.testing.assert_allclose(table[0], [0, 1, 0, 1, 0, 1])
        np.testing.assert_allclose(table[3, 0], np.sin(3.0))
        self.assertFalse(table.flags.writeable)

    def test_feature_batch(self) -> None:
        self.assertEqual(self.batch.features.shape, (2, 40, self.FEATURE_DIM))
        self.assertEqual(self.batch.lengths, (40, 29))
        self.assertFalse(self.batch.features[1, 29:].any())
        sub = self.batch.select([1])
        self.assertEqual(sub.features.shape, (1, 29, self.FEATURE_DIM))
        with self.assertRaises(DimensionError):
            FeatureBatch.from_arrays([])
        with self.assertRaises(DimensionError):
            FeatureBatch.from_arrays([np.zeros((3, 2)), np.zeros((3, 4))])

    def test_masks_and_padding(self) -> None:
        np.testing.assert_array_equal(length_mask([2, 1], 3), [[True, True, False], [True, False, False]])
        tokens, lengths = pad_tokens([[1, 2, 3], [4]], fill=0)
        np.testing.assert_array_equal(tokens, [[1, 2, 3], [4, 0, 0]])
        self.assertEqual(lengths, [3, 1])
