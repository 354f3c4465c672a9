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

from hydraformer.model import EncoderConfig, encode, encoder_param_specs
from hydraformer.testing import TestCase
from hydraformer.exception import ConfigError
from hydraformer.core.tensor import Tensor, grad_check


class TestEncoder(TestCase):

    def setUp(self) -> None:
        self.model = self.tiny_model(seed=5, encoder_blocks=2)
        self.config = self.model.encoder
        self.rng = np.random.default_rng(4)

    def test_block_parameters(self) -> None:
        names = encoder_param_specs(self.config)
        self.assertIn('encoder.blocks.1.conv.dw.weight', names)
        self.assertEqual(names['encoder.blocks.0.conv.dw.weight'].shape, (self.MODEL_DIM, 3))
        self.assertEqual(len([n for n in names if n.startswith('encoder.blocks.0.')]) * 2, len(names))

    def test_padding_never_reaches_real_frames(self) -> None:
        x = self.rng.standard_normal((2, 9, self.MODEL_DIM))
        out = encode(self.model.parameters, self.config, Tensor(x), [9, 5]).data
        alone = encode(self.model.parameters, self.config, Tensor(x[1:, :5]), [5]).data
        np.testing.assert_allclose(out[1, :5], alone[0], atol=1e-10)
        x[1, 5:] = 50.0
        again = encode(self.model.parameters, self.config, Tensor(x), [9, 5]).data
        np.testing.assert_allclose(again[1, :5], out[1, :5], atol=1e-10)

    def test_zero_blocks_is_identity(self) -> None:
        x = Tensor(self.rng.standard_normal((1, 4, self.MODEL_DIM)))
        config = self.config._replace(num_blocks=0)
        self.assertIs(encode(self.model.parameters, config, x, [4]), x)

    def test_dropout_only_when_training(self) -> None:
        config = self.config._replace(dropout_rate=0.5)
        x = Tensor(self.rng.standard_normal((1, 6, self.MODEL_DIM)))
        a = encode(self.model.parameters, config, x, [6]).data
        b = encode(self.model.parameters, config, x, [6], training=False, rng=self.rng).data
        np.testing.assert_array_equal(a, b)
        c = encode(self.model.parameters, config, x, [6], training=True, rng=np.random.default_rng(0)).data
        self.assertFalse(np.allclose(a, c))

    def test_gradients(self) -> None:
        config = self.config._replace(num_blocks=1)
        x = Tensor(self.rng.standard_normal((2, 5, self.MODEL_DIM)), requires_grad=True)
        cotangent = Tensor(self.rng.standard_normal((2, 5, self.MODEL_DIM)))
        params = [x] + [self.model[n].tensor for n in self.model.names('encoder.blocks.0.mhsa.')]
        self.assertLess(
            grad_check(lambda: (encode(self.model.parameters, config, x, [5, 3]) * cotangent).sum(), params, max_coords=5),
            1e-5,
        )

    def test_validation(self) -> None:
        for bad in (
                EncoderConfig(model_dim=8, heads=3),
                EncoderConfig(depthwise_kernel=4),
                EncoderConfig(num_blocks=-1),
                EncoderConfig(dropout_rate=1.0),
        ):
            with self.assertRaises(ConfigError):
                bad.validate()
