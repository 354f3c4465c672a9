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

from hydraformer import TestCase
from hydraformer.frontend import build_branch, min_frames


class TestTestCase(TestCase):

    def test_temp_dir_exists(self) -> None:
        assert self.TEMP_DIR
        self.assertTrue(os.path.isdir(self.TEMP_DIR))

    def test_tiny_model_matches_the_tiny_constants(self) -> None:
        model = self.tiny_model(seed=0)
        self.assertEqual(model.frontend.factors, self.FACTORS)
        self.assertEqual(model.frontend.input_dim, self.FEATURE_DIM)
        self.assertEqual(model.encoder.model_dim, self.MODEL_DIM)
        self.assertEqual(model.decoder.vocab_size, self.VOCAB_SIZE)

    def test_tiny_model_overrides(self) -> None:
        model = self.tiny_model(seed=0, factors=(6,), encoder_blocks=2)
        self.assertEqual(model.frontend.factors, (6,))
        self.assertEqual(model.encoder.num_blocks, 2)
        self.assertEqual(model.names('frontend.sub4.'), [])

    def test_tiny_dataset_fits_every_branch(self) -> None:
        utts = self.tiny_dataset(num_utts=6, seed=3)
        self.assertEqual(len(utts), 6)
        for utt in utts:
            self.assertEqual(utt.features.shape[1], self.FEATURE_DIM)
            self.assertTrue(1 <= len(utt.tokens) <= 3)
            self.assertTrue(all(1 <= t <= self.VOCAB_SIZE - 3 for t in utt.tokens))
            self.assertGreaterEqual(utt.frames, max(min_frames(build_branch(f)) for f in self.FACTORS))

    def test_tiny_train_config_overrides(self) -> None:
        config = self.tiny_train_config(steps=9)
        self.assertEqual(config.steps, 9)
        self.assertEqual(config.batch_size, 2)
