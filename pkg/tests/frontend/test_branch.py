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

from hydraformer.exception import ConfigError, TooShortError
from hydraformer.frontend import (
    BranchSpec, FrontendConfig, min_frames, freq_length, build_branch,
    subsampled_length,
)


class TestBranch(unittest.TestCase):

    def test_topologies(self) -> None:
        self.assertEqual([(l.kernel_t, l.stride_t) for l in build_branch(4).layers], [(3, 2), (3, 2)])
        self.assertEqual([(l.kernel_t, l.stride_t) for l in build_branch(6).layers], [(3, 2), (5, 3)])
        self.assertEqual([(l.kernel_t, l.stride_t) for l in build_branch(8).layers], [(3, 2)] * 3)

    def test_unsupported_factor(self) -> None:
        with self.assertRaises(ConfigError) as ctx:
            build_branch(5)
        self.assertEqual(ctx.exception.key, 'frontend.factors')

    def test_input_too_narrow(self) -> None:
        with self.assertRaises(ConfigError):
            build_branch(8, model_dim=8, input_dim=10)

    def test_subsampled_lengths(self) -> None:
        expected = {4: [(7, 1), (8, 1), (11, 2), (100, 24)], 6: [(11, 1), (17, 2), (100, 15)], 8: [(15, 1), (100, 11)]}
        for factor, cases in expected.items():
            spec = build_branch(factor)
            for frames, out in cases:
                self.assertEqual(subsampled_length(frames, spec), out, (factor, frames))

    def test_length_roughly_divides(self) -> None:
        for factor in (4, 6, 8):
            spec = build_branch(factor)
            for frames in range(min_frames(spec), 400, 7):
                out = subsampled_length(frames, spec)
                self.assertLessEqual(out, frames // factor)
                self.assertGreaterEqual(out, frames // factor - 3)

    def test_min_frames(self) -> None:
        for factor, frames in ((4, 7), (6, 11), (8, 15)):
            spec = build_branch(factor)
            self.assertEqual(min_frames(spec), frames)
            with self.assertRaises(TooShortError) as ctx:
                subsampled_length(frames - 1, spec)
            self.assertEqual(ctx.exception.factor, factor)

    def test_freq_length(self) -> None:
        self.assertEqual(freq_length(build_branch(4)), 19)
        self.assertEqual(freq_length(build_branch(6)), 12)
        self.assertEqual(freq_length(build_branch(8)), 9)

    def test_spec_json(self) -> None:
        spec = build_branch(6, model_dim=8, input_dim=16)
        self.assertEqual(BranchSpec.from_json(spec.to_json()), spec)
        self.assertEqual(spec.prefix, 'frontend.sub6')

    def test_frontend_config_validation(self) -> None:
        self.assertEqual(FrontendConfig().validate().factors, (4, 6, 8))
        for factors in ((), (6, 4), (4, 4)):
            with self.assertRaises(ConfigError):
                FrontendConfig(factors=factors).validate()
        with self.assertRaises(ConfigError):
            FrontendConfig(factors=(4, 6)).branch(8)
