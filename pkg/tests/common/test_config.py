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
import tempfile
import unittest
from typing import List, Tuple, Optional, NamedTuple

from hydraformer.exception import ConfigError
from hydraformer.common.config import (
    build_record, coerce_value, dump_records, parse_kv_text, read_kv_file,
)


class _Record(NamedTuple):
    name: str
    size: int = 3
    rate: float = 0.5
    enabled: bool = False
    factors: Tuple[int, ...] = (4,)
    tags: List[str] = []
    extra: Optional[str] = None


class TestConfig(unittest.TestCase):

    def test_parse_ignores_comments_and_blank_lines(self) -> None:
        values = parse_kv_text('format_version = 1\n\n# comment\nmodel.size = 4\n')
        self.assertEqual(values, {'model.size': '4'})

    def test_format_version_must_come_first(self) -> None:
        with self.assertRaises(ConfigError):
            parse_kv_text('model.size = 4\nformat_version = 1\n')

    def test_unsupported_version(self) -> None:
        with self.assertRaises(ConfigError) as ctx:
            parse_kv_text('format_version = 2\n')
        self.assertIn('format_version', str(ctx.exception))

    def test_duplicate_and_malformed_lines(self) -> None:
        with self.assertRaises(ConfigError):
            parse_kv_text('format_version = 1\na = 1\na = 2\n')
        with self.assertRaises(ConfigError):
            parse_kv_text('format_version = 1\njust words\n')
        with self.assertRaises(ConfigError):
            parse_kv_text('')

    def test_coerce_value(self) -> None:
        self.assertEqual(coerce_value('4, 6,8', Tuple[int, ...], 'k'), (4, 6, 8))
        self.assertEqual(coerce_value('a,b', List[str], 'k'), ['a', 'b'])
        self.assertTrue(coerce_value('Yes', bool, 'k'))
        self.assertFalse(coerce_value('off', bool, 'k'))
        self.assertEqual(coerce_value('2.5', float, 'k'), 2.5)
        self.assertIsNone(coerce_value('None', Optional[int], 'k'))
        self.assertEqual(coerce_value('', Tuple[int, ...], 'k'), ())
        with self.assertRaises(ConfigError) as ctx:
            coerce_value('four', int, 'model.size')
        self.assertIn('model.size', str(ctx.exception))
        with self.assertRaises(ConfigError):
            coerce_value('maybe', bool, 'k')

    def test_build_record(self) -> None:
        record = build_record(_Record, {'r.name': 'x', 'r.factors': '6,8', 'other.size': '9'}, 'r.')
        self.assertEqual(record, _Record(name='x', factors=(6, 8)))

    def test_build_record_unknown_and_missing_keys(self) -> None:
        with self.assertRaises(ConfigError) as ctx:
            build_record(_Record, {'r.name': 'x', 'r.sise': '3'}, 'r.')
        self.assertIn('r.sise', str(ctx.exception))
        with self.assertRaises(ConfigError) as ctx:
            build_record(_Record, {'r.size': '3'}, 'r.')
        self.assertIn('r.name', str(ctx.exception))

    def test_dump_then_parse(self) -> None:
        record = _Record(name='x', size=7, enabled=True, factors=(4, 8), tags=['a'], extra=None)
        text = dump_records([('r.', record)])
        self.assertTrue(text.startswith('format_version = 1\n'))
        self.assertEqual(build_record(_Record, parse_kv_text(text), 'r.'), record)

    def test_read_kv_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'run.cfg')
            with open(path, 'w', encoding='utf-8') as f:
                f.write('format_version = 1\nr.name = y\n')
            self.assertEqual(read_kv_file(path), {'r.name': 'y'})
            with self.assertRaises(ConfigError):
                read_kv_file(os.path.join(tmp, 'missing.cfg'))
