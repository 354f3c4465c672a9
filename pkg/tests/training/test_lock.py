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

from hydraformer.training import TrainLock
from hydraformer.exception import LockError


class TestTrainLock(unittest.TestCase):

    def setUp(self) -> None:
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, 'train.lock')

    def tearDown(self) -> None:
        self.tmp.cleanup()

    def test_pid_written_and_removed(self) -> None:
        with TrainLock(self.path) as lock:
            self.assertTrue(lock.held)
            with open(self.path, 'rb') as f:
                self.assertEqual(int(f.read()), os.getpid())
        self.assertFalse(os.path.exists(self.path))

    def test_second_writer_is_refused(self) -> None:
        with TrainLock(self.path):
            with self.assertRaises(LockError) as ctx:
                TrainLock(self.path).acquire()
            self.assertIn(str(os.getpid()), str(ctx.exception))
        self.assertFalse(os.path.exists(self.path))

    def test_release_without_acquire_keeps_foreign_lock(self) -> None:
        with open(self.path, 'w', encoding='utf-8') as f:
            f.write('12345')
        lock = TrainLock(self.path)
        with self.assertRaises(LockError):
            lock.acquire()
        lock.release()
        self.assertTrue(os.path.exists(self.path))
