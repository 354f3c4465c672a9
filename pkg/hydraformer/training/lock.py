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
import logging
from types import TracebackType
from typing import Type, Optional

from ..exception import LockError
from ..common.types import PathLike
from ..common.utils import text_, bytes_


logger = logging.getLogger(__name__)


class TrainLock:
    """Pid file that marks a run directory as owned by one writer."""

    def __init__(self, path: PathLike) -> None:
        self.path = os.fspath(path)
        self.held = False

    def acquire(self) -> None:
        try:
            fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY, 0o644)
        except FileExistsError as e:
            with open(self.path, 'rb') as pid_file:
                owner = text_(pid_file.read()).strip() or 'unknown'
            raise LockError(self.path, owner) from e
        with os.fdopen(fd, 'wb') as pid_file:
            pid_file.write(bytes_(os.getpid()))
        self.held = True
        logger.debug('Acquired %s', self.path)

    def release(self) -> None:
        if self.held and os.path.exists(self.path):
            os.remove(self.path)
        self.held = False

    def __enter__(self) -> 'TrainLock':
        self.acquire()
        return self

    def __exit__(
            self,
            exc_type: Optional[Type[BaseException]],
            exc_val: Optional[BaseException],
            exc_tb: Optional[TracebackType],
    ) -> None:
        self.release()
