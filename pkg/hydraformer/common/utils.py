# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    .. spelling::

       utils
"""
import os
import json
import zlib
import logging
import functools
import contextlib
from types import TracebackType
from typing import (
    Any, Dict, List, Type, Tuple, Callable, Iterator, Optional, Sequence,
    TypeVar,
)

from .types import JsonDict, PathLike
from .constants import FORMAT_VERSION, FORMAT_VERSION_KEY


logger = logging.getLogger(__name__)

T = TypeVar('T')


def text_(s: Any, encoding: str = 'utf-8', errors: str = 'strict') -> Any:
    """Utility to ensure text-like usability.

    If s is of type bytes or int, return s.decode(encoding, errors),
    otherwise return s as it is."""
    if isinstance(s, int):
        return str(s)
    if isinstance(s, bytes):
        return s.decode(encoding, errors)
    return s


def bytes_(s: Any, encoding: str = 'utf-8', errors: str = 'strict') -> Any:
    """Utility to ensure binary-like usability.

    If s is type str or int, return s.encode(encoding, errors),
    otherwise return s as it is."""
    if isinstance(s, int):
        s = str(s)
    if isinstance(s, str):
        return s.encode(encoding, errors)
    return s


def name_seed(seed: int, name: str) -> Tuple[int, int]:
    """Seed material for a named random stream.

    Streams for distinct names are independent of each other and of the
    order in which they are drawn.

    >>> name_seed(7, 'encoder.blocks.0.ffn1.w1.weight') == name_seed(7, 'encoder.blocks.0.ffn1.w1.weight')
    True
    """
    return seed, zlib.crc32(bytes_(name))


def versioned(record: JsonDict) -> JsonDict:
    """Return a copy of record with the format version as its leading field."""
    out: JsonDict = {FORMAT_VERSION_KEY: FORMAT_VERSION}
    out.update((k, v) for k, v in record.items() if k != FORMAT_VERSION_KEY)
    return out


def json_line(record: JsonDict) -> str:
    return json.dumps(versioned(record), sort_keys=False, separators=(',', ':'))


def atomic_write(path: PathLike, data: bytes) -> None:
    """Write data to path so that readers never observe a partial file."""
    tmp = '%s.tmp-%d' % (os.fspath(path), os.getpid())
    with open(tmp, 'wb') as f:
        f.write(data)
        f.flush()
        os.fsync(f.fileno())
    os.replace(tmp, path)


def batched(items: Sequence[T], size: int) -> Iterator[List[T]]:
    """
    >>> list(batched([1, 2, 3, 4, 5], 2))
    [[1, 2], [3, 4], [5]]
    """
    for start in range(0, len(items), size):
        yield list(items[start:start + size])


class single_threaded(contextlib.ContextDecorator):
    """Pins BLAS and OpenMP pools to one thread for the duration of the block.

    Usable as a context manager and as a decorator.
    """

    def __init__(self, threads: int = 1) -> None:
        self.threads = threads
        self._limiter: Optional[Any] = None
        super().__init__()

    def __enter__(self) -> int:
        # pylint: disable=import-outside-toplevel
        from threadpoolctl import threadpool_limits
        self._limiter = threadpool_limits(limits=self.threads)
        return self.threads

    def __exit__(
            self,
            exc_type: Optional[Type[BaseException]],
            exc_val: Optional[BaseException],
            exc_tb: Optional[TracebackType],
    ) -> None:
        if self._limiter is not None:
            self._limiter.restore_original_limits()
            self._limiter = None

    def __call__(   # type: ignore
            self, func: Callable[..., Any],
    ) -> Callable[[Tuple[Any, ...], Dict[str, Any]], Any]:
        @functools.wraps(func)
        def decorated(*args: Any, **kwargs: Any) -> Any:
            with self:
                return func(*args, **kwargs)
        return decorated
