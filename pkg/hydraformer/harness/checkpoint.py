# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Checkpoint codec.

    Layout::

        magic (8 bytes) | version (<I) | header length (<Q) | header | blob

    The header is UTF-8 JSON holding the configs, the vocabulary, the
    training step and an index of every tensor (dtype, shape, offset,
    size and per-parameter optimizer step count) into the blob.  The blob is
    the concatenation of little-endian raw tensors.
"""
import io
import os
import json
import zlib
import struct
import logging
from typing import Any, Dict, List, Tuple, Optional, NamedTuple

import numpy as np

from ..model import (
    ModelState, EncoderConfig, DecoderConfig, model_param_specs,
    validate_configs,
)
from ..frontend import FrontendConfig
from ..exception import ConfigError, CheckpointError
from ..core.tensor import Parameter, ParameterMap
from ..common.types import PathLike, JsonDict
from ..common.utils import versioned, atomic_write
from ..common.constants import FORMAT_VERSION, FORMAT_VERSION_KEY


logger = logging.getLogger(__name__)

MAGIC = b'HYDRACKP'
STORED_DTYPE = '<f8'

_PREAMBLE = struct.Struct('<8sIQ')


class Checkpoint(NamedTuple):
    model: ModelState
    vocab: Tuple[str, ...]
    step: int


def _configs_json(model: ModelState) -> JsonDict:
    frontend = model.frontend._asdict()
    frontend['factors'] = list(model.frontend.factors)
    return {
        'frontend': frontend,
        'encoder': model.encoder._asdict(),
        'decoder': model.decoder._asdict(),
        'branches': [spec.to_json() for spec in model.frontend.branches],
    }


def encode_checkpoint(model: ModelState, vocab: Tuple[str, ...] = (), step: int = 0) -> bytes:
    blob = io.BytesIO()
    tensors: List[JsonDict] = []
    for name in model.names():
        param = model[name]
        raw = np.ascontiguousarray(param.data, dtype=STORED_DTYPE).tobytes()
        tensors.append({
            'name': name,
            'dtype': STORED_DTYPE,
            'shape': list(param.shape),
            'offset': blob.tell(),
            'nbytes': len(raw),
            'steps': param.step_count,
        })
        blob.write(raw)
    payload = blob.getvalue()
    header = versioned(dict(
        _configs_json(model),
        vocab=list(vocab),
        step=step,
        tensors=tensors,
        crc32=zlib.crc32(payload),
    ))
    head = json.dumps(header, separators=(',', ':')).encode('utf-8')
    return _PREAMBLE.pack(MAGIC, FORMAT_VERSION, len(head)) + head + payload


def save_checkpoint(
        path: PathLike,
        model: ModelState,
        vocab: Tuple[str, ...] = (),
        step: int = 0,
) -> None:
    atomic_write(path, encode_checkpoint(model, vocab, step))
    logger.debug('Saved %s at step %d', os.fspath(path), step)


def _parse(path: str, raw: bytes) -> Tuple[JsonDict, bytes]:
    if len(raw) < _PREAMBLE.size:
        raise CheckpointError(path, 'truncated preamble')
    magic, version, head_len = _PREAMBLE.unpack_from(raw)
    if magic != MAGIC:
        raise CheckpointError(path, 'not a checkpoint file')
    if version != FORMAT_VERSION:
        raise CheckpointError(path, 'unsupported version %d' % version, FORMAT_VERSION_KEY)
    start = _PREAMBLE.size
    if len(raw) < start + head_len:
        raise CheckpointError(path, 'truncated header')
    try:
        header = json.loads(raw[start:start + head_len].decode('utf-8'))
    except ValueError as e:
        raise CheckpointError(path, 'malformed header: %s' % e) from e
    if header.get(FORMAT_VERSION_KEY) != FORMAT_VERSION:
        raise CheckpointError(path, 'header version mismatch', FORMAT_VERSION_KEY)
    payload = raw[start + head_len:]
    if zlib.crc32(payload) != header.get('crc32'):
        raise CheckpointError(path, 'tensor blob is truncated or corrupt')
    return header, payload


def _configs(path: str, header: JsonDict) -> Tuple[FrontendConfig, EncoderConfig, DecoderConfig]:
    try:
        frontend = dict(header['frontend'])
        frontend['factors'] = tuple(frontend['factors'])
        configs = (
            FrontendConfig(**frontend),
            EncoderConfig(**header['encoder']),
            DecoderConfig(**header['decoder']),
        )
        validate_configs(*configs)
    except (KeyError, TypeError) as e:
        raise CheckpointError(path, 'incomplete config header: %s' % e) from e
    except ConfigError as e:
        raise CheckpointError(path, str(e)) from e
    return configs


def _same_config(state: ModelState, configs: Tuple[Any, ...]) -> Optional[str]:
    ours = (state.frontend._replace(factors=tuple(state.frontend.factors)), state.encoder, state.decoder)
    for section, mine, theirs in zip(('frontend', 'encoder', 'decoder'), ours, configs):
        if mine != theirs:
            return section
    return None


def load_checkpoint(path: PathLike, state: Optional[ModelState] = None) -> Checkpoint:
    """Read and fully validate a checkpoint.

    With ``state`` given, its configs must equal the stored ones and its
    parameters are overwritten in place, but only once every tensor has
    been checked; any failure leaves ``state`` untouched.
    """
    path = os.fspath(path)
    try:
        with open(path, 'rb') as f:
            raw = f.read()
    except OSError as e:
        raise CheckpointError(path, str(e)) from e
    header, payload = _parse(path, raw)
    configs = _configs(path, header)
    expected = model_param_specs(*configs)
    values: Dict[str, Tuple[np.ndarray, int]] = {}
    for entry in header.get('tensors', []):
        name = entry['name']
        if name in values:
            raise CheckpointError(path, 'stored twice', name)
        if name not in expected:
            raise CheckpointError(path, 'unexpected tensor', name)
        shape = tuple(entry['shape'])
        if shape != tuple(expected[name].shape):
            raise CheckpointError(
                path, 'shape %s, config expects %s' % (shape, tuple(expected[name].shape)), name,
            )
        dtype = np.dtype(entry['dtype'])
        offset, nbytes = int(entry['offset']), int(entry['nbytes'])
        if nbytes != int(np.prod(shape, dtype=np.int64)) * dtype.itemsize or offset + nbytes > len(payload):
            raise CheckpointError(path, 'index points outside the blob', name)
        data = np.frombuffer(payload, dtype=dtype, count=nbytes // dtype.itemsize, offset=offset)
        values[name] = (data.reshape(shape).astype(np.float64), int(entry.get('steps', 0)))
    missing = sorted(set(expected) - set(values))
    if missing:
        raise CheckpointError(path, 'missing tensor', missing[0])
    if state is not None:
        section = _same_config(state, configs)
        if section is not None:
            raise CheckpointError(path, 'config does not match the target model', section)
        for name, (data, steps) in values.items():
            state[name].data[...] = data
            state[name].step_count = steps
        model = state
    else:
        parameters: ParameterMap = {
            name: Parameter(name, data, steps) for name, (data, steps) in sorted(values.items())
        }
        model = ModelState(parameters, *configs)
    return Checkpoint(model, tuple(header.get('vocab', [])), int(header.get('step', 0)))
