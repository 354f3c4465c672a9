# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Feature files, manifests and the synthetic dataset generator.

    Feature files hold raw little-endian float32 frames of a fixed width.
    A manifest is line-delimited JSON: a header line with the format
    version, feature width and vocabulary, then one line per utterance with
    its feature file (relative to the manifest), frame count and token ids.
"""
import os
import json
import logging
from typing import Any, Dict, List, Tuple, Optional, NamedTuple

import numpy as np

from ..exception import UsageError, ManifestError
from ..common.types import PathLike
from ..common.utils import json_line
from ..common.constants import (
    BLANK_ID, EOS_OFFSET, SOS_OFFSET, FEATURES_DIR, FEATURE_DTYPE,
    MANIFEST_FILE, FORMAT_VERSION, MIN_VOCAB_SIZE, DEFAULT_MAX_TOKENS,
    DEFAULT_MIN_TOKENS, FORMAT_VERSION_KEY, DEFAULT_FEATURE_DIM,
    MIN_FRAMES_PER_TOKEN, DEFAULT_SILENCE_FRAMES,
)


logger = logging.getLogger(__name__)


class Utterance(NamedTuple):
    key: str
    features: np.ndarray
    tokens: Tuple[int, ...]

    @property
    def frames(self) -> int:
        return int(self.features.shape[0])


class ManifestEntry(NamedTuple):
    path: str
    frames: int
    tokens: Tuple[int, ...]


class DatasetManifest(NamedTuple):
    entries: Tuple[ManifestEntry, ...]
    vocab: Tuple[str, ...]
    feature_dim: int
    root: str = '.'

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)


def default_vocab(vocab_size: int) -> Tuple[str, ...]:
    """Symbol table with blank first and sos, eos last.

    >>> default_vocab(5)
    ('<blank>', 'a', 'b', '<sos>', '<eos>')
    """
    real = vocab_size - 3
    symbols = [chr(ord('a') + i) if i < 26 else 't%d' % i for i in range(real)]
    return tuple(['<blank>'] + symbols + ['<sos>', '<eos>'])


def write_features(path: PathLike, features: np.ndarray) -> None:
    with open(path, 'wb') as f:
        f.write(np.ascontiguousarray(features, dtype=FEATURE_DTYPE).tobytes())


def read_features(path: PathLike, feature_dim: int) -> np.ndarray:
    with open(path, 'rb') as f:
        raw = f.read()
    width = feature_dim * np.dtype(FEATURE_DTYPE).itemsize
    if len(raw) % width:
        raise ManifestError(str(path), 'size %d is not a whole number of %d-dim frames' % (len(raw), feature_dim))
    return np.frombuffer(raw, dtype=FEATURE_DTYPE).reshape(-1, feature_dim).astype(np.float32)


def write_manifest(
        out_dir: PathLike,
        utterances: List[Utterance],
        vocab: Tuple[str, ...],
) -> DatasetManifest:
    """Write feature files and the manifest under ``out_dir``."""
    out_dir = os.fspath(out_dir)
    os.makedirs(os.path.join(out_dir, FEATURES_DIR), exist_ok=True)
    feature_dim = utterances[0].features.shape[1] if utterances else DEFAULT_FEATURE_DIM
    entries: List[ManifestEntry] = []
    lines = [json_line({'feature_dim': feature_dim, 'vocab': list(vocab)})]
    for utt in utterances:
        rel = os.path.join(FEATURES_DIR, utt.key + '.f32')
        write_features(os.path.join(out_dir, rel), utt.features)
        entry = ManifestEntry(rel, utt.frames, tuple(utt.tokens))
        entries.append(entry)
        lines.append(json.dumps({'path': rel, 'frames': entry.frames, 'tokens': list(entry.tokens)}))
    with open(os.path.join(out_dir, MANIFEST_FILE), 'w', encoding='utf-8') as f:
        f.write('\n'.join(lines) + '\n')
    logger.info('Wrote %d utterances to %s', len(entries), out_dir)
    return DatasetManifest(tuple(entries), tuple(vocab), feature_dim, out_dir)


def _manifest_path(path: PathLike) -> str:
    path = os.fspath(path)
    return os.path.join(path, MANIFEST_FILE) if os.path.isdir(path) else path


def read_manifest(path: PathLike) -> DatasetManifest:
    path = _manifest_path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            lines = [line for line in f.read().splitlines() if line.strip()]
    except OSError as e:
        raise ManifestError(path, str(e)) from e
    try:
        records: List[Dict[str, Any]] = [json.loads(line) for line in lines]
    except ValueError as e:
        raise ManifestError(path, 'malformed line: %s' % e) from e
    if not records or records[0].get(FORMAT_VERSION_KEY) != FORMAT_VERSION:
        raise ManifestError(path, 'missing or unsupported %s' % FORMAT_VERSION_KEY)
    header = records[0]
    try:
        vocab = tuple(str(s) for s in header['vocab'])
        feature_dim = int(header['feature_dim'])
    except (KeyError, TypeError, ValueError) as e:
        raise ManifestError(path, 'malformed header: %s' % e) from e
    if len(vocab) < MIN_VOCAB_SIZE:
        raise ManifestError(path, 'vocabulary of %d symbols is too small' % len(vocab))
    reserved = {BLANK_ID, len(vocab) - SOS_OFFSET, len(vocab) - EOS_OFFSET}
    entries: List[ManifestEntry] = []
    for n, record in enumerate(records[1:], start=2):
        try:
            tokens = tuple(int(t) for t in record['tokens'])
            entry = ManifestEntry(str(record['path']), int(record['frames']), tokens)
        except (KeyError, TypeError, ValueError) as e:
            raise ManifestError(path, 'line %d: malformed entry: %s' % (n, e)) from e
        for token in tokens:
            if not 0 <= token < len(vocab) or token in reserved:
                raise ManifestError(path, 'line %d: token id %d is not a transcript token' % (n, token))
        entries.append(entry)
    return DatasetManifest(tuple(entries), vocab, feature_dim, os.path.dirname(path) or '.')


def load_utterances(manifest: DatasetManifest) -> List[Utterance]:
    """Read every feature file, rejecting frame counts that disagree with the manifest."""
    utterances: List[Utterance] = []
    for entry in manifest.entries:
        full = os.path.join(manifest.root, entry.path)
        try:
            features = read_features(full, manifest.feature_dim)
        except OSError as e:
            raise ManifestError(full, str(e)) from e
        if features.shape[0] != entry.frames:
            raise ManifestError(
                full, 'holds %d frames, manifest says %d' % (features.shape[0], entry.frames),
            )
        key = os.path.splitext(os.path.basename(entry.path))[0]
        utterances.append(Utterance(key, features, entry.tokens))
    return utterances


def load_dataset(path: PathLike) -> Tuple[DatasetManifest, List[Utterance]]:
    manifest = read_manifest(path)
    return manifest, load_utterances(manifest)


def synthesize(
        num_utts: int,
        vocab_size: int,
        frames_per_token: int,
        noise_std: float,
        seed: int,
        feature_dim: int = DEFAULT_FEATURE_DIM,
        min_tokens: int = DEFAULT_MIN_TOKENS,
        max_tokens: int = DEFAULT_MAX_TOKENS,
        silence_frames: int = DEFAULT_SILENCE_FRAMES,
) -> List[Utterance]:
    """Utterances whose tokens are fixed random frame patterns plus noise.

    Every token id, and silence, owns a prototype frame; a token spans
    ``frames_per_token`` copies of its prototype.  Transcripts use ids
    1..V-3, never repeat a token back to back and are framed by silence.
    """
    if frames_per_token < MIN_FRAMES_PER_TOKEN:
        raise UsageError('frames_per_token must be >= %d, got %d' % (MIN_FRAMES_PER_TOKEN, frames_per_token))
    if vocab_size < MIN_VOCAB_SIZE:
        raise UsageError('vocab_size must be >= %d, got %d' % (MIN_VOCAB_SIZE, vocab_size))
    if not 1 <= min_tokens <= max_tokens:
        raise UsageError('need 1 <= min_tokens <= max_tokens')
    rng = np.random.default_rng(seed)
    prototypes = rng.standard_normal((vocab_size, feature_dim))
    real = vocab_size - 3
    utterances: List[Utterance] = []
    for n in range(num_utts):
        count = int(rng.integers(min_tokens, max_tokens + 1))
        tokens: List[int] = []
        for _ in range(count):
            choices = [t for t in range(1, real + 1) if not tokens or t != tokens[-1]]
            tokens.append(choices[int(rng.integers(len(choices)))] if choices else 1)
        frames = [BLANK_ID] * silence_frames
        for token in tokens:
            frames.extend([token] * frames_per_token)
        frames.extend([BLANK_ID] * silence_frames)
        features = prototypes[frames]
        if noise_std > 0:
            features = features + rng.normal(0.0, noise_std, size=features.shape)
        utterances.append(
            Utterance('utt%04d' % n, features.astype(np.float32), tuple(tokens)),
        )
    return utterances


def gen_synthetic(
        num_utts: int,
        vocab_size: int,
        frames_per_token: int,
        noise_std: float,
        seed: int,
        out_dir: Optional[PathLike] = None,
        **kwargs: Any,
) -> Tuple[DatasetManifest, List[Utterance]]:
    """Synthesize a dataset, writing it under ``out_dir`` when given."""
    utterances = synthesize(num_utts, vocab_size, frames_per_token, noise_std, seed, **kwargs)
    vocab = default_vocab(vocab_size)
    if out_dir is not None:
        return write_manifest(out_dir, utterances, vocab), utterances
    entries = tuple(ManifestEntry(u.key, u.frames, u.tokens) for u in utterances)
    feature_dim = kwargs.get('feature_dim', DEFAULT_FEATURE_DIM)
    return DatasetManifest(entries, vocab, feature_dim), utterances
