# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Two-dimensional projection of same-named parameter slices across
    checkpoints.

    A selector is a comma separated list of terms ``name[slice]``.  A
    ``*`` in a name stands for an encoder block index, so
    ``encoder.blocks.*.ffn1.w1.weight[0:4]`` picks the first four rows of
    that matrix in every block.  Each (checkpoint, block) pair becomes one
    point: the concatenation of its selected slices.
"""
import os
import re
import csv
import logging
from typing import Dict, List, Tuple, Mapping, Optional, Sequence, NamedTuple

import numpy as np

from ..exception import UsageError, SelectorError
from ..common.types import PathLike
from ..common.constants import (
    COMMA, PROJECTION_CSV, PROJECTION_SVG, FORMAT_VERSION, PROJECTION_METHODS,
    FORMAT_VERSION_KEY,
)


logger = logging.getLogger(__name__)

_TERM = re.compile(r'^([^\[\]]+?)(?:\[(-?\d*)(?::(-?\d*))?\])?$')

# loadings below this magnitude do not decide a component's sign
_SIGN_TOL = 1e-12


class SelectorTerm(NamedTuple):
    pattern: str
    start: Optional[int]
    stop: Optional[int]
    single: bool

    @property
    def per_block(self) -> bool:
        return '*' in self.pattern

    def regex(self) -> 're.Pattern[str]':
        return re.compile('^' + re.escape(self.pattern).replace(r'\*', r'(\d+)') + '$')

    def take(self, value: np.ndarray) -> np.ndarray:
        rows = np.atleast_1d(value)
        if self.single:
            return np.asarray(rows[self.start]).ravel()
        return rows[self.start:self.stop].ravel()


class ProjectedPoint(NamedTuple):
    label: str
    block: int
    x: float
    y: float


def parse_selector(selector: str) -> List[SelectorTerm]:
    """
    >>> parse_selector('encoder.blocks.*.conv.dw.weight[2]')[0]
    SelectorTerm(pattern='encoder.blocks.*.conv.dw.weight', start=2, stop=None, single=True)
    """
    terms: List[SelectorTerm] = []
    for raw in selector.split(COMMA):
        raw = raw.strip()
        match = _TERM.match(raw)
        if not raw or match is None:
            raise SelectorError(selector, 'malformed term %r' % raw)
        name, start, stop = match.groups()
        if name.count('*') > 1:
            raise SelectorError(selector, 'at most one * per term')
        single = bool(start) and ':' not in raw
        terms.append(SelectorTerm(
            name,
            int(start) if start else None,
            int(stop) if stop else None,
            single,
        ))
    return terms


def _blocks(selector: str, terms: Sequence[SelectorTerm], names: Sequence[str]) -> List[int]:
    per_block = [t for t in terms if t.per_block]
    if not per_block:
        return [0]
    found = None
    for term in per_block:
        regex = term.regex()
        indices = {int(m.group(1)) for m in map(regex.match, names) if m}
        found = indices if found is None else found & indices
    if not found:
        raise SelectorError(selector, 'no parameter matches')
    return sorted(found)


def select_vectors(
        selector: str,
        terms: Sequence[SelectorTerm],
        params: Mapping[str, np.ndarray],
        blocks: Sequence[int],
) -> Dict[int, np.ndarray]:
    vectors: Dict[int, np.ndarray] = {}
    for block in blocks:
        pieces = []
        for term in terms:
            name = term.pattern.replace('*', str(block))
            if name not in params:
                raise SelectorError(selector, '%s is missing' % name)
            try:
                pieces.append(term.take(params[name]))
            except IndexError as e:
                raise SelectorError(selector, '%s: %s' % (name, e)) from e
        vectors[block] = np.concatenate(pieces).astype(np.float64)
    return vectors


def _fix_signs(coords: np.ndarray, basis: np.ndarray) -> None:
    for k in range(basis.shape[0]):
        nonzero = np.flatnonzero(np.abs(basis[k]) > _SIGN_TOL)
        if nonzero.size and basis[k, nonzero[0]] < 0:
            basis[k] *= -1
            coords[:, k] *= -1


def project_matrix(
        points: np.ndarray,
        method: str = 'pca',
        seed: int = 0,
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """(N, d) rows to (N, 2) coordinates, plus the principal axes for PCA.

    PCA axes are oriented so that their first nonzero loading is positive.
    """
    if method not in PROJECTION_METHODS:
        raise UsageError('unknown projection method %s' % method)
    n, d = points.shape
    centered = points - points.mean(axis=0)
    coords = np.zeros((n, 2))
    if n < 2 or not np.any(np.abs(centered) > 0):
        return coords, np.zeros((2, d)) if method == 'pca' else None
    if method == 'tsne':
        from sklearn.manifold import TSNE   # pylint: disable=import-outside-toplevel
        tsne = TSNE(
            n_components=2,
            perplexity=float(min(30, n - 1)),
            init='pca' if d >= 2 else 'random',
            learning_rate='auto',
            random_state=seed,
        )
        return tsne.fit_transform(centered), None
    from sklearn.decomposition import PCA   # pylint: disable=import-outside-toplevel
    k = min(2, n, d)
    pca = PCA(n_components=k, svd_solver='full')
    reduced = pca.fit_transform(centered)
    basis = np.zeros((2, d))
    basis[:k] = pca.components_
    coords[:, :k] = reduced
    _fix_signs(coords, basis)
    return coords, basis


def write_csv(path: PathLike, points: Sequence[ProjectedPoint]) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow([FORMAT_VERSION_KEY, 'label', 'block', 'x', 'y'])
        for p in points:
            writer.writerow([FORMAT_VERSION, p.label, p.block, repr(p.x), repr(p.y)])


def write_svg(path: PathLike, points: Sequence[ProjectedPoint], title: str = '') -> None:
    # pylint: disable=import-outside-toplevel
    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        for label in dict.fromkeys(p.label for p in points):
            mine = [p for p in points if p.label == label]
            ax.scatter([p.x for p in mine], [p.y for p in mine], label=label, s=24)
            for p in mine:
                ax.annotate(str(p.block), (p.x, p.y), fontsize=7)
        ax.set_title(title)
        ax.legend(loc='best', fontsize=8)
        fig.savefig(path, format='svg', bbox_inches='tight')
    finally:
        plt.close(fig)


def _check_shapes(
        selector: str,
        terms: Sequence[SelectorTerm],
        checkpoints: Sequence[Mapping[str, np.ndarray]],
        labels: Sequence[str],
        blocks: Sequence[int],
) -> None:
    for block in blocks:
        for term in terms:
            name = term.pattern.replace('*', str(block))
            shapes = [np.shape(params[name]) if name in params else None for params in checkpoints]
            for label, shape in zip(labels, shapes):
                if shape is None:
                    raise SelectorError(selector, '%s is missing from %s' % (name, label))
                if shape != shapes[0]:
                    raise SelectorError(
                        selector, '%s has shape %s in %s but %s in %s' % (name, shape, label, shapes[0], labels[0]),
                    )


def project_params(
        checkpoints: Sequence[Mapping[str, np.ndarray]],
        selector: str,
        out_dir: Optional[PathLike] = None,
        labels: Optional[Sequence[str]] = None,
        method: str = 'pca',
        seed: int = 0,
) -> List[ProjectedPoint]:
    """Project the selected slices of every checkpoint into a shared plane.

    Only the names the selector resolves to matter: each must exist with
    the same shape in every checkpoint, so a single-rate baseline and a
    multi-branch model can be compared on their shared encoder.  Per-block
    terms use the blocks present in all checkpoints.  With ``out_dir``
    given, a CSV and an SVG scatter are written there.
    """
    if len(checkpoints) < 2:
        raise UsageError('projection needs at least two checkpoints')
    labels = list(labels) if labels is not None else ['ckpt%d' % i for i in range(len(checkpoints))]
    if len(labels) != len(checkpoints):
        raise UsageError('%d labels for %d checkpoints' % (len(labels), len(checkpoints)))
    terms = parse_selector(selector)
    found = set(_blocks(selector, terms, list(checkpoints[0])))
    for params in checkpoints[1:]:
        found &= set(_blocks(selector, terms, list(params)))
    if not found:
        raise SelectorError(selector, 'no block is shared by all checkpoints')
    blocks = sorted(found)
    _check_shapes(selector, terms, checkpoints, labels, blocks)
    rows: List[Tuple[str, int]] = []
    vectors: List[np.ndarray] = []
    for label, params in zip(labels, checkpoints):
        for block, vector in select_vectors(selector, terms, params, blocks).items():
            rows.append((label, block))
            vectors.append(vector)
    coords, _ = project_matrix(np.stack(vectors), method, seed)
    points = [
        ProjectedPoint(label, block, float(x), float(y))
        for (label, block), (x, y) in zip(rows, coords)
    ]
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        write_csv(os.path.join(out_dir, PROJECTION_CSV), points)
        write_svg(os.path.join(out_dir, PROJECTION_SVG), points, selector)
        logger.info('Projected %d points from %d checkpoints into %s', len(points), len(checkpoints), out_dir)
    return points
