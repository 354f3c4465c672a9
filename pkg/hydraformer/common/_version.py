# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Version definition.
"""
from typing import Tuple, Union


VersionPart = Union[int, str]


def _installed_version(distribution_name: str) -> str:
    # pylint: disable=import-outside-toplevel
    from importlib.metadata import PackageNotFoundError, version

    try:
        return version(distribution_name)
    except PackageNotFoundError:  # pragma: no cover
        # Source checkout without ./write-scm-version.sh
        return '0.0.0.dev0'


def parse_version(text: str) -> Tuple[VersionPart, ...]:
    """Numeric release parts as ints, the rest as strings, local label last.

    >>> parse_version('2.1.0.dev3+g1a2b3c')
    (2, 1, 0, 'dev3', 'g1a2b3c')
    >>> parse_version('0.4.1')
    (0, 4, 1, '')
    """
    public, _, local = text.partition('+')
    parts = [int(p) if p.isdigit() else p for p in public.split('.')]
    return (*parts, local)


try:
    # pylint: disable=unused-import
    from ._scm_version import version as __version__  # noqa: WPS433, WPS436
    from ._scm_version import version_tuple as _scm_tuple  # noqa: WPS433, WPS436
    VERSION: Tuple[VersionPart, ...] = tuple(_scm_tuple)
except ImportError:  # pragma: no cover
    __version__ = _installed_version('hydraformer')  # noqa: WPS440
    VERSION = parse_version(__version__)
