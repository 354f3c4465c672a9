# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import sys
import logging
from typing import List, Optional

from . import command   # noqa: F401  pylint: disable=unused-import
from .exception import UsageError, HydraFormerException
from .common.flag import FlagParser, flags
from .common.constants import ERROR_PREFIX


logger = logging.getLogger(__name__)


def error_line(e: HydraFormerException) -> str:
    """
    >>> error_line(UsageError('unknown flag --x'))
    'hydraformer-error: UsageError: unknown flag --x'
    """
    message = ' '.join(str(e).split())
    return '%s: %s: %s' % (ERROR_PREFIX, type(e).__name__, message)


def main(input_args: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    Errors are printed as a single stderr line, exit code 2 for usage
    errors and 1 for everything else hydraformer raises.
    """
    try:
        args = FlagParser.initialize(input_args)
        return flags.dispatch(args)
    except UsageError as e:
        print(error_line(e), file=sys.stderr)
        return 2
    except HydraFormerException as e:
        logger.debug('command failed', exc_info=True)
        print(error_line(e), file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main(sys.argv[1:]))
