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
import argparse
from typing import Any, Dict, List, Callable, Optional, NoReturn

from .logger import SINGLE_CHAR_TO_LEVEL, Logger
from .version import __version__
from .constants import (
    DEFAULT_VERSION, DEFAULT_LOG_FILE, DEFAULT_LOG_LEVEL, DEFAULT_LOG_FORMAT,
)
from ..exception import UsageError


__homepage__ = 'https://github.com/hydraformer/hydraformer'

SubcommandHandler = Callable[[argparse.Namespace], int]


class _ArgumentParser(argparse.ArgumentParser):
    """argparse prints usage and exits on error, we raise instead."""

    def error(self, message: str) -> NoReturn:
        raise UsageError('%s: %s' % (self.prog, message))


class FlagParser:
    """Wrapper around argparse module.

    Import `flag.flags` and use `add_argument` API to define global flags,
    or `add_subcommand` to register a subcommand together with its handler.
    The returned parser accepts the subcommand's own flags.

    Best Practice::

       1. Define flags and subcommands at the top of your module.
       2. DO NOT register them within functions, a second registration
          of the same subcommand raises at import time.

    """

    def __init__(self) -> None:
        self.args: Optional[argparse.Namespace] = None
        self.actions: List[str] = []
        self.handlers: Dict[str, SubcommandHandler] = {}
        self.parser = _ArgumentParser(
            prog='hydraformer',
            description='hydraformer v%s' % __version__,
            epilog='hydraformer not working? Report at: %s/issues/new' % __homepage__,
        )
        self.subparsers = self.parser.add_subparsers(
            dest='command', metavar='command',
        )

    def add_argument(self, *args: Any, **kwargs: Any) -> argparse.Action:
        """Register a global flag."""
        action = self.parser.add_argument(*args, **kwargs)
        self.actions.append(action.dest)
        return action

    def add_subcommand(
            self,
            name: str,
            handler: SubcommandHandler,
            help: str,   # pylint: disable=redefined-builtin
    ) -> argparse.ArgumentParser:
        """Register a subcommand and return its parser."""
        if name in self.handlers:
            raise UsageError('subcommand %s registered twice' % name)
        self.handlers[name] = handler
        parser: argparse.ArgumentParser = self.subparsers.add_parser(
            name, help=help, description=help,
        )
        return parser

    def parse_args(self, input_args: Optional[List[str]]) -> argparse.Namespace:
        """Parse flags from input arguments."""
        self.args = self.parser.parse_args(input_args)
        return self.args

    @staticmethod
    def initialize(input_args: Optional[List[str]] = None) -> argparse.Namespace:
        if input_args is None:
            input_args = []
        args = flags.parse_args(input_args)
        # Print version and exit
        if args.version:
            print(__version__)
            sys.exit(0)
        if args.command is None:
            raise UsageError('a command is required, one of %s' % ', '.join(sorted(flags.handlers)))
        if args.log_level[:1].upper() not in SINGLE_CHAR_TO_LEVEL:
            raise UsageError('unknown log level %s' % args.log_level)
        Logger.setup(args.log_file, args.log_level, args.log_format)
        return args

    def dispatch(self, args: argparse.Namespace) -> int:
        return self.handlers[args.command](args)


flags = FlagParser()

flags.add_argument(
    '--version',
    '-v',
    action='store_true',
    default=DEFAULT_VERSION,
    help='Prints hydraformer version.',
)
flags.add_argument(
    '--log-level',
    type=str,
    default=DEFAULT_LOG_LEVEL,
    help='Valid options: DEBUG, INFO (default), WARNING, ERROR, CRITICAL. '
    'Both upper and lowercase values are allowed. '
    'You may also simply use the leading character e.g. --log-level d',
)
flags.add_argument(
    '--log-file',
    type=str,
    default=DEFAULT_LOG_FILE,
    help='Default: sys.stderr. Log file destination.',
)
flags.add_argument(
    '--log-format',
    type=str,
    default=DEFAULT_LOG_FORMAT,
    help='Log format for Python logger.',
)
