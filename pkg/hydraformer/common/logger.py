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
from typing import Dict, List, Optional

from .constants import DEFAULT_LOG_FILE, DEFAULT_LOG_LEVEL, DEFAULT_LOG_FORMAT


SINGLE_CHAR_TO_LEVEL: Dict[str, str] = {
    'D': 'DEBUG',
    'I': 'INFO',
    'W': 'WARNING',
    'E': 'ERROR',
    'C': 'CRITICAL',
}

# Loggers of plotting dependencies, kept at INFO or above.
CHATTY_LOGGERS = ('matplotlib', 'PIL')


def single_char_to_level(char: str) -> int:
    """
    >>> single_char_to_level('debug') == logging.DEBUG
    True
    """
    level: int = getattr(logging, SINGLE_CHAR_TO_LEVEL[char.upper()[0]])
    return level


class Logger:
    """Logging setup of one command invocation.

    Records go to log_file or to stderr; stdout carries only the JSON
    result line of a command.
    """

    @staticmethod
    def setup(
            log_file: Optional[str] = DEFAULT_LOG_FILE,
            log_level: str = DEFAULT_LOG_LEVEL,
            log_format: str = DEFAULT_LOG_FORMAT,
    ) -> None:
        level = single_char_to_level(log_level)
        handlers: List[logging.Handler] = [
            logging.FileHandler(log_file, mode='a', encoding='utf-8')
            if log_file else logging.StreamHandler(sys.stderr),
        ]
        logging.basicConfig(level=level, format=log_format, handlers=handlers, force=True)
        # numpy RuntimeWarnings during training end up in the same log
        logging.captureWarnings(True)
        for name in CHATTY_LOGGERS:
            logging.getLogger(name).setLevel(max(level, logging.INFO))
