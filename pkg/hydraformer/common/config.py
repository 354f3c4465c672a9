# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Flat ``key = value`` configuration files.

    Lines starting with ``#`` and blank lines are ignored.  The first key of
    every file is ``format_version``.  Values are coerced with the type
    annotations of the NamedTuple record they populate; lists are comma
    separated.
"""
import logging
from typing import (
    Any, Dict, List, Type, Tuple, Union, Mapping, TypeVar, Optional,
    get_type_hints,
)

from .types import PathLike
from .utils import text_
from .constants import (
    HASH, COMMA, EQUAL, FORMAT_VERSION, FORMAT_VERSION_KEY,
)
from ..exception import ConfigError


logger = logging.getLogger(__name__)

R = TypeVar('R')

_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


def parse_kv_text(text: str, source: str = '<string>') -> Dict[str, str]:
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(HASH):
            continue
        key, sep, value = line.partition(EQUAL)
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(
                'line %d is not of the form key = value' % lineno, key=source,
            )
        if not values and key != FORMAT_VERSION_KEY:
            raise ConfigError(
                'first key must be %s, got %s' % (FORMAT_VERSION_KEY, key), key=source,
            )
        if key in values:
            raise ConfigError('duplicate key on line %d' % lineno, key=key)
        values[key] = value
    if not values:
        raise ConfigError('empty configuration, %s is required' % FORMAT_VERSION_KEY, key=source)
    if values[FORMAT_VERSION_KEY] != str(FORMAT_VERSION):
        raise ConfigError(
            'unsupported version %s, expected %d' % (values[FORMAT_VERSION_KEY], FORMAT_VERSION),
            key=FORMAT_VERSION_KEY,
        )
    del values[FORMAT_VERSION_KEY]
    return values


def read_kv_file(path: PathLike) -> Dict[str, str]:
    try:
        with open(path, 'rb') as f:
            text = text_(f.read())
    except OSError as e:
        raise ConfigError(str(e), key=str(path)) from e
    logger.debug('Read configuration from %s', path)
    return parse_kv_text(text, source=str(path))


def coerce_value(raw: str, annotation: Any, key: str) -> Any:
    """Convert a raw string to the annotated type.

    >>> coerce_value('4,6,8', List[int], 'frontend.factors')
    [4, 6, 8]
    >>> coerce_value('none', Optional[str], 'train.eval_manifest') is None
    True
    """
    origin = getattr(annotation, '__origin__', None)
    args: Tuple[Any, ...] = getattr(annotation, '__args__', ())
    if origin is Union:
        inner = [a for a in args if a is not type(None)]
        if raw.lower() in ('', 'none', 'null'):
            return None
        return coerce_value(raw, inner[0], key)
    if origin in (list, List, tuple, Tuple):
        item = args[0] if args else str
        items = [
            coerce_value(part.strip(), item, key)
            for part in raw.split(COMMA) if part.strip()
        ]
        return items if origin in (list, List) else tuple(items)
    try:
        if annotation is bool:
            lowered = raw.lower()
            if lowered in _TRUE:
                return True
            if lowered in _FALSE:
                return False
            raise ValueError('not a boolean: %s' % raw)
        if annotation in (int, float, str):
            return annotation(raw)
    except ValueError as e:
        raise ConfigError(str(e), key=key) from e
    raise ConfigError('unsupported field type %r' % annotation, key=key)


def build_record(
        record_cls: Type[R],
        values: Mapping[str, str],
        prefix: str = '',
) -> R:
    """Populate a NamedTuple record from the keys under ``prefix``.

    Missing keys keep the record defaults.  Keys under ``prefix`` that name
    no field are a :exc:`ConfigError`.
    """
    hints = get_type_hints(record_cls)
    defaults: Dict[str, Any] = getattr(record_cls, '_field_defaults', {})
    fields: Tuple[str, ...] = getattr(record_cls, '_fields')
    kwargs: Dict[str, Any] = {}
    for key, raw in values.items():
        if not key.startswith(prefix):
            continue
        field = key[len(prefix):]
        if field not in fields:
            raise ConfigError('unknown key', key=key)
        kwargs[field] = coerce_value(raw, hints[field], key)
    missing = [f for f in fields if f not in kwargs and f not in defaults]
    if missing:
        raise ConfigError('required key missing', key=prefix + missing[0])
    return record_cls(**kwargs)     # type: ignore[call-arg]


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return COMMA.join(format_value(v) for v in value)
    if value is None:
        return 'none'
    return str(value)


def dump_records(sections: List[Tuple[str, Any]]) -> str:
    """Render records back into the flat format, version first."""
    lines = ['%s = %d' % (FORMAT_VERSION_KEY, FORMAT_VERSION)]
    for prefix, record in sections:
        for field, value in record._asdict().items():
            lines.append('%s%s = %s' % (prefix, field, format_value(value)))
    return '\n'.join(lines) + '\n'
