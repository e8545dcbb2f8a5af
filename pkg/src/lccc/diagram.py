"""Diagram files: named finite sets and maps between them, stored as JSON.

    {
      "sets": {"A": ["a1", "a2"], "B": ["b1", "b2", "b3"]},
      "maps": {"f": {"dom": "B", "cod": "A", "table": {"b1": "a1", ...}}},
      "inject": "swap-unit-counit"            (optional, negative controls only)
    }
"""
import functools
import json
import logging
from dataclasses import dataclass, field
from typing import Optional

import fsspec

from lccc.constants import CORRUPTIONS
from lccc.errors import DiagramError, LCCCError
from lccc.finset import FinMap, FinSetObj
from lccc.slice import SliceObj


def read_text(path: str) -> str:
    try:
        with fsspec.open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except FileNotFoundError:
        raise DiagramError('No such file', location=path) from None
    except UnicodeDecodeError as e:
        raise DiagramError(f'Not valid UTF-8: {e.reason}', location=path) from None
    except OSError as e:
        raise DiagramError(e.strerror or str(e), location=path) from None


def write_text(path: str, text: str):
    with fsspec.open(path, 'w', encoding='utf-8') as f:
        f.write(text)


@dataclass
class Diagram:
    sets: dict[str, FinSetObj] = field(default_factory=dict)
    maps: dict[str, FinMap] = field(default_factory=dict)
    inject: Optional[str] = None
    source: str = ''

    def get_set(self, name: str) -> FinSetObj:
        if name not in self.sets:
            raise DiagramError(f'Unknown set {name!r}', location=f'{self.source}:sets')
        return self.sets[name]

    def get_map(self, name: str) -> FinMap:
        if name not in self.maps:
            raise DiagramError(f'Unknown map {name!r}', location=f'{self.source}:maps')
        return self.maps[name]

    def family(self, name: str) -> SliceObj:
        return SliceObj.over(self.get_map(name))


def _expect(value, kind, location: str):
    if not isinstance(value, kind):
        raise DiagramError(
            f'Expected {kind.__name__}, got {type(value).__name__}', location=location
        )
    return value


def _unique_keys(source: str, pairs: list[tuple[str, object]]) -> dict:
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise DiagramError(
                f'Key {key!r} appears twice in one object', location=source
            )
        obj[key] = value
    return obj


def parse_diagram(text: str, source: str = '<string>') -> Diagram:
    try:
        hook = functools.partial(_unique_keys, source)
        data = json.loads(text, object_pairs_hook=hook)
    except json.JSONDecodeError as e:
        raise DiagramError(e.msg, location=source, line=e.lineno, column=e.colno) from None
    _expect(data, dict, source)
    unknown = sorted(set(data) - {'sets', 'maps', 'inject'})
    if unknown:
        raise DiagramError(f'Unknown top-level keys {unknown}', location=source)

    diagram = Diagram(source=source)
    for name, elements in _expect(data.get('sets', {}), dict, f'{source}:sets').items():
        where = f'{source}:sets.{name}'
        _expect(elements, list, where)
        try:
            diagram.sets[name] = FinSetObj(name, tuple(elements))
        except LCCCError as e:
            raise DiagramError(str(e), location=where) from None

    for name, spec in _expect(data.get('maps', {}), dict, f'{source}:maps').items():
        where = f'{source}:maps.{name}'
        _expect(spec, dict, where)
        missing = [k for k in ('dom', 'cod', 'table') if k not in spec]
        if missing:
            raise DiagramError(f'Missing keys {missing}', location=where)
        if name in diagram.sets:
            raise DiagramError(f'{name!r} names both a set and a map', location=where)
        dom = diagram.sets.get(spec['dom'])
        cod = diagram.sets.get(spec['cod'])
        if dom is None or cod is None:
            ref = spec['dom'] if dom is None else spec['cod']
            raise DiagramError(f'Undeclared set {ref!r}', location=where)
        try:
            diagram.maps[name] = FinMap(
                dom, cod, _expect(spec['table'], dict, f'{where}.table'), name=name
            )
        except LCCCError as e:
            raise DiagramError(str(e), location=f'{where}.table') from None

    inject = data.get('inject')
    if inject is not None and inject not in CORRUPTIONS:
        raise DiagramError(
            f'Unknown injection {inject!r}; expected one of {list(CORRUPTIONS)}',
            location=f'{source}:inject',
        )
    diagram.inject = inject
    logging.debug(f'Loaded {source}: {len(diagram.sets)} sets, {len(diagram.maps)} maps')
    return diagram


def load_diagram(path: str) -> Diagram:
    return parse_diagram(read_text(path), source=path)
