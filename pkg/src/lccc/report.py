"""Rendering of command dumps as text or as structured JSON."""
import json
from typing import Any, Iterable, Optional

from lccc.constants import LISTING_TRUNCATION
from lccc.finset import FinMap
from lccc.slice import SliceObj


def truncate(items: Iterable[str], limit: int = LISTING_TRUNCATION) -> list[str]:
    items = list(items)
    if len(items) <= limit:
        return items
    return items[:limit] + [f'(+{len(items) - limit} more)']


def map_entry(f: FinMap, limit: int = LISTING_TRUNCATION) -> dict:
    table = {x: f.table[x] for x in f.dom.elements[:limit]}
    if len(f.dom) > limit:
        table['…'] = f'(+{len(f.dom) - limit} more)'
    return {'dom': f.dom.name, 'cod': f.cod.name, 'table': table}


def slice_entry(x: SliceObj) -> dict:
    return {
        'base': x.base.name,
        'total': len(x.total),
        'fiber_sizes': list(x.fiber_sizes()),
        'fibers': [
            {'over': a, 'size': len(fiber), 'elements': truncate(fiber.elements)}
            for a, fiber in x.fibers.items()
        ],
    }


def render_structured(dump: dict) -> str:
    return json.dumps(dump, indent=2, ensure_ascii=False) + '\n'


def _render_value(key: str, value: Any, indent: int, lines: list[str]):
    pad = '  ' * indent
    if isinstance(value, dict):
        lines.append(f'{pad}{key}:')
        for k, v in value.items():
            _render_value(str(k), v, indent + 1, lines)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines.append(f'{pad}{key}:')
        for i, v in enumerate(value):
            _render_value(f'- [{i}]', v, indent + 1, lines)
    elif isinstance(value, list):
        lines.append(f'{pad}{key}: {", ".join(str(v) for v in value)}')
    else:
        lines.append(f'{pad}{key}: {value}')


def render_text(dump: dict, elapsed: Optional[float] = None) -> str:
    lines = []
    for key, value in dump.items():
        _render_value(key, value, 0, lines)
    if elapsed is not None:
        lines.append(f'wall_time: {elapsed:.3f}s')
    return '\n'.join(lines) + '\n'


def render(dump: dict, fmt: str = 'text', elapsed: Optional[float] = None) -> str:
    if fmt == 'structured':
        return render_structured(dump)
    if fmt == 'text':
        return render_text(dump, elapsed)
    raise ValueError(f'Unknown report format {fmt!r}')
