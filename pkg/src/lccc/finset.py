"""The category of finite sets and total functions.

Objects are named, ordered lists of distinct element labels. Order only fixes
enumeration order; equality of objects is equality of element sets. Morphisms
carry an explicit table and include their codomain in their identity.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterator, Mapping, NamedTuple, Optional

from lccc.constants import DEFAULT_LIMIT, TERMINAL_ELEMENT, TERMINAL_NAME
from lccc.errors import (
    CodomainMismatch,
    DomainMismatch,
    EnumerationTooLarge,
    InvalidLabel,
    LabelCollision,
    ShapeMismatch,
    TotalityError,
    UnknownElement,
)

PAIR_OPEN = '⟨'
PAIR_CLOSE = '⟩'
PAIR_SEP = '|'

# structure characters of composite labels; other labels are escaped with ESCAPE
BRACKETS = {PAIR_OPEN: PAIR_CLOSE, '{': '}', '(': ')'}
CLOSERS = frozenset(BRACKETS.values())
SEPARATORS = frozenset((PAIR_SEP, ',', ';', '↦'))
ESCAPE = '\\'
RESERVED = frozenset(BRACKETS) | CLOSERS | SEPARATORS | {ESCAPE}


def check_label(label: str) -> str:
    if not isinstance(label, str):
        raise InvalidLabel(f'Element labels must be strings, got {label!r}')
    if not label:
        raise InvalidLabel('Element labels must be nonempty')
    if '\n' in label or '\r' in label:
        raise InvalidLabel(f'Element label {label!r} contains a newline')
    return label


@dataclass(frozen=True, eq=False)
class FinSetObj:
    name: str
    elements: tuple[str, ...] = ()

    def __post_init__(self):
        elements = tuple(check_label(e) for e in self.elements)
        if len(set(elements)) != len(elements):
            seen = set()
            for e in elements:
                if e in seen:
                    raise InvalidLabel(f'Duplicate element {e!r} in {self.name}')
                seen.add(e)
        object.__setattr__(self, 'elements', elements)

    @cached_property
    def element_set(self) -> frozenset[str]:
        return frozenset(self.elements)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def index(self, element: str) -> int:
        try:
            return self._positions[element]
        except KeyError:
            raise UnknownElement(element, self.name) from None

    def require(self, element: str) -> str:
        if element not in self.element_set:
            raise UnknownElement(element, self.name)
        return element

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, element) -> bool:
        return element in self.element_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSetObj):
            return NotImplemented
        return self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash(self.element_set)

    def __repr__(self) -> str:
        return f'{self.name}{{{", ".join(self.elements)}}}'


@dataclass(frozen=True, eq=False)
class FinMap:
    dom: FinSetObj
    cod: FinSetObj
    table: Mapping[str, str]
    name: str = field(default='')

    def __post_init__(self):
        table = dict(self.table)
        for x in self.dom.elements:
            if x not in table:
                raise TotalityError(
                    f'Map {self.label} is undefined on {x!r} of {self.dom.name}'
                )
        if len(table) != len(self.dom):
            extra = next(x for x in table if x not in self.dom)
            raise TotalityError(
                f'Map {self.label} assigns {extra!r}, which is not in {self.dom.name}'
            )
        for x in self.dom.elements:
            if table[x] not in self.cod:
                raise CodomainMismatch(
                    f'Map {self.label} sends {x!r} to {table[x]!r}, '
                    f'which is not in {self.cod.name}'
                )
        ordered = {x: table[x] for x in self.dom.elements}
        object.__setattr__(self, 'table', MappingProxyType(ordered))

    @property
    def label(self) -> str:
        return self.name or f'{self.dom.name}→{self.cod.name}'

    def named(self, name: str) -> 'FinMap':
        return FinMap(self.dom, self.cod, self.table, name=name)

    def __call__(self, x: str) -> str:
        try:
            return self.table[x]
        except KeyError:
            raise UnknownElement(x, self.dom.name) from None

    def image(self) -> frozenset[str]:
        return frozenset(self.table.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinMap):
            return NotImplemented
        return map_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, frozenset(self.table.items())))

    def __repr__(self) -> str:
        body = ', '.join(f'{x}↦{y}' for x, y in self.table.items())
        return f'{self.label}: {self.dom.name}→{self.cod.name} {{{body}}}'


class ProductCone(NamedTuple):
    obj: FinSetObj
    pi1: FinMap
    pi2: FinMap


class CoproductCocone(NamedTuple):
    obj: FinSetObj
    inl: FinMap
    inr: FinMap


def is_atomic(label: str) -> bool:
    """Balanced brackets, no escapes and no separator outside brackets."""
    closing = []
    for ch in label:
        if ch == ESCAPE:
            return False
        if ch in BRACKETS:
            closing.append(BRACKETS[ch])
        elif ch in CLOSERS:
            if not closing or closing.pop() != ch:
                return False
        elif ch in SEPARATORS and not closing:
            return False
    return not closing


def quote(label: str) -> str:
    """Label as a component of a composite label.

    Atomic labels, including every composite label, are kept as they are. Any
    other label has each reserved character escaped, so quoting is injective.
    """
    if is_atomic(label):
        return label
    return ''.join(ESCAPE + ch if ch in RESERVED else ch for ch in label)


def unquote(text: str) -> str:
    if ESCAPE not in text:
        return text
    chars = iter(text)
    return ''.join(next(chars, '') if ch == ESCAPE else ch for ch in chars)


def split_top(body: str, sep: str) -> list[str]:
    """Split at separators outside brackets, skipping escaped characters."""
    parts, start, depth, i = [], 0, 0, 0
    while i < len(body):
        ch = body[i]
        if ch == ESCAPE:
            i += 2
            continue
        if ch in BRACKETS:
            depth += 1
        elif ch in CLOSERS:
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(body[start:i])
            start = i + 1
        i += 1
    parts.append(body[start:])
    return parts


def pair_label(x: str, y: str) -> str:
    return f'{PAIR_OPEN}{quote(x)}{PAIR_SEP}{quote(y)}{PAIR_CLOSE}'


def decode_pair(label: str) -> tuple[str, str]:
    """Split a canonical pair label at its top-level separator."""
    if not (label.startswith(PAIR_OPEN) and label.endswith(PAIR_CLOSE)):
        raise InvalidLabel(f'{label!r} is not a pair label')
    parts = split_top(label[len(PAIR_OPEN) : -len(PAIR_CLOSE)], PAIR_SEP)
    if len(parts) != 2:
        raise InvalidLabel(f'{label!r} has no single top-level separator')
    return unquote(parts[0]), unquote(parts[1])


def distinct_labels(name: str, labels: list[str]) -> tuple[str, ...]:
    if len(set(labels)) != len(labels):
        raise LabelCollision(f'Canonical labels of {name} collide')
    return tuple(labels)


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g ∘ f, in function order."""
    if f.cod != g.dom:
        raise DomainMismatch(
            f'Cannot compose {g.label} after {f.label}: '
            f'{f.cod.name} is not {g.dom.name}'
        )
    return FinMap(f.dom, g.cod, {x: g.table[y] for x, y in f.table.items()})


def identity(X: FinSetObj) -> FinMap:
    return FinMap(X, X, {x: x for x in X.elements}, name=f'id_{X.name}')


def map_equal(f: FinMap, g: FinMap) -> bool:
    return first_difference(f, g) is None


def first_difference(f: FinMap, g: FinMap) -> Optional[str]:
    """None when equal, otherwise where the two maps first disagree."""
    if f.dom != g.dom:
        return f'domain {f.dom.name} vs {g.dom.name}'
    if f.cod != g.cod:
        return f'codomain {f.cod.name} vs {g.cod.name}'
    for x in f.dom.elements:
        if f.table[x] != g.table[x]:
            return f'{x}: {f.table[x]} vs {g.table[x]}'
    return None


def hom_set(X: FinSetObj, Y: FinSetObj, limit: int = DEFAULT_LIMIT) -> list[FinMap]:
    """All total functions X → Y in mixed-radix order over X's element order."""
    required = len(Y) ** len(X)
    if required > limit:
        raise EnumerationTooLarge(f'Hom({X.name}, {Y.name})', required, limit)
    logging.debug(f'Enumerating {required} maps {X.name} → {Y.name}')
    return [
        FinMap(X, Y, dict(zip(X.elements, values)))
        for values in itertools.product(Y.elements, repeat=len(X))
    ]


def terminal() -> FinSetObj:
    return FinSetObj(TERMINAL_NAME, (TERMINAL_ELEMENT,))


def unique_to_terminal(X: FinSetObj) -> FinMap:
    return FinMap(X, terminal(), {x: TERMINAL_ELEMENT for x in X.elements}, name='!')


def product(X: FinSetObj, Y: FinSetObj) -> ProductCone:
    name = f'{X.name}×{Y.name}'
    pairs = [(x, y) for x in X.elements for y in Y.elements]
    obj = FinSetObj(name, distinct_labels(name, [pair_label(x, y) for x, y in pairs]))
    pi1 = FinMap(obj, X, {pair_label(x, y): x for x, y in pairs}, name='π1')
    pi2 = FinMap(obj, Y, {pair_label(x, y): y for x, y in pairs}, name='π2')
    return ProductCone(obj, pi1, pi2)


def pairing(f: FinMap, g: FinMap) -> FinMap:
    """⟨f, g⟩ : S → X × Y, the unique map with π1∘⟨f,g⟩ = f and π2∘⟨f,g⟩ = g."""
    if f.dom != g.dom:
        raise DomainMismatch(
            f'Cannot pair {f.label} with {g.label}: domains '
            f'{f.dom.name} and {g.dom.name} differ'
        )
    obj = product(f.cod, g.cod).obj
    return FinMap(f.dom, obj, {s: pair_label(f.table[s], g.table[s]) for s in f.dom})


def product_map(f: FinMap, g: FinMap) -> FinMap:
    """f × g : X × Y → X′ × Y′."""
    cone = product(f.dom, g.dom)
    return pairing(compose(f, cone.pi1), compose(g, cone.pi2))


def inl_label(x: str) -> str:
    return f'inl{PAIR_OPEN}{quote(x)}{PAIR_CLOSE}'


def inr_label(y: str) -> str:
    return f'inr{PAIR_OPEN}{quote(y)}{PAIR_CLOSE}'


def coproduct(X: FinSetObj, Y: FinSetObj) -> CoproductCocone:
    name = f'{X.name}+{Y.name}'
    labels = [inl_label(x) for x in X.elements] + [inr_label(y) for y in Y.elements]
    obj = FinSetObj(name, distinct_labels(name, labels))
    inl = FinMap(X, obj, {x: inl_label(x) for x in X.elements}, name='ι1')
    inr = FinMap(Y, obj, {y: inr_label(y) for y in Y.elements}, name='ι2')
    return CoproductCocone(obj, inl, inr)


def copairing(f: FinMap, g: FinMap) -> FinMap:
    """[f, g] : X + Y → Z, the unique map with [f,g]∘ι1 = f and [f,g]∘ι2 = g."""
    if f.cod != g.cod:
        raise CodomainMismatch(
            f'Cannot copair {f.label} with {g.label}: codomains '
            f'{f.cod.name} and {g.cod.name} differ'
        )
    obj = coproduct(f.dom, g.dom).obj
    table = {inl_label(x): y for x, y in f.table.items()}
    table.update({inr_label(x): y for x, y in g.table.items()})
    return FinMap(obj, f.cod, table)


def preimage(f: FinMap, a: str) -> FinSetObj:
    f.cod.require(a)
    return FinSetObj(
        f'fiber({f.name or "f"},{a})', tuple(b for b, y in f.table.items() if y == a)
    )


def fiber_decomposition(f: FinMap) -> dict[str, FinSetObj]:
    """Fibers of f in codomain order; they partition the domain."""
    members: dict[str, list[str]] = {a: [] for a in f.cod.elements}
    for b, a in f.table.items():
        members[a].append(b)
    name = f.name or 'f'
    return {a: FinSetObj(f'fiber({name},{a})', tuple(bs)) for a, bs in members.items()}


def fiber_sizes(f: FinMap) -> tuple[int, ...]:
    return tuple(len(fiber) for fiber in fiber_decomposition(f).values())


def is_bijection(f: FinMap) -> bool:
    return len(f.dom) == len(f.cod) and len(f.image()) == len(f.cod)


def inverse(f: FinMap) -> FinMap:
    if not is_bijection(f):
        raise ShapeMismatch(f'{f.label} is not a bijection')
    return FinMap(f.cod, f.dom, {y: x for x, y in f.table.items()})