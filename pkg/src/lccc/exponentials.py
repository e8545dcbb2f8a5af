"""Exponential objects, in FinSet and fiberwise in slices.

An element of Y^X is the graph label of a total function X → Y. Currying and
uncurrying are the two halves of Hom(S × X, Y) ≅ Hom(S, Y^X).
"""
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping, Optional

from lccc.constants import DEFAULT_LIMIT, TERMINAL_ELEMENT
from lccc.errors import BaseMismatch, EnumerationTooLarge, ShapeMismatch, UnknownElement
from lccc.finset import (
    FinMap,
    FinSetObj,
    compose,
    distinct_labels,
    hom_set,
    identity,
    pair_label,
    product,
    product_map,
    quote,
    terminal,
)
from lccc.limits import Cospan, pullback
from lccc.slice import (
    SliceMor,
    SliceObj,
    slice_compose,
    slice_identity,
    slice_product,
    slice_product_map,
    slice_terminal,
)


def graph_label(g: FinMap, order: Optional[FinSetObj] = None) -> str:
    xs = (order if order is not None else g.dom).elements
    body = ';'.join(f'{quote(x)}↦{quote(g.table[x])}' for x in xs)
    return f'fn{{{body}}}'


@dataclass(frozen=True, eq=False)
class ExpObj:
    source: FinSetObj
    target: FinSetObj
    carrier: FinSetObj
    ev: FinMap
    graphs: Mapping[str, FinMap]

    def decode(self, label: str) -> FinMap:
        try:
            return self.graphs[label]
        except KeyError:
            raise UnknownElement(label, self.carrier.name) from None

    def encode(self, g: FinMap) -> str:
        if g.dom != self.source or g.cod != self.target:
            raise ShapeMismatch(
                f'{g.label} is not a map {self.source.name} → {self.target.name}'
            )
        return self.carrier.require(graph_label(g, self.source))


def exp(X: FinSetObj, Y: FinSetObj, limit: int = DEFAULT_LIMIT) -> ExpObj:
    """Y^X with its evaluation map ev : Y^X × X → Y."""
    functions = hom_set(X, Y, limit)
    name = f'{Y.name}^{X.name}'
    carrier = FinSetObj(name, distinct_labels(name, [graph_label(g) for g in functions]))
    graphs = {graph_label(g): g for g in functions}
    cone = product(carrier, X)
    table = {
        pair_label(label, x): g.table[x] for label, g in graphs.items() for x in X.elements
    }
    ev = FinMap(cone.obj, Y, table, name='ev')
    logging.debug(f'Built {name} with {len(carrier)} elements')
    return ExpObj(X, Y, carrier, ev, MappingProxyType(graphs))


def curry(
    u: FinMap,
    S: FinSetObj,
    X: FinSetObj,
    E: Optional[ExpObj] = None,
    limit: int = DEFAULT_LIMIT,
) -> FinMap:
    """λ-abstraction: the unique v : S → Y^X with ev ∘ (v × id_X) = u."""
    if u.dom != product(S, X).obj:
        raise ShapeMismatch(f'{u.label} does not start at {S.name}×{X.name}')
    if E is None:
        E = exp(X, u.cod, limit)
    elif E.source != X or E.target != u.cod:
        raise ShapeMismatch(
            f'{E.carrier.name} is not the exponential {u.cod.name}^{X.name}'
        )
    table = {}
    for s in S.elements:
        values = {x: u.table[pair_label(s, x)] for x in X.elements}
        table[s] = E.encode(FinMap(X, u.cod, values))
    return FinMap(S, E.carrier, table, name=f'λ{u.name}' if u.name else '')


def uncurry(v: FinMap, E: ExpObj) -> FinMap:
    """ev ∘ (v × id_X) : S × X → Y."""
    if v.cod != E.carrier:
        raise ShapeMismatch(f'{v.label} does not land in {E.carrier.name}')
    return compose(E.ev, product_map(v, identity(E.source)))


def exp_fmap(f: FinMap, X: FinSetObj, limit: int = DEFAULT_LIMIT) -> FinMap:
    """(f ∘ −) : Y^X → Z^X for f : Y → Z."""
    src, dst = exp(X, f.dom, limit), exp(X, f.cod, limit)
    return FinMap(
        src.carrier,
        dst.carrier,
        {label: dst.encode(compose(f, g)) for label, g in src.graphs.items()},
        name=f'{f.name or "f"}^{X.name}',
    )


def identity_point(X: FinSetObj, limit: int = DEFAULT_LIMIT) -> FinMap:
    """1 → X^X, picking out the identity function."""
    E = exp(X, X, limit)
    return FinMap(terminal(), E.carrier, {TERMINAL_ELEMENT: E.encode(identity(X))})


def _right_inverse_pullback(f: FinMap, limit: int):
    return pullback(Cospan(identity_point(f.cod, limit), exp_fmap(f, f.cod, limit)))


def right_inverse_object(f: FinMap, limit: int = DEFAULT_LIMIT) -> FinSetObj:
    """Pullback of the identity point along f ∘ −: one element per right inverse of f."""
    return _right_inverse_pullback(f, limit).carrier


def right_inverses(f: FinMap, limit: int = DEFAULT_LIMIT) -> list[FinMap]:
    pb = _right_inverse_pullback(f, limit)
    E = exp(f.cod, f.dom, limit)
    return [E.decode(pb.q.table[z]) for z in pb.carrier.elements]


@dataclass(frozen=True, eq=False)
class SliceExpObj:
    """p^q in C/A, built fiber by fiber: over a, the functions q_a → p_a."""

    target: SliceObj
    exponent: SliceObj
    obj: SliceObj
    ev: SliceMor
    fibers: Mapping[str, ExpObj]
    elements: Mapping[str, tuple[str, FinMap]]

    def __iter__(self) -> Iterator:
        return iter((self.obj, self.ev))

    def encode(self, a: str, g: FinMap) -> str:
        graph = self.fibers[self.obj.base.require(a)].encode(g)
        return pair_label(a, graph)

    def decode(self, label: str) -> tuple[str, FinMap]:
        try:
            return self.elements[label]
        except KeyError:
            raise UnknownElement(label, self.obj.total.name) from None


def slice_exp(p: SliceObj, q: SliceObj, limit: int = DEFAULT_LIMIT) -> SliceExpObj:
    if p.base != q.base:
        raise BaseMismatch(
            f'Slice exponential over different bases {p.base.name} and {q.base.name}'
        )
    A = p.base
    required = sum(len(p.fibers[a]) ** len(q.fibers[a]) for a in A.elements)
    if required > limit:
        raise EnumerationTooLarge(
            f'{p.total.name}^{q.total.name} over {A.name}', required, limit
        )
    fibers = {a: exp(q.fibers[a], p.fibers[a], limit) for a in A.elements}
    elements = {
        pair_label(a, label): (a, g)
        for a, E in fibers.items()
        for label, g in E.graphs.items()
    }
    name = f'{p.total.name}^{q.total.name}'
    total = FinSetObj(name, distinct_labels(name, list(elements)))
    obj = SliceObj(A, total, FinMap(total, A, {e: a for e, (a, _) in elements.items()}))

    cone = slice_product(obj, q)
    table = {
        z: elements[cone.pi1.mediating.table[z]][1].table[cone.pi2.mediating.table[z]]
        for z in cone.obj.total.elements
    }
    ev = SliceMor(cone.obj, p, FinMap(cone.obj.total, p.total, table, name='ev'))
    return SliceExpObj(
        p, q, obj, ev, MappingProxyType(fibers), MappingProxyType(elements)
    )


def slice_curry(u: SliceMor, s: SliceObj, E: SliceExpObj) -> SliceMor:
    """The unique v : s → p^q with ev ∘ (v ×_A id_q) = u."""
    q = E.exponent
    if u.src != slice_product(s, q).obj or u.dst != E.target:
        raise ShapeMismatch(
            f'Expected a map {s.total.name}×_{s.base.name}{q.total.name} → '
            f'{E.target.total.name}'
        )
    table = {}
    for m in s.total.elements:
        a = s.proj.table[m]
        fiber, values = q.fibers[a], E.target.fibers[a]
        g = FinMap(fiber, values, {x: u.mediating.table[pair_label(m, x)] for x in fiber})
        table[m] = E.encode(a, g)
    return SliceMor(s, E.obj, FinMap(s.total, E.obj.total, table))


def slice_uncurry(v: SliceMor, E: SliceExpObj) -> SliceMor:
    if v.dst != E.obj:
        raise ShapeMismatch(f'Slice map does not land in {E.obj.total.name}')
    return slice_compose(E.ev, slice_product_map(v, slice_identity(E.exponent)))


def slice_exp_fmap(
    h: SliceMor,
    q: SliceObj,
    limit: int = DEFAULT_LIMIT,
    src_exp: Optional[SliceExpObj] = None,
    dst_exp: Optional[SliceExpObj] = None,
) -> SliceMor:
    """(h ∘ −) : p^q → p′^q, fiberwise."""
    src_exp = src_exp or slice_exp(h.src, q, limit)
    dst_exp = dst_exp or slice_exp(h.dst, q, limit)
    table = {}
    for label, (a, g) in src_exp.elements.items():
        h_a = FinMap(
            h.src.fibers[a],
            h.dst.fibers[a],
            {e: h.mediating.table[e] for e in h.src.fibers[a]},
        )
        table[label] = dst_exp.encode(a, compose(h_a, g))
    return SliceMor(
        src_exp.obj,
        dst_exp.obj,
        FinMap(src_exp.obj.total, dst_exp.obj.total, table),
    )


def slice_identity_point(
    q: SliceObj, limit: int = DEFAULT_LIMIT, E: Optional[SliceExpObj] = None
) -> SliceMor:
    """id_A → q^q, picking out the identity of every fiber."""
    E = E or slice_exp(q, q, limit)
    top = slice_terminal(q.base)
    table = {a: E.encode(a, identity(q.fibers[a])) for a in q.base.elements}
    return SliceMor(top, E.obj, FinMap(top.total, E.obj.total, table))
