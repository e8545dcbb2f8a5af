"""Canonical pullbacks, mediators and the base change functor g^*."""
import logging
from dataclasses import dataclass
from typing import NamedTuple

from lccc.category import FunctorRepr
from lccc.errors import (
    BaseMismatch,
    CodomainMismatch,
    ConeDoesNotCommute,
    DomainMismatch,
    ShapeMismatch,
)
from lccc.finset import (
    FinMap,
    FinSetObj,
    compose,
    distinct_labels,
    fiber_decomposition,
    map_equal,
    pair_label,
)
from lccc.slice import IsoWitness, SliceCategory, SliceMor, SliceObj


@dataclass(frozen=True)
class Cospan:
    """B --f--> A <--g-- C."""

    f: FinMap
    g: FinMap

    def __post_init__(self):
        if self.f.cod != self.g.cod:
            raise CodomainMismatch(
                f'Not a cospan: {self.f.label} lands in {self.f.cod.name}, '
                f'{self.g.label} in {self.g.cod.name}'
            )

    @property
    def apex(self) -> FinSetObj:
        return self.f.cod


@dataclass(frozen=True)
class PullbackResult:
    cospan: Cospan
    carrier: FinSetObj
    p: FinMap
    q: FinMap

    def __post_init__(self):
        if not map_equal(compose(self.cospan.f, self.p), compose(self.cospan.g, self.q)):
            raise ShapeMismatch('Pullback square does not commute')

    def as_slice(self) -> SliceObj:
        """The carrier fibered over the apex by the common composite."""
        return SliceObj(self.cospan.apex, self.carrier, compose(self.cospan.f, self.p))

    def fiber_breakdown(self) -> list[tuple[str, int, int, int]]:
        """(a, |f⁻¹(a)|, |g⁻¹(a)|, |carrier over a|) for each a in the apex."""
        f_fibers = fiber_decomposition(self.cospan.f)
        g_fibers = fiber_decomposition(self.cospan.g)
        over = fiber_decomposition(compose(self.cospan.f, self.p))
        return [
            (a, len(f_fibers[a]), len(g_fibers[a]), len(over[a]))
            for a in self.cospan.apex.elements
        ]


class SlicePullbackCone(NamedTuple):
    obj: SliceObj
    p: SliceMor
    q: SliceMor


def pullback(c: Cospan) -> PullbackResult:
    """B ×_A C = {⟨b|c⟩ | f(b) = g(c)}, with the two projections."""
    f, g = c.f, c.g
    over: dict[str, list[str]] = {a: [] for a in c.apex.elements}
    for y, a in g.table.items():
        over[a].append(y)
    pairs = [(b, y) for b, a in f.table.items() for y in over[a]]
    name = f'{f.dom.name}×_{c.apex.name}{g.dom.name}'
    carrier = FinSetObj(name, distinct_labels(name, [pair_label(b, y) for b, y in pairs]))
    p = FinMap(carrier, f.dom, {pair_label(b, y): b for b, y in pairs}, name='p')
    q = FinMap(carrier, g.dom, {pair_label(b, y): y for b, y in pairs}, name='q')
    logging.debug(f'Pullback {name} has {len(carrier)} elements')
    return PullbackResult(c, carrier, p, q)


def mediator(c: Cospan, pb: PullbackResult, p2: FinMap, q2: FinMap) -> FinMap:
    """The unique u : Y → B ×_A C with p∘u = p2 and q∘u = q2."""
    if p2.dom != q2.dom:
        raise DomainMismatch(
            f'Cone legs start at different objects {p2.dom.name} and {q2.dom.name}'
        )
    if p2.cod != c.f.dom or q2.cod != c.g.dom:
        raise DomainMismatch('Cone legs do not land in the cospan feet')
    for y in p2.dom.elements:
        if c.f.table[p2.table[y]] != c.g.table[q2.table[y]]:
            raise ConeDoesNotCommute(
                f'Cone over {c.apex.name} does not commute at {y}', witness=y
            )
    return FinMap(
        p2.dom,
        pb.carrier,
        {y: pair_label(p2.table[y], q2.table[y]) for y in p2.dom.elements},
    )


def base_change_pullback(g: FinMap, x: SliceObj) -> PullbackResult:
    if x.base != g.cod:
        raise BaseMismatch(
            f'Cannot pull back an object over {x.base.name} along a map into '
            f'{g.cod.name}'
        )
    return pullback(Cospan(x.proj, g))


def base_change(g: FinMap) -> FunctorRepr:
    """g^* : C/A → C/C for g : C → A."""

    def on_objects(x: SliceObj) -> SliceObj:
        pb = base_change_pullback(g, x)
        return SliceObj(g.dom, pb.carrier, pb.q)

    def on_morphisms(h: SliceMor) -> SliceMor:
        src_pb = base_change_pullback(g, h.src)
        dst_pb = base_change_pullback(g, h.dst)
        u = mediator(
            dst_pb.cospan, dst_pb, compose(h.mediating, src_pb.p), src_pb.q
        )
        return SliceMor(on_objects(h.src), on_objects(h.dst), u)

    return FunctorRepr(
        name=f'{g.name or "g"}^*',
        src=SliceCategory(g.cod),
        dst=SliceCategory(g.dom),
        object_map=on_objects,
        morphism_map=on_morphisms,
    )


def slice_pullback(u: SliceMor, v: SliceMor) -> SlicePullbackCone:
    """Pullback inside C/A of X --u--> Z <--v-- Y."""
    if u.dst != v.dst:
        raise BaseMismatch('Slice cospan legs must share a target')
    pb = pullback(Cospan(u.mediating, v.mediating))
    obj = SliceObj(u.src.base, pb.carrier, compose(u.src.proj, pb.p))
    return SlicePullbackCone(obj, SliceMor(obj, u.src, pb.p), SliceMor(obj, v.src, pb.q))


def nonisomorphic_pullback_witness() -> tuple[Cospan, Cospan, dict]:
    """Same B, A, C and f; two choices of g with pullbacks of different size."""
    A = FinSetObj('A', ('a1', 'a2'))
    B = FinSetObj('B', ('b1', 'b2'))
    C = FinSetObj('C', ('c',))
    f = FinMap(B, A, {'b1': 'a1', 'b2': 'a1'}, name='f')
    g1 = FinMap(C, A, {'c': 'a1'}, name='g1')
    g2 = FinMap(C, A, {'c': 'a2'}, name='g2')
    c1, c2 = Cospan(f, g1), Cospan(f, g2)
    n1, n2 = len(pullback(c1).carrier), len(pullback(c2).carrier)
    report = {
        'g1': dict(g1.table),
        'g2': dict(g2.table),
        'cardinality_g1': n1,
        'cardinality_g2': n2,
        'isomorphic': n1 == n2,
    }
    return c1, c2, report


def base_change_composite_iso(g: FinMap, g2: FinMap, x: SliceObj) -> IsoWitness:
    """(g∘g2)^* x ≅ g2^*(g^* x), built from mediators in both directions."""
    gg2 = compose(g, g2)
    direct = base_change_pullback(gg2, x)
    first = base_change_pullback(g, x)
    first_obj = SliceObj(g.dom, first.carrier, first.q)
    twice = base_change_pullback(g2, first_obj)

    into_first = mediator(first.cospan, first, direct.p, compose(g2, direct.q))
    forward = mediator(twice.cospan, twice, into_first, direct.q)
    backward = mediator(
        direct.cospan, direct, compose(first.p, twice.p), twice.q
    )
    direct_obj = SliceObj(g2.dom, direct.carrier, direct.q)
    twice_obj = SliceObj(g2.dom, twice.carrier, twice.q)
    return IsoWitness(
        SliceMor(direct_obj, twice_obj, forward),
        SliceMor(twice_obj, direct_obj, backward),
    )
