"""Slice categories C/A over finite sets.

An object of C/A is a map into A, read as a space fibered over A. A morphism is
a map between totals making the triangle over A commute.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from lccc.category import FINSET, Category, FunctorRepr
from lccc.constants import DEFAULT_LIMIT
from lccc.errors import (
    BaseMismatch,
    DomainMismatch,
    EnumerationTooLarge,
    ObjectMismatch,
    ShapeMismatch,
    TriangleDoesNotCommute,
)
from lccc.finset import (
    FinMap,
    FinSetObj,
    compose,
    coproduct,
    copairing,
    fiber_decomposition,
    first_difference,
    identity,
    inverse,
    is_bijection,
    pair_label,
    terminal,
    unique_to_terminal,
)


@dataclass(frozen=True)
class SliceObj:
    base: FinSetObj
    total: FinSetObj
    proj: FinMap

    def __post_init__(self):
        if self.proj.dom != self.total:
            raise DomainMismatch(
                f'Projection {self.proj.label} does not start at {self.total.name}'
            )
        if self.proj.cod != self.base:
            raise BaseMismatch(
                f'Projection {self.proj.label} does not land in {self.base.name}'
            )

    @classmethod
    def over(cls, proj: FinMap) -> 'SliceObj':
        return cls(proj.cod, proj.dom, proj)

    @cached_property
    def fibers(self) -> dict[str, FinSetObj]:
        return fiber_decomposition(self.proj)

    def fiber(self, a: str) -> FinSetObj:
        self.base.require(a)
        return self.fibers[a]

    def fiber_sizes(self) -> tuple[int, ...]:
        return tuple(len(fiber) for fiber in self.fibers.values())

    def describe(self) -> str:
        sizes = ','.join(str(n) for n in self.fiber_sizes())
        return f'{self.total.name}[{len(self.total)}]→{self.base.name} ({sizes})'


@dataclass(frozen=True)
class SliceMor:
    src: SliceObj
    dst: SliceObj
    mediating: FinMap

    def __post_init__(self):
        if self.src.base != self.dst.base:
            raise BaseMismatch(
                f'Slice morphism between different bases '
                f'{self.src.base.name} and {self.dst.base.name}'
            )
        if self.mediating.dom != self.src.total or self.mediating.cod != self.dst.total:
            raise DomainMismatch(
                f'{self.mediating.label} is not a map '
                f'{self.src.total.name} → {self.dst.total.name}'
            )
        for x, y in self.mediating.table.items():
            if self.dst.proj.table[y] != self.src.proj.table[x]:
                raise TriangleDoesNotCommute(
                    f'Triangle over {self.src.base.name} does not commute: '
                    f'{x} lies over {self.src.proj.table[x]} but is sent over '
                    f'{self.dst.proj.table[y]}',
                    witness=x,
                )

    def __call__(self, x: str) -> str:
        return self.mediating(x)


class SliceProductCone(NamedTuple):
    obj: SliceObj
    pi1: SliceMor
    pi2: SliceMor


class SliceCoproductCocone(NamedTuple):
    obj: SliceObj
    inl: SliceMor
    inr: SliceMor


class IsoWitness(NamedTuple):
    """A materialized isomorphism, checkable by its two round trips."""

    forward: SliceMor
    backward: SliceMor

    def round_trips(self) -> bool:
        there = slice_compose(self.backward, self.forward)
        back = slice_compose(self.forward, self.backward)
        return there == slice_identity(self.forward.src) and back == slice_identity(
            self.forward.dst
        )


class Equivalence(NamedTuple):
    forget: FunctorRepr
    attach: FunctorRepr
    ambient_iso: object
    slice_iso: object


@dataclass(frozen=True)
class SliceCategory(Category):
    base: FinSetObj

    @property
    def name(self) -> str:
        return f'C/{self.base.name}'

    def contains(self, obj) -> bool:
        return isinstance(obj, SliceObj) and obj.base == self.base

    def identity(self, obj: SliceObj) -> SliceMor:
        return slice_identity(obj)

    def compose(self, g: SliceMor, f: SliceMor) -> SliceMor:
        return slice_compose(g, f)

    def hom(self, x: SliceObj, y: SliceObj, limit: int = DEFAULT_LIMIT) -> list:
        return slice_hom(x, y, limit)

    def source(self, mor: SliceMor) -> SliceObj:
        return mor.src

    def target(self, mor: SliceMor) -> SliceObj:
        return mor.dst

    def difference(self, a: SliceMor, b: SliceMor) -> Optional[str]:
        if a.src != b.src:
            return f'source {a.src.describe()} vs {b.src.describe()}'
        if a.dst != b.dst:
            return f'target {a.dst.describe()} vs {b.dst.describe()}'
        return first_difference(a.mediating, b.mediating)

    def describe(self, obj: SliceObj) -> str:
        return obj.describe()


def slice_mor(u: FinMap, src: SliceObj, dst: SliceObj) -> SliceMor:
    return SliceMor(src, dst, u)


def slice_identity(x: SliceObj) -> SliceMor:
    return SliceMor(x, x, identity(x.total))


def slice_compose(v: SliceMor, u: SliceMor) -> SliceMor:
    """v ∘ u; the composite triangle is validated again on construction."""
    if u.dst != v.src:
        raise ObjectMismatch(
            f'Cannot compose: {u.dst.describe()} is not {v.src.describe()}'
        )
    return SliceMor(u.src, v.dst, compose(v.mediating, u.mediating))


def slice_hom(x: SliceObj, y: SliceObj, limit: int = DEFAULT_LIMIT) -> list[SliceMor]:
    """All commuting triangles x → y, enumerated fiber by fiber."""
    if x.base != y.base:
        raise BaseMismatch(
            f'Hom between slices over {x.base.name} and {y.base.name}'
        )
    fibers = [(x.fibers[a], y.fibers[a]) for a in x.base.elements]
    required = math.prod(len(ya) ** len(xa) for xa, ya in fibers)
    if required > limit:
        raise EnumerationTooLarge(
            f'Hom_{x.base.name}({x.total.name}, {y.total.name})', required, limit
        )
    choices = [
        [
            dict(zip(xa.elements, values))
            for values in itertools.product(ya.elements, repeat=len(xa))
        ]
        for xa, ya in fibers
    ]
    result = []
    for parts in itertools.product(*choices):
        table = {}
        for part in parts:
            table.update(part)
        result.append(SliceMor(x, y, FinMap(x.total, y.total, table)))
    return result


def postcompose_functor(f: FinMap) -> FunctorRepr:
    """f_! : C/X → C/Y, postcomposition with f : X → Y."""

    def on_objects(x: SliceObj) -> SliceObj:
        return SliceObj(f.cod, x.total, compose(f, x.proj))

    def on_morphisms(m: SliceMor) -> SliceMor:
        return SliceMor(on_objects(m.src), on_objects(m.dst), m.mediating)

    return FunctorRepr(
        name=f'{f.name or "f"}_!',
        src=SliceCategory(f.dom),
        dst=SliceCategory(f.cod),
        object_map=on_objects,
        morphism_map=on_morphisms,
    )


def slice_terminal(A: FinSetObj) -> SliceObj:
    return SliceObj(A, A, identity(A))


def to_terminal(x: SliceObj) -> SliceMor:
    return SliceMor(x, slice_terminal(x.base), x.proj)


def slice_product(p: SliceObj, q: SliceObj) -> SliceProductCone:
    """Product in C/A: the pullback of the two projections, projected to A."""
    from lccc.limits import Cospan, pullback

    if p.base != q.base:
        raise BaseMismatch(
            f'Slice product over different bases {p.base.name} and {q.base.name}'
        )
    pb = pullback(Cospan(p.proj, q.proj))
    obj = SliceObj(p.base, pb.carrier, compose(p.proj, pb.p))
    return SliceProductCone(obj, SliceMor(obj, p, pb.p), SliceMor(obj, q, pb.q))


def slice_pairing(u: SliceMor, v: SliceMor) -> SliceMor:
    """The mediator s → p ×_A q for a cone u : s → p, v : s → q."""
    if u.src != v.src:
        raise ObjectMismatch('Cannot pair slice morphisms with different sources')
    cone = slice_product(u.dst, v.dst)
    table = {m: pair_label(u.mediating.table[m], v.mediating.table[m]) for m in u.src.total}
    return SliceMor(u.src, cone.obj, FinMap(u.src.total, cone.obj.total, table))


def slice_product_map(u: SliceMor, v: SliceMor) -> SliceMor:
    """u ×_A v : p ×_A q → p′ ×_A q′."""
    cone = slice_product(u.src, v.src)
    return slice_pairing(slice_compose(u, cone.pi1), slice_compose(v, cone.pi2))


def slice_coproduct(p: SliceObj, q: SliceObj) -> SliceCoproductCocone:
    if p.base != q.base:
        raise BaseMismatch(
            f'Slice coproduct over different bases {p.base.name} and {q.base.name}'
        )
    cocone = coproduct(p.total, q.total)
    obj = SliceObj(p.base, cocone.obj, copairing(p.proj, q.proj))
    return SliceCoproductCocone(
        obj, SliceMor(p, obj, cocone.inl), SliceMor(q, obj, cocone.inr)
    )


def slice_copairing(u: SliceMor, v: SliceMor) -> SliceMor:
    if u.dst != v.dst:
        raise ObjectMismatch('Cannot copair slice morphisms with different targets')
    cocone = slice_coproduct(u.src, v.src)
    return SliceMor(cocone.obj, u.dst, copairing(u.mediating, v.mediating))


def is_slice_iso(m: SliceMor) -> bool:
    return is_bijection(m.mediating)


def slice_inverse(m: SliceMor) -> SliceMor:
    if not is_slice_iso(m):
        raise ShapeMismatch(f'{m.src.describe()} → {m.dst.describe()} is not invertible')
    return SliceMor(m.dst, m.src, inverse(m.mediating))


def over_terminal_equivalence() -> Equivalence:
    """C/1 ≅ C: forget the projection, or attach the unique map to 1."""
    over_one = SliceCategory(terminal())

    def attach_object(X: FinSetObj) -> SliceObj:
        return SliceObj(terminal(), X, unique_to_terminal(X))

    forget = FunctorRepr(
        name='forget',
        src=over_one,
        dst=FINSET,
        object_map=lambda x: x.total,
        morphism_map=lambda m: m.mediating,
    )
    attach = FunctorRepr(
        name='attach',
        src=FINSET,
        dst=over_one,
        object_map=attach_object,
        morphism_map=lambda f: SliceMor(attach_object(f.dom), attach_object(f.cod), f),
    )

    def ambient_iso(X: FinSetObj) -> FinMap:
        # forget(attach(X)) → X
        return identity(forget(attach(X)))

    def slice_iso(x: SliceObj) -> SliceMor:
        # attach(forget(x)) → x
        return SliceMor(attach(forget(x)), x, identity(x.total))

    logging.debug('Built C/1 ≅ C equivalence')
    return Equivalence(forget, attach, ambient_iso, slice_iso)
