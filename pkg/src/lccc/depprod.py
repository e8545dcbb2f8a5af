"""Dependent sum f_!, base change f^* and dependent product f_*.

For f : B → A and a family p : E → B, the fiber of f_! p over a is the
disjoint union of the p-fibers over B_a, and the fiber of f_* p over a is the
set of sections: choices b ↦ e with p(e) = b for every b in B_a.

f_* is computed here two independent ways. The fiberwise construction is the
reference one; the construction as a pullback of slice exponentials is kept
to check the reference against.
"""
import itertools
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, NamedTuple

from lccc.category import FunctorRepr
from lccc.constants import DEFAULT_LIMIT
from lccc.errors import BaseMismatch, EnumerationTooLarge, ShapeMismatch
from lccc.exponentials import (
    SliceExpObj,
    slice_exp,
    slice_exp_fmap,
    slice_identity_point,
)
from lccc.finset import (
    FinMap,
    FinSetObj,
    compose,
    distinct_labels,
    fiber_decomposition,
    identity,
    pair_label,
    quote,
)
from lccc.limits import (
    Cospan,
    SlicePullbackCone,
    base_change_pullback,
    mediator,
    pullback,
    slice_pullback,
)
from lccc.slice import (
    IsoWitness,
    SliceCategory,
    SliceMor,
    SliceObj,
    postcompose_functor,
)


@dataclass(frozen=True)
class Section:
    over: str
    assignment: tuple[tuple[str, str], ...]

    @property
    def label(self) -> str:
        body = ','.join(f'{quote(b)}↦{quote(e)}' for b, e in self.assignment)
        return f'sec({quote(self.over)}){{{body}}}'

    def __call__(self, b: str) -> str:
        for point, e in self.assignment:
            if point == b:
                return e
        raise KeyError(b)


class UnitCounit(NamedTuple):
    unit: Callable[[SliceObj], SliceMor]
    counit: Callable[[SliceObj], SliceMor]


def _check_family(f: FinMap, p: SliceObj):
    if p.base != f.dom:
        raise BaseMismatch(
            f'Family {p.total.name} lies over {p.base.name}, not over {f.dom.name}'
        )


def is_section(p: SliceObj, s: Section) -> bool:
    return all(p.proj.table.get(e) == b for b, e in s.assignment)


def dependent_sum(f: FinMap) -> FunctorRepr:
    """Σ_f = f_!: the fiber over a merges the p-fibers over B_a."""
    return replace(postcompose_functor(f), name=f'Σ_{f.name or "f"}')


def sections_of(f: FinMap, p: SliceObj, limit: int = DEFAULT_LIMIT) -> dict[str, Section]:
    """All sections of p over the fibers of f, in base order."""
    _check_family(f, p)
    base_fibers = fiber_decomposition(f)
    required = sum(
        math.prod(len(p.fibers[b]) for b in fiber) for fiber in base_fibers.values()
    )
    if required > limit:
        raise EnumerationTooLarge(
            f'sections of {p.total.name} along {f.label}', required, limit
        )
    sections = {}
    for a, fiber in base_fibers.items():
        choices = [p.fibers[b].elements for b in fiber.elements]
        for values in itertools.product(*choices):
            section = Section(a, tuple(zip(fiber.elements, values)))
            sections[section.label] = section
    return sections


def dependent_product_fiberwise(
    f: FinMap, p: SliceObj, limit: int = DEFAULT_LIMIT
) -> SliceObj:
    sections = sections_of(f, p, limit)
    name = f'Π_{f.name or "f"}({p.total.name})'
    total = FinSetObj(name, distinct_labels(name, list(sections)))
    proj = FinMap(total, f.cod, {label: s.over for label, s in sections.items()})
    result = SliceObj(f.cod, total, proj)
    logging.debug(f'{name} has fiber sizes {result.fiber_sizes()}')
    return result


class _PullbackRoute(NamedTuple):
    obj: SliceObj
    cospan: Cospan
    functions: SliceExpObj
    legs: SlicePullbackCone


def _pullback_route(f: FinMap, p: SliceObj, limit: int) -> _PullbackRoute:
    _check_family(f, p)
    summed = SliceObj(f.cod, p.total, compose(f, p.proj))
    over_a = SliceObj.over(f)
    functions = slice_exp(summed, over_a, limit)
    endos = slice_exp(over_a, over_a, limit)
    fmap_p = slice_exp_fmap(
        SliceMor(summed, over_a, p.proj),
        over_a,
        limit,
        src_exp=functions,
        dst_exp=endos,
    )
    idpt = slice_identity_point(over_a, limit, E=endos)
    legs = slice_pullback(idpt, fmap_p)
    return _PullbackRoute(
        legs.obj, Cospan(idpt.mediating, fmap_p.mediating), functions, legs
    )


def dependent_product_pullback(
    f: FinMap, p: SliceObj, limit: int = DEFAULT_LIMIT
) -> SliceObj:
    """Pullback in C/A of the identity point into f^f along p ∘ − : (f∘p)^f → f^f."""
    return _pullback_route(f, p, limit).obj


def product_oracle_iso(
    f: FinMap, p: SliceObj, limit: int = DEFAULT_LIMIT
) -> IsoWitness:
    """The canonical iso between the fiberwise and the pullback dependent products."""
    sections = sections_of(f, p, limit)
    fiberwise = dependent_product_fiberwise(f, p, limit)
    route = _pullback_route(f, p, limit)

    def as_function(s: Section) -> str:
        E = route.functions.fibers[s.over]
        g = FinMap(E.source, E.target, dict(s.assignment))
        return route.functions.encode(s.over, g)

    points = FinMap(fiberwise.total, f.cod, {x: s.over for x, s in sections.items()})
    graphs = FinMap(
        fiberwise.total,
        route.functions.obj.total,
        {x: as_function(s) for x, s in sections.items()},
    )
    forward = mediator(route.cospan, pullback(route.cospan), points, graphs)

    backward = {}
    for z in route.obj.total.elements:
        a, g = route.functions.decode(route.legs.q.mediating.table[z])
        backward[z] = Section(a, tuple(g.table.items())).label
    return IsoWitness(
        SliceMor(fiberwise, route.obj, forward),
        SliceMor(
            route.obj, fiberwise, FinMap(route.obj.total, fiberwise.total, backward)
        ),
    )


def f_star(f: FinMap, limit: int = DEFAULT_LIMIT) -> FunctorRepr:
    """f_* : C/B → C/A; a morphism acts on sections by postcomposition."""

    def on_objects(p: SliceObj) -> SliceObj:
        return dependent_product_fiberwise(f, p, limit)

    def on_morphisms(u: SliceMor) -> SliceMor:
        src, dst = on_objects(u.src), on_objects(u.dst)
        table = {}
        for label, s in sections_of(f, u.src, limit).items():
            moved = tuple((b, u.mediating.table[e]) for b, e in s.assignment)
            image = Section(s.over, moved)
            if not is_section(u.dst, image):
                raise ShapeMismatch(f'{image.label} is not a section')
            table[label] = image.label
        return SliceMor(src, dst, FinMap(src.total, dst.total, table))

    return FunctorRepr(
        name=f'{f.name or "f"}_*',
        src=SliceCategory(f.dom),
        dst=SliceCategory(f.cod),
        object_map=on_objects,
        morphism_map=on_morphisms,
    )


def unit_shriek_star(f: FinMap, x: SliceObj) -> SliceMor:
    """η_x : x → f^* f_! x, m ↦ ⟨m|x(m)⟩."""
    _check_family(f, x)
    summed = SliceObj(f.cod, x.total, compose(f, x.proj))
    pb = base_change_pullback(f, summed)
    eta = mediator(pb.cospan, pb, identity(x.total), x.proj)
    return SliceMor(x, SliceObj(f.dom, pb.carrier, pb.q), eta)


def counit_shriek_star(f: FinMap, y: SliceObj) -> SliceMor:
    """ε_y : f_! f^* y → y, ⟨m|b⟩ ↦ m."""
    pb = base_change_pullback(f, y)
    return SliceMor(SliceObj(f.cod, pb.carrier, compose(f, pb.q)), y, pb.p)


def unit_counit_star_pi(f: FinMap, limit: int = DEFAULT_LIMIT) -> UnitCounit:
    """Unit y → f_* f^* y and counit f^* f_* p → p of f^* ⊣ f_*."""
    base_fibers = fiber_decomposition(f)

    def unit(y: SliceObj) -> SliceMor:
        pb = base_change_pullback(f, y)
        pulled = SliceObj(f.dom, pb.carrier, pb.q)
        target = dependent_product_fiberwise(f, pulled, limit)
        table = {}
        for m in y.total.elements:
            a = y.proj.table[m]
            section = Section(
                a, tuple((b, pair_label(m, b)) for b in base_fibers[a].elements)
            )
            table[m] = section.label
        return SliceMor(y, target, FinMap(y.total, target.total, table))

    def counit(p: SliceObj) -> SliceMor:
        sections = sections_of(f, p, limit)
        product = dependent_product_fiberwise(f, p, limit)
        pb = base_change_pullback(f, product)
        table = {
            z: sections[pb.p.table[z]](pb.q.table[z]) for z in pb.carrier.elements
        }
        source = SliceObj(f.dom, pb.carrier, pb.q)
        return SliceMor(source, p, FinMap(pb.carrier, p.total, table))

    return UnitCounit(unit, counit)
