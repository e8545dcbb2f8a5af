"""Evaluation of DSL queries through the slice-category constructions."""
import logging
from dataclasses import dataclass

from lccc.constants import DEFAULT_LIMIT
from lccc.depprod import dependent_product_fiberwise, dependent_sum
from lccc.dtt.syntax import Expr, MapDecl, Program, SetDecl
from lccc.exponentials import slice_exp
from lccc.finset import FinMap, FinSetObj
from lccc.limits import base_change
from lccc.slice import SliceObj


@dataclass(frozen=True)
class EvalResult:
    query: Expr
    obj: SliceObj

    @property
    def fibers(self) -> list[tuple[str, tuple[str, ...]]]:
        """(base point, elements over it) in base order."""
        return [(a, fiber.elements) for a, fiber in self.obj.fibers.items()]

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return self.obj.fiber_sizes()

    def to_dict(self) -> dict:
        return {
            'query': str(self.query),
            'base': self.obj.base.name,
            'total': len(self.obj.total),
            'fiber_sizes': list(self.cardinalities),
            'fibers': [{'over': a, 'elements': list(xs)} for a, xs in self.fibers],
        }


def build_objects(prog: Program) -> tuple[dict[str, FinSetObj], dict[str, FinMap]]:
    sets: dict[str, FinSetObj] = {}
    maps: dict[str, FinMap] = {}
    for decl in prog.declarations:
        if isinstance(decl, SetDecl):
            sets[decl.name] = FinSetObj(decl.name, decl.elements)
        elif isinstance(decl, MapDecl):
            maps[decl.name] = FinMap(
                sets[decl.dom], sets[decl.cod], dict(decl.entries), name=decl.name
            )
    return sets, maps


def evaluate(prog: Program, limit: int = DEFAULT_LIMIT) -> EvalResult:
    _, maps = build_objects(prog)
    query = prog.query
    args = [maps[name] for name in query.args]
    if query.kind == 'Sum':
        f, p = args
        obj = dependent_sum(f)(SliceObj.over(p))
    elif query.kind == 'Pi':
        f, p = args
        obj = dependent_product_fiberwise(f, SliceObj.over(p), limit)
    elif query.kind == 'Pull':
        f, p = args
        obj = base_change(f)(SliceObj.over(p))
    elif query.kind == 'Exp':
        q, p = args
        obj = slice_exp(SliceObj.over(p), SliceObj.over(q), limit).obj
    else:
        (p,) = args
        obj = SliceObj.over(p)
    logging.info(f'{query} has fiber sizes {obj.fiber_sizes()}')
    return EvalResult(query, obj)
