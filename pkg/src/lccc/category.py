"""Category descriptors and extensional functors.

A functor is a pair of computable maps between two described categories. The
descriptors know how to form identities, compose, enumerate hom-sets and
compare morphisms, which is all the law checks need.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Optional

from lccc.constants import DEFAULT_LIMIT
from lccc.errors import BaseMismatch
from lccc.finset import (
    FinMap,
    FinSetObj,
    compose,
    first_difference,
    hom_set,
    identity,
)


class Category(ABC):
    name: str

    @abstractmethod
    def contains(self, obj: Any) -> bool:
        ...

    @abstractmethod
    def identity(self, obj: Any) -> Any:
        ...

    @abstractmethod
    def compose(self, g: Any, f: Any) -> Any:
        ...

    @abstractmethod
    def hom(self, x: Any, y: Any, limit: int = DEFAULT_LIMIT) -> list:
        ...

    @abstractmethod
    def source(self, mor: Any) -> Any:
        ...

    @abstractmethod
    def target(self, mor: Any) -> Any:
        ...

    @abstractmethod
    def difference(self, a: Any, b: Any) -> Optional[str]:
        """None when the two morphisms are equal, else a witness description."""

    @abstractmethod
    def describe(self, obj: Any) -> str:
        ...

    def equal(self, a: Any, b: Any) -> bool:
        return self.difference(a, b) is None

    def check(self, obj: Any) -> Any:
        if not self.contains(obj):
            raise BaseMismatch(f'{obj!r} is not an object of {self.name}')
        return obj


@dataclass(frozen=True)
class FinSetCategory(Category):
    name: str = 'FinSet'

    def contains(self, obj) -> bool:
        return isinstance(obj, FinSetObj)

    def identity(self, obj: FinSetObj) -> FinMap:
        return identity(obj)

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        return compose(g, f)

    def hom(self, x: FinSetObj, y: FinSetObj, limit: int = DEFAULT_LIMIT) -> list:
        return hom_set(x, y, limit)

    def source(self, mor: FinMap) -> FinSetObj:
        return mor.dom

    def target(self, mor: FinMap) -> FinSetObj:
        return mor.cod

    def difference(self, a: FinMap, b: FinMap) -> Optional[str]:
        return first_difference(a, b)

    def describe(self, obj: FinSetObj) -> str:
        return f'{obj.name}[{len(obj)}]'


FINSET = FinSetCategory()


@dataclass(frozen=True, eq=False)
class FunctorRepr:
    name: str
    src: Category
    dst: Category
    object_map: Callable[[Any], Any]
    morphism_map: Callable[[Any], Any]

    @property
    def src_base(self) -> Optional[FinSetObj]:
        return getattr(self.src, 'base', None)

    @property
    def dst_base(self) -> Optional[FinSetObj]:
        return getattr(self.dst, 'base', None)

    def __call__(self, obj):
        return self.object_map(self.src.check(obj))

    def fmap(self, mor):
        self.src.check(self.src.source(mor))
        return self.morphism_map(mor)

    def __repr__(self) -> str:
        return f'{self.name}: {self.src.name} → {self.dst.name}'


def compose_functors(G: FunctorRepr, F: FunctorRepr) -> FunctorRepr:
    """G ∘ F."""
    if F.dst != G.src:
        raise BaseMismatch(
            f'Cannot compose {G.name} after {F.name}: '
            f'{F.dst.name} is not {G.src.name}'
        )
    return FunctorRepr(
        name=f'{G.name}∘{F.name}',
        src=F.src,
        dst=G.dst,
        object_map=lambda x: G(F(x)),
        morphism_map=lambda m: G.fmap(F.fmap(m)),
    )


def identity_functor(category: Category) -> FunctorRepr:
    return FunctorRepr(
        name=f'Id_{category.name}',
        src=category,
        dst=category,
        object_map=lambda x: x,
        morphism_map=lambda m: m,
    )
