"""Instance generators: exhaustive below small thresholds, seeded-random above."""
import itertools
import random
from typing import Iterator

from lccc.finset import (
    FinMap,
    FinSetObj,
    hom_set,
    identity,
    terminal,
    unique_to_terminal,
)
from lccc.limits import Cospan
from lccc.slice import SliceObj


def make_set(name: str, size: int, prefix: str = '') -> FinSetObj:
    prefix = prefix or name.lower()
    return FinSetObj(name, tuple(f'{prefix}{i}' for i in range(1, size + 1)))


def all_sets(max_size: int, name: str = 'X') -> list[FinSetObj]:
    return [make_set(f'{name}{n}', n, prefix=name.lower()) for n in range(max_size + 1)]


def all_slice_objects(base: FinSetObj, max_total: int, name: str = 'E') -> list[SliceObj]:
    """Every map into base from {e1..en}, n ≤ max_total, up to relabeling of the total."""
    objects = []
    for n in range(max_total + 1):
        total = make_set(f'{name}{n}', n, prefix=name.lower())
        for values in itertools.product(base.elements, repeat=n):
            proj = FinMap(total, base, dict(zip(total.elements, values)))
            objects.append(SliceObj(base, total, proj))
    return objects


def all_cospans(max_apex: int, max_feet: int) -> Iterator[Cospan]:
    for na in range(1, max_apex + 1):
        A = make_set('A', na)
        for nb, nc in itertools.product(range(max_feet + 1), repeat=2):
            B, C = make_set('B', nb), make_set('C', nc)
            for f in hom_set(B, A):
                for g in hom_set(C, A):
                    yield Cospan(f.named('f'), g.named('g'))


def random_map(rng: random.Random, dom: FinSetObj, cod: FinSetObj, name: str = '') -> FinMap:
    if not cod.elements and dom.elements:
        raise ValueError(f'No map from nonempty {dom.name} to empty {cod.name}')
    return FinMap(dom, cod, {x: rng.choice(cod.elements) for x in dom.elements}, name=name)


def random_cospan(rng: random.Random, max_apex: int = 2, max_feet: int = 3) -> Cospan:
    A = make_set('A', rng.randint(1, max_apex))
    B = make_set('B', rng.randint(0, max_feet))
    C = make_set('C', rng.randint(0, max_feet))
    return Cospan(random_map(rng, B, A, 'f'), random_map(rng, C, A, 'g'))


def random_base_map(rng: random.Random, max_a: int = 2, max_b: int = 3) -> FinMap:
    A = make_set('A', rng.randint(1, max_a))
    B = make_set('B', rng.randint(0, max_b))
    return random_map(rng, B, A, 'f')


def random_slice(
    rng: random.Random, base: FinSetObj, max_fiber: int = 3, name: str = 'E'
) -> SliceObj:
    """A family over base with every fiber size drawn from 0..max_fiber."""
    sizes = [rng.randint(0, max_fiber) for _ in base.elements]
    total = make_set(name, sum(sizes), prefix=name.lower())
    points = [a for a, n in zip(base.elements, sizes) for _ in range(n)]
    return SliceObj(base, total, FinMap(total, base, dict(zip(total.elements, points))))


def chain_suite(seed: int, random_count: int = 50, max_b: int = 3) -> list[FinMap]:
    """Identity, !: B → 1 for |B| ≤ max_b, the running f, then seeded random maps."""
    suite = [identity(make_set('A', 2)).named('id')]
    for n in range(max_b + 1):
        suite.append(unique_to_terminal(make_set('B', n)))
    suite.append(running_example()[0])
    rng = random.Random(seed)
    suite.extend(random_base_map(rng) for _ in range(random_count))
    return suite


def running_example() -> tuple[FinMap, SliceObj]:
    """f : {b1,b2,b3} → {a1,a2} with b1,b2 ↦ a1, b3 ↦ a2; p with fibers (2,1,0)."""
    A = FinSetObj('A', ('a1', 'a2'))
    B = FinSetObj('B', ('b1', 'b2', 'b3'))
    E = FinSetObj('E', ('e1', 'e2', 'e3'))
    f = FinMap(B, A, {'b1': 'a1', 'b2': 'a1', 'b3': 'a2'}, name='f')
    p = FinMap(E, B, {'e1': 'b1', 'e2': 'b1', 'e3': 'b2'}, name='p')
    return f, SliceObj.over(p)


def over_terminal(X: FinSetObj) -> SliceObj:
    return SliceObj(terminal(), X, unique_to_terminal(X))
