"""Certification of adjunctions between finite-set and slice-category functors.

An adjunction is certified two ways: by the triangle identities together with
naturality of unit and counit, and by the hom-set bijection together with its
naturality in both variables. Shipped witnesses must pass both; a witness that
passes one and fails the other is reported as a divergence.
"""
import functools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, NamedTuple, Optional, Sequence

from tqdm import tqdm

from lccc.category import (
    FINSET,
    Category,
    FunctorRepr,
    compose_functors,
    identity_functor,
)
from lccc.constants import (
    CORRUPTIONS,
    DEFAULT_LIMIT,
    DEFAULT_SEED,
    LISTING_TRUNCATION,
)
from lccc.depprod import (
    Section,
    counit_shriek_star,
    dependent_sum,
    f_star,
    sections_of,
    unit_counit_star_pi,
    unit_shriek_star,
)
from lccc.errors import BaseMismatch, EnumerationTooLarge, LCCCError, ShapeMismatch
from lccc.exponentials import (
    curry,
    exp,
    exp_fmap,
    slice_curry,
    slice_exp,
    slice_exp_fmap,
    slice_uncurry,
    uncurry,
)
from lccc.finset import (
    FinMap,
    FinSetObj,
    compose,
    decode_pair,
    fiber_decomposition,
    identity,
    pair_label,
    pairing,
    product,
    product_map,
)
from lccc.instances import all_sets, all_slice_objects
from lccc.limits import base_change, base_change_pullback, mediator
from lccc.slice import (
    IsoWitness,
    SliceCategory,
    SliceMor,
    SliceObj,
    slice_identity,
    slice_product,
    slice_product_map,
)


@dataclass
class CheckCfg:
    limit: int = DEFAULT_LIMIT
    seed: int = DEFAULT_SEED
    samples: int = 3
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        assert self.limit > 0, 'limit must be positive'
        assert self.samples >= 0
        assert self.workers >= 1

    def rng(self, *key: int) -> random.Random:
        """A generator fixed by the seed and the position of the checked instance."""
        state = self.seed
        for k in key:
            state = state * 1_000_003 + k
        return random.Random(state)


class LawFailure(NamedTuple):
    law: str
    instance: str
    witness: str


@dataclass
class LawReport:
    name: str
    checked: int = 0
    failures: list[LawFailure] = field(default_factory=list)
    cardinalities: list[tuple[str, str, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, law: str, instance: str, witness: Optional[str]):
        self.checked += 1
        if witness is not None:
            self.failures.append(LawFailure(law, instance, witness))

    def merge(self, other: 'LawReport') -> 'LawReport':
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.cardinalities.extend(other.cardinalities)
        return self

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'checked': self.checked,
            'passed': self.passed,
            'failure_count': len(self.failures),
            'failures': [f._asdict() for f in self.failures[:LISTING_TRUNCATION]],
            'cardinality_count': len(self.cardinalities),
            'cardinalities': [
                {'x': x, 'y': y, 'hom_left': m, 'hom_right': n}
                for x, y, m, n in self.cardinalities[:LISTING_TRUNCATION]
            ],
        }


@dataclass(frozen=True, eq=False)
class AdjunctionWitness:
    """left ⊣ right with unit, counit and the hom-set bijection in both directions.

    transpose(X, Y, h) takes h : left(X) → Y to X → right(Y); untranspose goes back.
    """

    name: str
    left: FunctorRepr
    right: FunctorRepr
    unit: Callable[[Any], Any]
    counit: Callable[[Any], Any]
    transpose: Callable[[Any, Any, Any], Any]
    untranspose: Callable[[Any, Any, Any], Any]

    @property
    def src(self) -> Category:
        return self.left.src

    @property
    def dst(self) -> Category:
        return self.left.dst


@dataclass(frozen=True)
class PairCategory(Category):
    """C × D with componentwise identities and composition."""

    first: Category
    second: Category

    @property
    def name(self) -> str:
        return f'{self.first.name}×{self.second.name}'

    def contains(self, obj) -> bool:
        return (
            isinstance(obj, tuple)
            and len(obj) == 2
            and self.first.contains(obj[0])
            and self.second.contains(obj[1])
        )

    def identity(self, obj):
        return self.first.identity(obj[0]), self.second.identity(obj[1])

    def compose(self, g, f):
        return self.first.compose(g[0], f[0]), self.second.compose(g[1], f[1])

    def hom(self, x, y, limit: int = DEFAULT_LIMIT) -> list:
        firsts = self.first.hom(x[0], y[0], limit)
        seconds = self.second.hom(x[1], y[1], limit)
        if len(firsts) * len(seconds) > limit:
            raise EnumerationTooLarge(
                f'Hom in {self.name}', len(firsts) * len(seconds), limit
            )
        return [(u, v) for u in firsts for v in seconds]

    def source(self, mor):
        return self.first.source(mor[0]), self.second.source(mor[1])

    def target(self, mor):
        return self.first.target(mor[0]), self.second.target(mor[1])

    def difference(self, a, b) -> Optional[str]:
        sides = (('first', self.first, a[0], b[0]), ('second', self.second, a[1], b[1]))
        for side, cat, u, v in sides:
            witness = cat.difference(u, v)
            if witness is not None:
                return f'{side}: {witness}'
        return None

    def describe(self, obj) -> str:
        return f'({self.first.describe(obj[0])}, {self.second.describe(obj[1])})'


def _guarded(
    law: str,
    describe: Callable[[], str],
    report: LawReport,
    check: Callable[[], Optional[str]],
):
    """Run one law check; a structural error raised while checking is a failure."""
    try:
        witness = check()
    except EnumerationTooLarge:
        raise
    except (LCCCError, KeyError) as e:
        witness = f'{type(e).__name__}: {e}'
    report.record(law, describe(), witness)


def _run_jobs(
    name: str, jobs: Sequence, fn: Callable[[int, Any], LawReport], cfg: CheckCfg
) -> LawReport:
    """Apply fn to every job, merging reports in job order whatever the worker count."""
    report = LawReport(name)
    indexed = list(enumerate(jobs))
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            results = executor.map(lambda item: fn(*item), indexed)
            progress = tqdm(
                results, total=len(indexed), desc=name, disable=not cfg.verbose
            )
            for partial in progress:
                report.merge(partial)
    else:
        for index, job in tqdm(indexed, desc=name, disable=not cfg.verbose):
            report.merge(fn(index, job))
    logging.info(f'{name}: {report.checked} checks, {len(report.failures)} failures')
    return report


def _sample_morphisms(
    rng: random.Random,
    category: Category,
    x,
    candidates: Sequence,
    count: int,
    limit: int,
    outgoing: bool = True,
) -> list:
    """Up to count morphisms x → y (or y → x) with y drawn from candidates."""
    found = []
    if not candidates:
        return found
    for _ in range(count):
        other = rng.choice(candidates)
        src, dst = (x, other) if outgoing else (other, x)
        homs = category.hom(src, dst, limit)
        if homs:
            found.append(rng.choice(homs))
    return found


def check_functor_laws(
    F: FunctorRepr, instances: Sequence, cfg: Optional[CheckCfg] = None
) -> LawReport:
    """F(id_x) = id_{F x} on every instance; F(v∘u) = F(v)∘F(u) on sampled pairs."""
    cfg = cfg or CheckCfg()
    C, D = F.src, F.dst

    def job(index: int, x) -> LawReport:
        report = LawReport(F.name)
        rng = cfg.rng(index)
        _guarded(
            'preserves-identity',
            lambda: C.describe(x),
            report,
            lambda: D.difference(F.fmap(C.identity(x)), D.identity(F(x))),
        )
        for u in _sample_morphisms(rng, C, x, instances, cfg.samples, cfg.limit):
            for v in _sample_morphisms(rng, C, C.target(u), instances, 1, cfg.limit):
                _guarded(
                    'preserves-composition',
                    lambda: f'{C.describe(x)} → {C.describe(C.target(u))} → '
                    f'{C.describe(C.target(v))}',
                    report,
                    lambda: D.difference(
                        F.fmap(C.compose(v, u)), D.compose(F.fmap(v), F.fmap(u))
                    ),
                )
        return report

    return _run_jobs(f'functor laws of {F.name}', instances, job, cfg)


def check_triangle_identities(
    w: AdjunctionWitness,
    sources: Sequence,
    targets: Sequence,
    cfg: Optional[CheckCfg] = None,
) -> LawReport:
    """ε_{FX} ∘ F(η_X) = id and G(ε_Y) ∘ η_{GY} = id, with η and ε natural."""
    cfg = cfg or CheckCfg()
    F, G, C, D = w.left, w.right, w.src, w.dst
    jobs = [('source', x) for x in sources] + [('target', y) for y in targets]

    def job(index: int, item) -> LawReport:
        side, obj = item
        report = LawReport(w.name)
        rng = cfg.rng(index)
        if side == 'source':
            x = obj
            _guarded(
                'triangle-left',
                lambda: C.describe(x),
                report,
                lambda: D.difference(
                    D.compose(w.counit(F(x)), F.fmap(w.unit(x))), D.identity(F(x))
                ),
            )
            for u in _sample_morphisms(rng, C, x, sources, cfg.samples, cfg.limit):
                x2 = C.target(u)
                _guarded(
                    'unit-naturality',
                    lambda: f'{C.describe(x)} → {C.describe(x2)}',
                    report,
                    lambda: C.difference(
                        C.compose(G.fmap(F.fmap(u)), w.unit(x)),
                        C.compose(w.unit(x2), u),
                    ),
                )
        else:
            y = obj
            _guarded(
                'triangle-right',
                lambda: D.describe(y),
                report,
                lambda: C.difference(
                    C.compose(G.fmap(w.counit(y)), w.unit(G(y))), C.identity(G(y))
                ),
            )
            for v in _sample_morphisms(rng, D, y, targets, cfg.samples, cfg.limit):
                y2 = D.target(v)
                _guarded(
                    'counit-naturality',
                    lambda: f'{D.describe(y)} → {D.describe(y2)}',
                    report,
                    lambda: D.difference(
                        D.compose(w.counit(y2), F.fmap(G.fmap(v))),
                        D.compose(v, w.counit(y)),
                    ),
                )
        return report

    return _run_jobs(f'triangle identities of {w.name}', jobs, job, cfg)


def _bijection_witness(
    w: AdjunctionWitness, x, y, left: list, right: list
) -> Optional[str]:
    C, D = w.src, w.dst
    if len(left) != len(right):
        return f'|Hom(FX, Y)| = {len(left)} but |Hom(X, GY)| = {len(right)}'
    targets = set(right)
    seen = set()
    for h in left:
        t = w.transpose(x, y, h)
        if t not in targets:
            source = D.describe(D.source(h))
            return f'transpose of {source} → {D.describe(y)} leaves Hom(X, GY)'
        if t in seen:
            return 'transpose is not injective'
        seen.add(t)
        diff = D.difference(w.untranspose(x, y, t), h)
        if diff is not None:
            return f'untranspose ∘ transpose ≠ id at {diff}'
    for k in right:
        diff = C.difference(w.transpose(x, y, w.untranspose(x, y, k)), k)
        if diff is not None:
            return f'transpose ∘ untranspose ≠ id at {diff}'
    return None


def check_hom_bijection(
    w: AdjunctionWitness,
    sources: Sequence,
    targets: Sequence,
    cfg: Optional[CheckCfg] = None,
) -> LawReport:
    """Hom(FX, Y) ≅ Hom(X, GY) for every pair, natural in both on sampled maps."""
    cfg = cfg or CheckCfg()
    F, G, C, D = w.left, w.right, w.src, w.dst

    def job(index: int, x) -> LawReport:
        report = LawReport(w.name)
        rng = cfg.rng(index)
        fx = F(x)
        for y in targets:
            def describe(y=y) -> str:
                return f'X={C.describe(x)}, Y={D.describe(y)}'

            left = D.hom(fx, y, cfg.limit)
            right = C.hom(x, G(y), cfg.limit)
            report.cardinalities.append(
                (C.describe(x), D.describe(y), len(left), len(right))
            )
            _guarded(
                'hom-bijection',
                describe,
                report,
                lambda: _bijection_witness(w, x, y, left, right),
            )
            if not left:
                continue
            for k in _sample_morphisms(rng, D, y, targets, cfg.samples, cfg.limit):
                h = rng.choice(left)
                y2 = D.target(k)
                _guarded(
                    'natural-in-Y',
                    describe,
                    report,
                    lambda: C.difference(
                        w.transpose(x, y2, D.compose(k, h)),
                        C.compose(G.fmap(k), w.transpose(x, y, h)),
                    ),
                )
            incoming = _sample_morphisms(
                rng, C, x, sources, cfg.samples, cfg.limit, outgoing=False
            )
            for u in incoming:
                h = rng.choice(left)
                x2 = C.source(u)
                _guarded(
                    'natural-in-X',
                    describe,
                    report,
                    lambda: C.difference(
                        w.transpose(x2, y, D.compose(h, F.fmap(u))),
                        C.compose(w.transpose(x, y, h), u),
                    ),
                )
        return report

    return _run_jobs(f'hom bijection of {w.name}', sources, job, cfg)


def certify(
    w: AdjunctionWitness,
    sources: Sequence,
    targets: Sequence,
    cfg: Optional[CheckCfg] = None,
) -> LawReport:
    """Both definitions of adjunction; disagreement between them is a failure."""
    cfg = cfg or CheckCfg()
    triangles = check_triangle_identities(w, sources, targets, cfg)
    homs = check_hom_bijection(w, sources, targets, cfg)
    report = LawReport(w.name).merge(triangles).merge(homs)
    if triangles.passed != homs.passed:
        report.record(
            'definitions-agree',
            w.name,
            f'triangle identities {"pass" if triangles.passed else "fail"} but the hom '
            f'bijection {"passes" if homs.passed else "fails"}',
        )
    return report


def identity_adjunction(category: Category) -> AdjunctionWitness:
    functor = identity_functor(category)
    return AdjunctionWitness(
        name=f'Id ⊣ Id on {category.name}',
        left=functor,
        right=functor,
        unit=category.identity,
        counit=category.identity,
        transpose=lambda x, y, h: h,
        untranspose=lambda x, y, k: k,
    )


def shriek_star_adjunction(f: FinMap) -> AdjunctionWitness:
    """f_! ⊣ f^*.

    Transposing uses the pullback's universal property; untransposing composes
    with the leg p.
    """
    name = f.name or 'f'

    def transpose(x: SliceObj, y: SliceObj, h: SliceMor) -> SliceMor:
        pb = base_change_pullback(f, y)
        u = mediator(pb.cospan, pb, h.mediating, x.proj)
        return SliceMor(x, SliceObj(f.dom, pb.carrier, pb.q), u)

    def untranspose(x: SliceObj, y: SliceObj, k: SliceMor) -> SliceMor:
        pb = base_change_pullback(f, y)
        summed = SliceObj(f.cod, x.total, compose(f, x.proj))
        return SliceMor(summed, y, compose(pb.p, k.mediating))

    return AdjunctionWitness(
        name=f'{name}_! ⊣ {name}^*',
        left=dependent_sum(f),
        right=base_change(f),
        unit=functools.partial(unit_shriek_star, f),
        counit=functools.partial(counit_shriek_star, f),
        transpose=transpose,
        untranspose=untranspose,
    )


def star_pi_adjunction(f: FinMap, limit: int = DEFAULT_LIMIT) -> AdjunctionWitness:
    """f^* ⊣ f_*, transposing elementwise through sections."""
    name = f.name or 'f'
    fibers = fiber_decomposition(f)
    unit, counit = unit_counit_star_pi(f, limit)
    right = f_star(f, limit)

    def transpose(y: SliceObj, p: SliceObj, h: SliceMor) -> SliceMor:
        target = right(p)
        table = {}
        for m in y.total.elements:
            a = y.proj.table[m]
            section = Section(
                a,
                tuple(
                    (b, h.mediating.table[pair_label(m, b)]) for b in fibers[a].elements
                ),
            )
            table[m] = section.label
        return SliceMor(y, target, FinMap(y.total, target.total, table))

    def untranspose(y: SliceObj, p: SliceObj, k: SliceMor) -> SliceMor:
        sections = sections_of(f, p, limit)
        pb = base_change_pullback(f, y)
        table = {}
        for z in pb.carrier.elements:
            m, b = decode_pair(z)
            table[z] = sections[k.mediating.table[m]](b)
        pulled = SliceObj(f.dom, pb.carrier, pb.q)
        return SliceMor(pulled, p, FinMap(pb.carrier, p.total, table))

    return AdjunctionWitness(
        name=f'{name}^* ⊣ {name}_*',
        left=base_change(f),
        right=right,
        unit=unit,
        counit=counit,
        transpose=transpose,
        untranspose=untranspose,
    )


def currying_adjunction(Y: FinSetObj, limit: int = DEFAULT_LIMIT) -> AdjunctionWitness:
    """(−)×Y ⊣ (−)^Y in FinSet."""
    exp_of = functools.lru_cache(maxsize=None)(lambda Z: exp(Y, Z, limit))

    left = FunctorRepr(
        name=f'(−)×{Y.name}',
        src=FINSET,
        dst=FINSET,
        object_map=lambda X: product(X, Y).obj,
        morphism_map=lambda u: product_map(u, identity(Y)),
    )
    right = FunctorRepr(
        name=f'(−)^{Y.name}',
        src=FINSET,
        dst=FINSET,
        object_map=lambda Z: exp_of(Z).carrier,
        morphism_map=lambda k: exp_fmap(k, Y, limit),
    )
    return AdjunctionWitness(
        name=f'(−)×{Y.name} ⊣ (−)^{Y.name}',
        left=left,
        right=right,
        unit=lambda X: curry(
            identity(product(X, Y).obj), X, Y, exp_of(product(X, Y).obj)
        ),
        counit=lambda Z: exp_of(Z).ev,
        transpose=lambda X, Z, h: curry(h, X, Y, exp_of(Z)),
        untranspose=lambda X, Z, k: uncurry(k, exp_of(Z)),
    )


def slice_exp_adjunction(q: SliceObj, limit: int = DEFAULT_LIMIT) -> AdjunctionWitness:
    """(−)×_A q ⊣ (−)^q in C/A."""
    exp_of = functools.lru_cache(maxsize=None)(lambda p: slice_exp(p, q, limit))
    category = SliceCategory(q.base)

    def product_with_q(x: SliceObj) -> SliceObj:
        return slice_product(x, q).obj

    left = FunctorRepr(
        name=f'(−)×_{q.base.name}{q.total.name}',
        src=category,
        dst=category,
        object_map=product_with_q,
        morphism_map=lambda u: slice_product_map(u, slice_identity(q)),
    )
    right = FunctorRepr(
        name=f'(−)^{q.total.name}',
        src=category,
        dst=category,
        object_map=lambda p: exp_of(p).obj,
        morphism_map=lambda k: slice_exp_fmap(
            k, q, limit, src_exp=exp_of(k.src), dst_exp=exp_of(k.dst)
        ),
    )
    return AdjunctionWitness(
        name=f'{left.name} ⊣ {right.name}',
        left=left,
        right=right,
        unit=lambda x: slice_curry(
            slice_identity(product_with_q(x)), x, exp_of(product_with_q(x))
        ),
        counit=lambda p: exp_of(p).ev,
        transpose=lambda x, p, h: slice_curry(h, x, exp_of(p)),
        untranspose=lambda x, p, k: slice_uncurry(k, exp_of(p)),
    )


def diagonal_product_witness() -> AdjunctionWitness:
    """Δ ⊣ × between FinSet and FinSet × FinSet."""
    pairs = PairCategory(FINSET, FINSET)
    diagonal = FunctorRepr(
        name='Δ',
        src=FINSET,
        dst=pairs,
        object_map=lambda X: (X, X),
        morphism_map=lambda u: (u, u),
    )
    times = FunctorRepr(
        name='×',
        src=pairs,
        dst=FINSET,
        object_map=lambda yz: product(*yz).obj,
        morphism_map=lambda k: product_map(*k),
    )

    def counit(yz):
        cone = product(*yz)
        return cone.pi1, cone.pi2

    def untranspose(X, yz, k):
        cone = product(*yz)
        return compose(cone.pi1, k), compose(cone.pi2, k)

    return AdjunctionWitness(
        name='Δ ⊣ ×',
        left=diagonal,
        right=times,
        unit=lambda X: pairing(identity(X), identity(X)),
        counit=counit,
        transpose=lambda X, yz, h: pairing(*h),
        untranspose=untranspose,
    )


def diagonal_product_adjunction(
    cfg: Optional[CheckCfg] = None, max_size: int = 2
) -> LawReport:
    cfg = cfg or CheckCfg()
    sets = all_sets(max_size)
    pairs = [(Y, Z) for Y in sets for Z in sets]
    return certify(diagonal_product_witness(), sets, pairs, cfg)


def compose_adjunctions(
    w1: AdjunctionWitness, w2: AdjunctionWitness
) -> AdjunctionWitness:
    """F₂F₁ ⊣ G₁G₂ from F₁ ⊣ G₁ and F₂ ⊣ G₂.

    Hom(F₂F₁X, Y) ≅ Hom(F₁X, G₂Y) ≅ Hom(X, G₁G₂Y).
    """
    if w1.left.dst != w2.left.src:
        raise BaseMismatch(
            f'Cannot compose {w2.name} after {w1.name}: '
            f'{w1.left.dst.name} is not {w2.left.src.name}'
        )
    F1, G1, F2, G2 = w1.left, w1.right, w2.left, w2.right
    C, E = w1.src, w2.dst

    def unit(x):
        return C.compose(G1.fmap(w2.unit(F1(x))), w1.unit(x))

    def counit(y):
        return E.compose(w2.counit(y), F2.fmap(w1.counit(G2(y))))

    return AdjunctionWitness(
        name=(
            f'({w2.left.name}∘{w1.left.name}) ⊣ ({w1.right.name}∘{w2.right.name})'
        ),
        left=compose_functors(F2, F1),
        right=compose_functors(G1, G2),
        unit=unit,
        counit=counit,
        transpose=lambda x, y, h: w1.transpose(x, G2(y), w2.transpose(F1(x), y, h)),
        untranspose=lambda x, y, k: w2.untranspose(
            F1(x), y, w1.untranspose(x, G2(y), k)
        ),
    )


def corrupt_witness(
    w: AdjunctionWitness, kind: str, limit: int = DEFAULT_LIMIT
) -> AdjunctionWitness:
    """A deliberately broken copy of w, for checking that the harness notices."""
    C, D = w.src, w.dst
    name = f'{w.name} [{kind}]'
    if kind == 'swap-unit-counit':
        return AdjunctionWitness(
            name, w.left, w.right, w.counit, w.unit, w.transpose, w.untranspose
        )
    if kind == 'corrupt-transpose':
        def transpose(x, y, h):
            first = D.hom(w.left(x), y, limit)[0]
            return w.transpose(x, y, first)

        return AdjunctionWitness(
            name, w.left, w.right, w.unit, w.counit, transpose, w.untranspose
        )
    if kind == 'corrupt-unit':
        def unit(x):
            endos = [e for e in C.hom(x, x, limit) if not C.equal(e, C.identity(x))]
            eta = w.unit(x)
            return C.compose(eta, endos[0]) if endos else eta

        return AdjunctionWitness(
            name, w.left, w.right, unit, w.counit, w.transpose, w.untranspose
        )
    raise ShapeMismatch(
        f'Unknown corruption {kind!r}; expected one of {", ".join(CORRUPTIONS)}'
    )


def corrupt_functor(F: FunctorRepr, limit: int = DEFAULT_LIMIT) -> FunctorRepr:
    """F with every morphism sent to the first map between the image objects."""

    def morphism_map(m):
        src, dst = F(F.src.source(m)), F(F.src.target(m))
        return F.dst.hom(src, dst, limit)[0]

    return FunctorRepr(
        name=f'{F.name} [corrupted]',
        src=F.src,
        dst=F.dst,
        object_map=F.object_map,
        morphism_map=morphism_map,
    )


def chain_instances(f: FinMap, max_total: int) -> tuple[list[SliceObj], list[SliceObj]]:
    return all_slice_objects(f.dom, max_total), all_slice_objects(f.cod, max_total)


def check_chain(
    f: FinMap,
    cfg: Optional[CheckCfg] = None,
    over_dom: Optional[Sequence[SliceObj]] = None,
    over_cod: Optional[Sequence[SliceObj]] = None,
    max_total: int = 2,
    inject: Optional[str] = None,
) -> LawReport:
    """f_! ⊣ f^* ⊣ f_*: both adjunctions, both definitions, one report."""
    cfg = cfg or CheckCfg()
    if over_dom is None or over_cod is None:
        over_dom, over_cod = chain_instances(f, max_total)
    witnesses = [shriek_star_adjunction(f), star_pi_adjunction(f, cfg.limit)]
    if inject is not None:
        witnesses = [corrupt_witness(w, inject, cfg.limit) for w in witnesses]
    report = LawReport(f'chain of {f.name or "f"}')
    shriek, star = witnesses
    report.merge(certify(shriek, over_dom, over_cod, cfg))
    report.merge(certify(star, over_cod, over_dom, cfg))
    return report


def exp_via_chain_iso(p: SliceObj, f: FinMap, limit: int = DEFAULT_LIMIT) -> IsoWitness:
    """p^f ≅ f_* f^* p in C/A.

    A function on the fiber of f over a is a section of the pulled-back family.
    """
    q = SliceObj.over(f)
    E = slice_exp(p, q, limit)
    pulled = base_change(f)(p)
    chained = f_star(f, limit)(pulled)
    sections = sections_of(f, pulled, limit)

    forward = {}
    for label, (a, g) in E.elements.items():
        assignment = tuple((c, pair_label(g.table[c], c)) for c in g.dom.elements)
        section = Section(a, assignment)
        forward[label] = section.label
    backward = {}
    for label, s in sections.items():
        fiber = E.fibers[s.over]
        table = {c: decode_pair(v)[0] for c, v in s.assignment}
        g = FinMap(fiber.source, fiber.target, table)
        backward[label] = E.encode(s.over, g)
    return IsoWitness(
        SliceMor(E.obj, chained, FinMap(E.obj.total, chained.total, forward)),
        SliceMor(chained, E.obj, FinMap(chained.total, E.obj.total, backward)),
    )


def slice_exp_as_composite(
    f: FinMap, cfg: Optional[CheckCfg] = None, max_total: int = 2
) -> LawReport:
    """(−)×_A C agrees with f_! f^*, and its right adjoint (−)^C with f_* f^*."""
    cfg = cfg or CheckCfg()
    q = SliceObj.over(f)
    category = SliceCategory(f.cod)
    composite = compose_functors(dependent_sum(f), base_change(f))
    objects = all_slice_objects(f.cod, max_total)
    report = LawReport(f'(−)×_{f.cod.name}{f.dom.name} as {composite.name}')

    def job(index: int, x: SliceObj) -> LawReport:
        partial = LawReport(report.name)
        rng = cfg.rng(index)
        _guarded(
            'same-object',
            lambda: x.describe(),
            partial,
            lambda: None
            if slice_product(x, q).obj == composite(x)
            else 'objects differ',
        )
        for u in _sample_morphisms(rng, category, x, objects, cfg.samples, cfg.limit):
            _guarded(
                'same-morphism',
                lambda: f'{x.describe()} → {u.dst.describe()}',
                partial,
                lambda: category.difference(
                    slice_product_map(u, slice_identity(q)), composite.fmap(u)
                ),
            )
        _guarded(
            'exponential-is-chain',
            lambda: x.describe(),
            partial,
            lambda: None
            if exp_via_chain_iso(x, f, cfg.limit).round_trips()
            else 'round trip fails',
        )
        return partial

    report.merge(_run_jobs(report.name, objects, job, cfg))
    report.merge(certify(slice_exp_adjunction(q, cfg.limit), objects, objects, cfg))
    chained = compose_adjunctions(
        star_pi_adjunction(f, cfg.limit), shriek_star_adjunction(f)
    )
    report.merge(check_hom_bijection(chained, objects, objects, cfg))
    return report


def summarize(reports: Iterable[LawReport]) -> dict:
    reports = list(reports)
    return {
        'passed': all(r.passed for r in reports),
        'checked': sum(r.checked for r in reports),
        'failures': sum(len(r.failures) for r in reports),
    }
