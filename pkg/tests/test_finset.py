import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from util_test import fmap, fset

from lccc.errors import (
    CodomainMismatch,
    DomainMismatch,
    EnumerationTooLarge,
    InvalidLabel,
    TotalityError,
    UnknownElement,
)
from lccc.finset import (
    FinSetObj,
    compose,
    copairing,
    coproduct,
    decode_pair,
    fiber_decomposition,
    fiber_sizes,
    hom_set,
    identity,
    inverse,
    is_bijection,
    map_equal,
    pair_label,
    pairing,
    preimage,
    product,
    product_map,
    terminal,
    unique_to_terminal,
)
from lccc.instances import make_set, random_map
from lccc.limits import Cospan, pullback

A = fset('A', 'a1', 'a2')
B = fset('B', 'b1', 'b2', 'b3')
f = fmap(B, A, {'b1': 'a1', 'b2': 'a1', 'b3': 'a2'}, name='f')


def test_objects_are_extensional():
    assert fset('X', 'x', 'y') == fset('Y', 'y', 'x')
    assert hash(fset('X', 'x', 'y')) == hash(fset('Y', 'y', 'x'))
    assert fset('X', 'x') != fset('X', 'x', 'y')


@pytest.mark.parametrize('label', ['', 'a\nb', 3])
def test_invalid_labels(label):
    with pytest.raises(InvalidLabel):
        FinSetObj('X', (label,))


def test_duplicate_elements():
    with pytest.raises(InvalidLabel):
        fset('X', 'x', 'x')


def test_totality():
    with pytest.raises(TotalityError, match='b3'):
        fmap(B, A, {'b1': 'a1', 'b2': 'a1'})
    with pytest.raises(TotalityError):
        fmap(B, A, {'b1': 'a1', 'b2': 'a1', 'b3': 'a1', 'b4': 'a2'})
    with pytest.raises(CodomainMismatch):
        fmap(B, A, {'b1': 'a1', 'b2': 'a1', 'b3': 'a3'})


def test_unknown_element_is_a_key_error():
    with pytest.raises(KeyError):
        f('b4')
    with pytest.raises(UnknownElement):
        A.index('a3')


def test_compose_and_identity():
    g = fmap(A, fset('C', 'c'), {'a1': 'c', 'a2': 'c'})
    assert compose(g, f).table == {'b1': 'c', 'b2': 'c', 'b3': 'c'}
    assert compose(f, identity(B)) == f
    assert compose(identity(A), f) == f
    with pytest.raises(DomainMismatch):
        compose(f, f)


def test_map_equality_includes_codomain():
    wider = fmap(B, fset('A2', 'a1', 'a2', 'a3'), f.table)
    assert not map_equal(f, wider)
    assert f != wider


@pytest.mark.parametrize(
    'nx,ny,expected',
    [(0, 0, 1), (0, 3, 1), (2, 0, 0), (2, 3, 9), (3, 2, 8)],
)
def test_hom_set_cardinality(nx, ny, expected):
    X = FinSetObj('X', tuple(f'x{i}' for i in range(nx)))
    Y = FinSetObj('Y', tuple(f'y{i}' for i in range(ny)))
    homs = hom_set(X, Y)
    assert len(homs) == expected, f'Expected |Y^X| = {expected}, found {len(homs)}'
    assert len(set(homs)) == expected


def test_hom_set_limit():
    X = FinSetObj('X', tuple(f'x{i}' for i in range(10)))
    with pytest.raises(EnumerationTooLarge) as info:
        hom_set(X, B, limit=1000)
    assert info.value.required == 3**10
    assert info.value.limit == 1000


def test_terminal():
    one = terminal()
    assert one.elements == ('*',)
    assert unique_to_terminal(B).table == {'b1': '*', 'b2': '*', 'b3': '*'}
    assert len(hom_set(B, one)) == 1


def test_product_and_pairing():
    cone = product(A, B)
    assert len(cone.obj) == 6
    assert pair_label('a1', 'b2') in cone.obj
    h = pairing(identity(B), f)
    assert compose(cone.pi2, pairing(f, identity(B))) == identity(B)
    assert h.table['b3'] == pair_label('b3', 'a2')
    with pytest.raises(DomainMismatch):
        pairing(f, identity(A))


def test_product_map():
    swap = fmap(A, A, {'a1': 'a2', 'a2': 'a1'})
    m = product_map(swap, identity(B))
    assert m.table[pair_label('a1', 'b3')] == pair_label('a2', 'b3')


def test_coproduct_and_copairing():
    cocone = coproduct(A, B)
    assert len(cocone.obj) == 5
    h = copairing(identity(A), f)
    assert compose(h, cocone.inl) == identity(A)
    assert compose(h, cocone.inr) == f


def test_fibers_partition_the_domain():
    fibers = fiber_decomposition(f)
    assert [x.elements for x in fibers.values()] == [('b1', 'b2'), ('b3',)]
    assert fiber_sizes(f) == (2, 1)


def test_bijections():
    swap = fmap(A, A, {'a1': 'a2', 'a2': 'a1'})
    assert is_bijection(swap)
    assert compose(inverse(swap), swap) == identity(A)
    assert not is_bijection(f)


def test_preimage():
    assert preimage(f, 'a1').elements == ('b1', 'b2')
    wider = fmap(B, fset('A3', 'a1', 'a2', 'a3'), f.table)
    assert preimage(wider, 'a3').elements == ()
    with pytest.raises(UnknownElement):
        preimage(f, 'a9')


def test_fibers_partition_random_maps():
    rng = random.Random(0)
    for _ in range(200):
        cod = make_set('A', rng.randint(1, 4))
        h = random_map(rng, make_set('B', rng.randint(0, 6)), cod)
        fibers = fiber_decomposition(h)
        assert list(fibers) == list(cod.elements)
        covered = [b for fiber in fibers.values() for b in fiber.elements]
        assert sorted(covered) == sorted(h.dom.elements)
        assert len(set(covered)) == len(covered)
        for a, fiber in fibers.items():
            assert all(h(b) == a for b in fiber)
            assert preimage(h, a) == fiber


def test_sum_of_squares_fibers():
    Z5 = fset('Z5', *map(str, range(5)))
    cone = product(Z5, Z5)
    table = {}
    for z in cone.obj:
        x, y = decode_pair(z)
        table[z] = str((int(x) ** 2 + int(y) ** 2) % 5)
    assert fiber_sizes(fmap(cone.obj, Z5, table)) == (9, 4, 4, 4, 4)


def _sets(n):
    return [make_set(f'S{k}', k) for k in range(n + 1)]


def test_identity_laws_exhaustive():
    for X, Y in itertools.product(_sets(3), repeat=2):
        for h in hom_set(X, Y):
            assert compose(h, identity(X)) == h
            assert compose(identity(Y), h) == h


@pytest.mark.parametrize('n', [2, pytest.param(3, marks=pytest.mark.slow)])
def test_associativity_exhaustive(n):
    for W, X, Y, Z in itertools.product(_sets(n), repeat=4):
        for h1 in hom_set(W, X):
            for h2 in hom_set(X, Y):
                inner = compose(h2, h1)
                for h3 in hom_set(Y, Z):
                    assert compose(h3, inner) == compose(compose(h3, h2), h1)


def test_pairing_is_the_only_mediator():
    for S, X, Y in itertools.product(_sets(2), repeat=3):
        cone = product(X, Y)
        for u in hom_set(S, X):
            for v in hom_set(S, Y):
                mediators = [
                    h
                    for h in hom_set(S, cone.obj)
                    if compose(cone.pi1, h) == u and compose(cone.pi2, h) == v
                ]
                assert mediators == [pairing(u, v)]


def test_copairing_is_the_only_mediator():
    for X, Y, Z in itertools.product(_sets(2), repeat=3):
        cocone = coproduct(X, Y)
        for u in hom_set(X, Z):
            for v in hom_set(Y, Z):
                mediators = [
                    h
                    for h in hom_set(cocone.obj, Z)
                    if compose(h, cocone.inl) == u and compose(h, cocone.inr) == v
                ]
                assert mediators == [copairing(u, v)]


def test_labels_with_separators_do_not_collide():
    cone = product(fset('X', 'a|b', 'a'), fset('Y', 'c', 'b|c'))
    assert len(cone.obj) == 4
    assert pair_label('a', 'b') == '⟨a|b⟩'
    assert pair_label('a|b', 'c') != pair_label('a', 'b|c')
    assert decode_pair(pair_label('a|b', 'c')) == ('a|b', 'c')


labels = st.text(alphabet='ab ⟨⟩|{}(),;↦\\', min_size=1, max_size=6)
label_lists = st.lists(labels, min_size=1, max_size=4, unique=True)


@given(labels, labels)
def test_decode_pair_inverts_pair_label(x, y):
    assert decode_pair(pair_label(x, y)) == (x, y)
    nested = pair_label(x, y)
    assert decode_pair(pair_label(nested, y)) == (nested, y)


@given(label_lists, label_lists)
def test_products_of_arbitrary_labels(xs, ys):
    X, Y = fset('X', *xs), fset('Y', *ys)
    cone = product(X, Y)
    assert len(cone.obj) == len(xs) * len(ys)
    for z in cone.obj:
        assert pair_label(cone.pi1(z), cone.pi2(z)) == z
    assert len(coproduct(X, Y).obj) == len(xs) + len(ys)
    pb = pullback(Cospan(unique_to_terminal(X), unique_to_terminal(Y)))
    assert {decode_pair(z) for z in pb.carrier} == {(x, y) for x in xs for y in ys}
