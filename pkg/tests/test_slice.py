import itertools

import pytest
from util_test import family, fmap, fset

from lccc.category import compose_functors
from lccc.errors import BaseMismatch, ObjectMismatch, TriangleDoesNotCommute
from lccc.finset import hom_set, identity, pair_label, terminal
from lccc.instances import all_sets, all_slice_objects
from lccc.slice import (
    SliceMor,
    SliceObj,
    is_slice_iso,
    over_terminal_equivalence,
    postcompose_functor,
    slice_compose,
    slice_coproduct,
    slice_copairing,
    slice_hom,
    slice_identity,
    slice_inverse,
    slice_mor,
    slice_pairing,
    slice_product,
    slice_terminal,
    to_terminal,
)

A = fset('A', 'a1', 'a2')
B = fset('B', 'b1', 'b2', 'b3')
f = fmap(B, A, {'b1': 'a1', 'b2': 'a1', 'b3': 'a2'}, name='f')


def test_fibers_and_describe():
    x = SliceObj.over(f)
    assert x.fiber_sizes() == (2, 1)
    assert x.fiber('a1').elements == ('b1', 'b2')
    assert x.describe() == 'B[3]→A (2,1)'


def test_triangle_is_checked_with_witness():
    x = family(A, (1, 1), name='X')
    y = family(A, (1, 1), name='Y')
    crossed = fmap(x.total, y.total, {'x_a1_1': 'y_a2_1', 'x_a2_1': 'y_a1_1'})
    with pytest.raises(TriangleDoesNotCommute) as info:
        SliceMor(x, y, crossed)
    assert info.value.witness == 'x_a1_1'


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        SliceMor(SliceObj.over(f), slice_terminal(B), f)


def test_composition_and_identity():
    x = family(A, (2, 1), name='X')
    top = to_terminal(x)
    assert slice_compose(slice_identity(slice_terminal(A)), top) == top
    assert slice_compose(top, slice_identity(x)) == top
    with pytest.raises(ObjectMismatch):
        slice_compose(top, top)


@pytest.mark.parametrize(
    'sizes_x,sizes_y,expected',
    [
        ((1, 1), (2, 3), 6),
        ((2, 0), (3, 0), 9),
        ((1, 0), (0, 2), 0),
        ((0, 0), (0, 0), 1),
        ((2, 1), (1, 1), 1),
    ],
)
def test_slice_hom_is_product_of_fiber_homs(sizes_x, sizes_y, expected):
    homs = slice_hom(family(A, sizes_x, 'X'), family(A, sizes_y, 'Y'))
    assert len(homs) == expected, f'Expected {expected} triangles, found {len(homs)}'


def test_terminal_is_terminal():
    x = family(A, (2, 1), name='X')
    assert slice_hom(x, slice_terminal(A)) == [to_terminal(x)]


def test_product_fibers_multiply():
    x = family(A, (2, 1), name='X')
    y = family(A, (3, 2), name='Y')
    cone = slice_product(x, y)
    assert cone.obj.fiber_sizes() == (6, 2)
    u = slice_pairing(cone.pi1, cone.pi2)
    assert u == slice_identity(cone.obj)


def test_coproduct_fibers_add():
    x = family(A, (2, 1), name='X')
    y = family(A, (0, 2), name='Y')
    cocone = slice_coproduct(x, y)
    assert cocone.obj.fiber_sizes() == (2, 3)
    u = slice_copairing(cocone.inl, cocone.inr)
    assert u == slice_identity(cocone.obj)


def test_slice_inverse():
    x = family(A, (1, 1), name='X')
    m = SliceMor(SliceObj.over(identity(A)), x, fmap(A, x.total, {'a1': 'x_a1_1', 'a2': 'x_a2_1'}))
    assert is_slice_iso(m)
    assert slice_compose(slice_inverse(m), m) == slice_identity(m.src)


def test_postcompose_functor():
    shriek = postcompose_functor(f)
    p = family(B, (2, 1, 0), name='E')
    assert shriek(p).fiber_sizes() == (3, 0)
    u = to_terminal(p)
    assert shriek.fmap(u).mediating == u.mediating


def test_postcompose_composes():
    g = fmap(A, terminal(), {'a1': '*', 'a2': '*'}, name='!')
    both = compose_functors(postcompose_functor(g), postcompose_functor(f))
    p = family(B, (2, 1, 0), name='E')
    assert both(p).fiber_sizes() == (3,)


def test_over_terminal_equivalence():
    eq = over_terminal_equivalence()
    X = fset('X', 'x1', 'x2')
    assert eq.forget(eq.attach(X)) == X
    x = eq.attach(X)
    assert eq.slice_iso(x).src == x
    h = fmap(X, X, {'x1': 'x2', 'x2': 'x1'})
    assert eq.forget.fmap(eq.attach.fmap(h)) == h


def test_pair_labels_in_product():
    x = family(A, (1, 0), name='X')
    y = family(A, (1, 0), name='Y')
    assert slice_product(x, y).obj.total.elements == (pair_label('x_a1_1', 'y_a1_1'),)


TWO = fset('2', 'blue', 'red')


def _coloured(name, colours):
    total = fset(name, *colours)
    return SliceObj(TWO, total, fmap(total, TWO, colours))


def test_colour_preserving_maps_over_two():
    x = _coloured('X', {'p': 'blue', 'q': 'blue', 'r': 'red'})
    y = _coloured('Y', {'s': 'blue', 't': 'red'})
    z = _coloured('Z', {'u': 'blue', 'v': 'red', 'w': 'red'})
    keep = slice_mor(fmap(x.total, y.total, {'p': 's', 'q': 's', 'r': 't'}), x, y)
    with pytest.raises(TriangleDoesNotCommute) as info:
        slice_mor(fmap(x.total, y.total, {'p': 't', 'q': 't', 'r': 's'}), x, y)
    assert info.value.witness == 'p'
    onward = slice_mor(fmap(y.total, z.total, {'s': 'u', 't': 'w'}), y, z)
    composite = slice_compose(onward, keep)
    assert all(z.proj(composite(e)) == x.proj(e) for e in x.total)


def test_slice_over_empty_base():
    empty = fset('Empty')
    objects = all_slice_objects(empty, 3)
    assert len(objects) == 1
    x = objects[0]
    assert slice_hom(x, x) == [slice_identity(x)]
    assert slice_mor(fmap(x.total, x.total, {}), x, x) == slice_identity(x)


@pytest.mark.parametrize('max_total', [2, pytest.param(3, marks=pytest.mark.slow)])
def test_postcompose_functor_laws_exhaustive(max_total):
    for X, Y in itertools.product(all_sets(2), repeat=2):
        objects = all_slice_objects(X, max_total)
        for h in hom_set(X, Y):
            shriek = postcompose_functor(h)
            for x in objects:
                assert shriek(x).base == Y
                assert shriek.fmap(slice_identity(x)) == slice_identity(shriek(x))
            for x, y, z in itertools.product(objects, repeat=3):
                for u in slice_hom(x, y):
                    for v in slice_hom(y, z):
                        assert shriek.fmap(slice_compose(v, u)) == slice_compose(
                            shriek.fmap(v), shriek.fmap(u)
                        )


def test_slice_product_is_universal():
    objects = all_slice_objects(A, 2)
    for x, y in itertools.product(objects, repeat=2):
        cone = slice_product(x, y)
        for s in objects:
            for u in slice_hom(s, x):
                for v in slice_hom(s, y):
                    mediators = [
                        h
                        for h in slice_hom(s, cone.obj)
                        if slice_compose(cone.pi1, h) == u
                        and slice_compose(cone.pi2, h) == v
                    ]
                    assert mediators == [slice_pairing(u, v)]


def test_over_terminal_equivalence_exhaustive():
    eq = over_terminal_equivalence()
    sets = all_sets(3)
    over_one = all_slice_objects(terminal(), 3)
    for X in sets:
        assert eq.forget(eq.attach(X)) == X
        assert eq.ambient_iso(X) == identity(X)
    for x in over_one:
        assert eq.attach(eq.forget(x)) == x
        iso = eq.slice_iso(x)
        assert iso.dst == x
        assert is_slice_iso(iso)
    for X, Y in itertools.product(sets, repeat=2):
        for h in hom_set(X, Y):
            assert eq.forget.fmap(eq.attach.fmap(h)) == h
    for x, y in itertools.product(over_one, repeat=2):
        for m in slice_hom(x, y):
            assert eq.attach.fmap(eq.forget.fmap(m)) == m
