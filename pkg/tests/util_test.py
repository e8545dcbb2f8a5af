import os

from lccc.finset import FinMap, FinSetObj
from lccc.slice import SliceObj

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


def fixture(name):
    return os.path.join(FIXTURES, name)


def fset(name, *elements):
    return FinSetObj(name, tuple(elements))


def fmap(dom, cod, table, name=''):
    return FinMap(dom, cod, dict(table), name=name)


def family(base, sizes, name='E'):
    """A slice object over base whose fiber over the i-th point has sizes[i] elements."""
    labels = []
    table = {}
    for a, n in zip(base.elements, sizes):
        for i in range(1, n + 1):
            label = f'{name.lower()}_{a}_{i}'
            labels.append(label)
            table[label] = a
    total = FinSetObj(name, tuple(labels))
    return SliceObj(base, total, FinMap(total, base, table))


def run_cli(main, argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err
