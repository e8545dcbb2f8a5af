"""Syntax tree of the family DSL.

Positions are carried for diagnostics only and take no part in equality, so a
printed and reparsed program compares equal to the original.
"""
from dataclasses import dataclass, field
from typing import Union

QUERY_KINDS = ('Sum', 'Pi', 'Pull', 'Obj', 'Exp')
ARITY = {'Sum': 2, 'Pi': 2, 'Pull': 2, 'Obj': 1, 'Exp': 2}


@dataclass(frozen=True)
class SetDecl:
    name: str
    elements: tuple[str, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MapDecl:
    name: str
    dom: str
    cod: str
    entries: tuple[tuple[str, str], ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Expr:
    kind: str
    args: tuple[str, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __post_init__(self):
        assert self.kind in QUERY_KINDS, self.kind
        assert len(self.args) == ARITY[self.kind], self.args

    def __str__(self) -> str:
        return f'{self.kind}({", ".join(self.args)})'


Decl = Union[SetDecl, MapDecl]


@dataclass(frozen=True)
class Program:
    declarations: tuple[Decl, ...]
    query: Expr

    def lookup(self, name: str) -> Decl:
        for decl in self.declarations:
            if decl.name == name:
                return decl
        raise KeyError(name)


def format_decl(decl: Decl) -> str:
    if isinstance(decl, SetDecl):
        return f'set {decl.name} = {{{", ".join(decl.elements)}}}'
    body = ', '.join(f'{x} -> {y}' for x, y in decl.entries)
    return f'map {decl.name} : {decl.dom} -> {decl.cod} = {{{body}}}'


def format_program(prog: Program) -> str:
    lines = [format_decl(d) for d in prog.declarations]
    lines.append(f'query {prog.query}')
    return '\n'.join(lines) + '\n'
