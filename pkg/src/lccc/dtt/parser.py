"""Recursive-descent parser for the family DSL.

    program := decl* "query" expr
    decl    := "set" NAME "=" "{" [NAME ("," NAME)*] "}"
             | "map" NAME ":" NAME "->" NAME "=" "{" [NAME "->" NAME ("," ...)*] "}"
    expr    := ("Sum"|"Pi"|"Pull"|"Exp") "(" NAME "," NAME ")" | "Obj" "(" NAME ")"

'#' starts a comment that runs to the end of the line.
"""
from typing import NamedTuple, Optional

import regex as re

from lccc.dtt.syntax import ARITY, QUERY_KINDS, Expr, MapDecl, Program, SetDecl
from lccc.errors import DslNameError, DslSyntaxError, DslTotalityError, DslTypeError

TOKEN_RE = re.compile(
    r'(?P<space>[ \t\r]+)'
    r'|(?P<newline>\n)'
    r'|(?P<comment>#[^\n]*)'
    r'|(?P<name>\p{L}[\p{L}\p{N}_]*)'
    r'|(?P<arrow>->)'
    r'|(?P<symbol>[=:{},()])'
)
DECL_KEYWORDS = ('set', 'map', 'query')


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return 'end of input' if self.kind == 'eof' else repr(self.text)


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        match = TOKEN_RE.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise DslSyntaxError(
                f'Unexpected character {source[pos]!r}',
                line,
                column,
                expected=('NAME', '->', '=', ':', '{', '}', ',', '(', ')'),
            )
        kind = match.lastgroup
        if kind == 'newline':
            line, line_start = line + 1, match.end()
        elif kind in ('name', 'arrow', 'symbol'):
            tokens.append(Token(kind, match.group(), line, column))
        pos = match.end()
    tokens.append(Token('eof', '', line, pos - line_start + 1))
    return tokens


class _RawMap(NamedTuple):
    name: Token
    dom: Token
    cod: Token
    entries: list[tuple[Token, Token]]
    start: Token


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, expected, token: Optional[Token] = None):
        token = token or self.current
        raise DslSyntaxError(
            f'Unexpected {token.describe()}', token.line, token.column, expected=expected
        )

    def expect(self, text: str) -> Token:
        token = self.current
        if token.kind in ('eof', 'name') or token.text != text:
            self.fail((text,))
        self.pos += 1
        return token

    def name(self) -> Token:
        token = self.current
        if token.kind != 'name':
            self.fail(('NAME',))
        self.pos += 1
        return token

    def at(self, text: str) -> bool:
        return self.current.kind != 'eof' and self.current.text == text

    def separated(self, item, closer: str) -> list:
        """Zero or more items separated by ',' up to closer."""
        items = []
        if self.at(closer):
            self.pos += 1
            return items
        items.append(item())
        while not self.at(closer):
            if not self.at(','):
                self.fail((',', closer))
            self.pos += 1
            items.append(item())
        self.pos += 1
        return items

    def program(self) -> tuple[list, Expr]:
        decls = []
        while True:
            token = self.current
            if token.kind == 'name' and token.text == 'set':
                decls.append(self.set_decl())
            elif token.kind == 'name' and token.text == 'map':
                decls.append(self.map_decl())
            elif token.kind == 'name' and token.text == 'query':
                self.pos += 1
                query = self.expr()
                if self.current.kind != 'eof':
                    self.fail(('end of input',))
                return decls, query
            else:
                self.fail(DECL_KEYWORDS)

    def set_decl(self) -> SetDecl:
        start = self.current
        self.pos += 1
        name = self.name()
        self.expect('=')
        self.expect('{')
        elements = self.separated(self.name, '}')
        return SetDecl(name.text, tuple(e.text for e in elements), start.line, start.column)

    def map_decl(self) -> _RawMap:
        start = self.current
        self.pos += 1
        name = self.name()
        self.expect(':')
        dom = self.name()
        self.expect('->')
        cod = self.name()
        self.expect('=')
        self.expect('{')

        def entry():
            x = self.name()
            self.expect('->')
            return x, self.name()

        entries = self.separated(entry, '}')
        return _RawMap(name, dom, cod, entries, start)

    def expr(self) -> Expr:
        head = self.current
        if head.kind != 'name' or head.text not in QUERY_KINDS:
            self.fail(QUERY_KINDS)
        self.pos += 1
        self.expect('(')
        args = [self.name()]
        for _ in range(ARITY[head.text] - 1):
            self.expect(',')
            args.append(self.name())
        self.expect(')')
        return Expr(head.text, tuple(a.text for a in args), head.line, head.column)


def _check_map(raw: _RawMap, sets: dict[str, SetDecl]) -> MapDecl:
    name, dom, cod, entries, start = raw
    for ref in (dom, cod):
        if ref.text not in sets:
            raise DslNameError(f'Undeclared set {ref.text!r}', ref.line, ref.column)
    domain, codomain = sets[dom.text], sets[cod.text]
    table = {}
    for x, y in entries:
        if x.text not in domain.elements:
            raise DslTotalityError(
                f'Map {name.text} assigns {x.text!r}, which is not in {dom.text}',
                x.line,
                x.column,
            )
        if x.text in table:
            raise DslTotalityError(
                f'Map {name.text} assigns {x.text!r} twice', x.line, x.column
            )
        if y.text not in codomain.elements:
            raise DslTypeError(
                f'Map {name.text} sends {x.text!r} to {y.text!r}, which is not in '
                f'{cod.text}',
                y.line,
                y.column,
            )
        table[x.text] = y.text
    missing = [x for x in domain.elements if x not in table]
    if missing:
        raise DslTotalityError(
            f'Map {name.text} is undefined on {", ".join(missing)} of {dom.text}',
            name.line,
            name.column,
        )
    return MapDecl(
        name.text,
        dom.text,
        cod.text,
        tuple((x, table[x]) for x in domain.elements),
        start.line,
        start.column,
    )


def _check_query(query: Expr, maps: dict[str, MapDecl], sets: dict[str, SetDecl]):
    resolved = []
    for arg in query.args:
        if arg in sets:
            raise DslTypeError(
                f'{arg!r} is a set; {query.kind} takes maps', query.line, query.column
            )
        if arg not in maps:
            raise DslNameError(f'Undeclared map {arg!r}', query.line, query.column)
        resolved.append(maps[arg])
    if query.kind in ('Sum', 'Pi'):
        f, p = resolved
        if p.cod != f.dom:
            raise DslTypeError(
                f'{query.kind}({f.name}, {p.name}) needs a family over {f.dom}, but '
                f'{p.name} lies over {p.cod}',
                query.line,
                query.column,
            )
    elif query.kind == 'Pull':
        f, p = resolved
        if p.cod != f.cod:
            raise DslTypeError(
                f'Pull({f.name}, {p.name}) needs a family over {f.cod}, but '
                f'{p.name} lies over {p.cod}',
                query.line,
                query.column,
            )
    elif query.kind == 'Exp':
        q, p = resolved
        if p.cod != q.cod:
            raise DslTypeError(
                f'Exp({q.name}, {p.name}) needs two families over one base, got '
                f'{q.cod} and {p.cod}',
                query.line,
                query.column,
            )


def parse(source: str) -> Program:
    decls, query = _Parser(source).program()
    sets: dict[str, SetDecl] = {}
    maps: dict[str, MapDecl] = {}
    checked = []
    for decl in decls:
        if isinstance(decl, SetDecl):
            name, line, column = decl.name, decl.line, decl.column
        else:
            name, line, column = decl.name.text, decl.name.line, decl.name.column
        if name in sets or name in maps:
            raise DslNameError(f'{name!r} is declared twice', line, column)
        if isinstance(decl, SetDecl):
            seen = set()
            for e in decl.elements:
                if e in seen:
                    raise DslNameError(
                        f'Set {name} lists {e!r} twice', decl.line, decl.column
                    )
                seen.add(e)
            sets[name] = decl
            checked.append(decl)
        else:
            mapping = _check_map(decl, sets)
            maps[name] = mapping
            checked.append(mapping)
    _check_query(query, maps, sets)
    return Program(tuple(checked), query)
