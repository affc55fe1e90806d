"""
Parser for structura documents.

    theory Monoid {
        op m/2; op e/0;
        eq m(e,x) = x;
        eq m(x,e) = x;
        eq m(m(x,y),z) = m(x,m(y,z));
    }
    space S { points a b; order a<=b; }
    set Two { points p q; }
    structure Or : Monoid on S { m(a,a) = a; m(a,b) = b; ... e = a; }

Comments run from '#' to the end of the line. In `eq` statements any
name that is not an operation is a variable; variables are numbered in
order of first occurrence, left side first. A statement with an error
is skipped and parsing resumes at the next ';', so one run reports
every error it can find.
"""

import itertools
import re
from dataclasses import dataclass
from typing import Tuple

from structura.dsl.document import SpecDocument, StructureDecl
from structura.equational.terms import (
    App,
    Identity,
    TheoryPresentation,
    Var,
    make_signature,
)
from structura.exceptions import (
    ArityMismatch,
    DocumentError,
    DocumentErrorList,
    DocumentSyntaxError,
    InvalidPresentation,
    InvalidSpace,
    UnknownName,
)
from structura.fincat.finset import FiniteSet
from structura.fincat.fintop import FinSpace
from structura.lawvere.presentations import BUILTINS

TOKEN = re.compile(
    r"""
    (?P<newline>\n)
    |(?P<space>[ \t\r]+)
    |(?P<comment>\#[^\n]*)
    |(?P<le><=)
    |(?P<name>[A-Za-z0-9_][A-Za-z0-9_'\-]*)
    |(?P<punct>[{}();:,/=])
    """,
    re.VERBOSE,
)

KEYWORDS = ("theory", "set", "space", "structure")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class RawTerm:
    name: str
    args: Tuple["RawTerm", ...]
    applied: bool
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, line_start, position = 1, 0, 0
    while position < len(text):
        match = TOKEN.match(text, position)
        col = position - line_start + 1
        if match is None:
            raise DocumentErrorList(
                [
                    DocumentSyntaxError(
                        f"unexpected character {text[position]!r}", line, col
                    )
                ]
            )
        kind = match.lastgroup
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind in ("name", "le", "punct"):
            tokens.append(Token(kind, match.group(), line, col))
        position = match.end()
    tokens.append(Token("eof", "", line, position - line_start + 1))
    return tokens


class Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.position = 0
        self.errors = []
        self.document = SpecDocument()

    # Token helpers
    def peek(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.tokens[self.position]
        if token.kind != "eof":
            self.position += 1
        return token

    def at(self, text):
        return self.peek().text == text and self.peek().kind != "eof"

    def expect(self, text):
        token = self.peek()
        if token.text != text or token.kind == "eof":
            found = token.text or "end of input"
            raise DocumentSyntaxError(
                f"expected {text!r}, found {found!r}", token.line, token.col
            )
        return self.advance()

    def expect_name(self, what="a name"):
        token = self.peek()
        if token.kind != "name":
            found = token.text or "end of input"
            raise DocumentSyntaxError(
                f"expected {what}, found {found!r}", token.line, token.col
            )
        return self.advance()

    def skip_statement(self):
        while self.peek().kind != "eof":
            if self.at("}"):
                return
            if self.advance().text == ";":
                return

    def skip_block(self):
        depth = 0
        while self.peek().kind != "eof":
            token = self.advance()
            if token.text == "{":
                depth += 1
            elif token.text == "}":
                depth -= 1
                if depth <= 0:
                    return

    def statements(self, handle):
        """Run `handle` on each statement up to the closing brace."""
        self.expect("{")
        while not self.at("}"):
            if self.peek().kind == "eof":
                token = self.peek()
                raise DocumentSyntaxError(
                    "unterminated block", token.line, token.col
                )
            try:
                handle()
            except DocumentError as error:
                self.errors.append(error)
                self.skip_statement()
        self.expect("}")

    # Declarations
    def parse(self):
        while self.peek().kind != "eof":
            token = self.peek()
            try:
                if token.text == "theory":
                    self.theory_block()
                elif token.text == "set":
                    self.set_block()
                elif token.text == "space":
                    self.space_block()
                elif token.text == "structure":
                    self.structure_block()
                else:
                    raise DocumentSyntaxError(
                        f"expected one of {', '.join(KEYWORDS)}, "
                        f"found {token.text!r}",
                        token.line,
                        token.col,
                    )
            except DocumentError as error:
                self.errors.append(error)
                self.skip_block()
        if self.errors:
            raise DocumentErrorList(self.errors)
        return self.document

    def declare(self, kind, token):
        """Record a declaration; False if the name is taken."""
        if token.text in self.document.names():
            self.errors.append(
                DocumentError(
                    f"{token.text} is declared twice", token.line, token.col
                )
            )
            return False
        self.document.order.append((kind, token.text))
        return True

    def theory_block(self):
        self.expect("theory")
        name = self.expect_name("a theory name")
        ops, equations, hint = [], [], []

        def statement():
            keyword = self.expect_name("op, eq or oracle")
            if keyword.text == "op":
                symbol = self.expect_name("an operation name")
                self.expect("/")
                arity = self.expect_name("an arity")
                if not arity.text.isdigit():
                    raise DocumentSyntaxError(
                        f"arity must be a number, found {arity.text!r}",
                        arity.line,
                        arity.col,
                    )
                if symbol.text in [s.text for s, _ in ops]:
                    raise DocumentError(
                        f"operation {symbol.text} is declared twice",
                        symbol.line,
                        symbol.col,
                    )
                self.expect(";")
                ops.append((symbol, int(arity.text)))
            elif keyword.text == "eq":
                lhs = self.term()
                self.expect("=")
                rhs = self.term()
                self.expect(";")
                equations.append((keyword, lhs, rhs))
            elif keyword.text == "oracle":
                builtin = self.expect_name("a built-in theory")
                if builtin.text not in BUILTINS:
                    raise UnknownName(
                        f"no built-in oracle named {builtin.text}",
                        builtin.line,
                        builtin.col,
                    )
                self.expect(";")
                hint.append(builtin.text)
            else:
                raise DocumentSyntaxError(
                    f"expected op, eq or oracle, found {keyword.text!r}",
                    keyword.line,
                    keyword.col,
                )

        self.statements(statement)
        if not self.declare("theory", name):
            return

        signature = make_signature((s.text, arity) for s, arity in ops)
        identities = []
        for keyword, lhs, rhs in equations:
            names = {}
            try:
                left = self.elaborate(lhs, signature, names)
                right = self.elaborate(rhs, signature, names)
                identities.append(Identity(len(names), left, right))
            except DocumentError as error:
                self.errors.append(error)
        try:
            presentation = TheoryPresentation(
                signature,
                tuple(identities),
                name=name.text,
                oracle_hint=hint[-1] if hint else "",
            )
        except InvalidPresentation as error:
            self.errors.append(DocumentError(str(error), name.line, name.col))
            return
        self.document.theories[name.text] = presentation

    def term(self):
        head = self.expect_name("a term")
        args = []
        applied = False
        if self.at("("):
            applied = True
            self.advance()
            args.append(self.term())
            while self.at(","):
                self.advance()
                args.append(self.term())
            self.expect(")")
        return RawTerm(head.text, tuple(args), applied, head.line, head.col)

    def elaborate(self, raw, signature, names):
        if raw.name in signature:
            arity = signature.arity(raw.name)
            if len(raw.args) != arity:
                raise ArityMismatch(
                    f"{raw.name} expects {arity} arguments, "
                    f"got {len(raw.args)}",
                    raw.line,
                    raw.col,
                )
            return App(
                raw.name,
                tuple(self.elaborate(a, signature, names) for a in raw.args),
            )
        if raw.applied:
            raise UnknownName(
                f"unknown operation {raw.name}", raw.line, raw.col
            )
        if raw.name not in names:
            names[raw.name] = len(names)
        return Var(names[raw.name])

    def point_list(self, points):
        while not self.at(";"):
            point = self.expect_name("a point")
            if point.text in points:
                raise DocumentError(
                    f"point {point.text} is listed twice",
                    point.line,
                    point.col,
                )
            points.append(point.text)
        self.expect(";")

    def set_block(self):
        self.expect("set")
        name = self.expect_name("a set name")
        points = []

        def statement():
            self.expect("points")
            self.point_list(points)

        self.statements(statement)
        if not self.declare("set", name):
            return
        self.document.sets[name.text] = FiniteSet(tuple(points))

    def space_block(self):
        self.expect("space")
        name = self.expect_name("a space name")
        points, pairs = [], []

        def order_pair():
            low = self.expect_name("a point")
            self.expect("<=")
            high = self.expect_name("a point")
            pairs.append((low, high))

        def statement():
            keyword = self.expect_name("points or order")
            if keyword.text == "points":
                self.point_list(points)
            elif keyword.text == "order":
                order_pair()
                while self.at(","):
                    self.advance()
                    order_pair()
                self.expect(";")
            else:
                raise DocumentSyntaxError(
                    f"expected points or order, found {keyword.text!r}",
                    keyword.line,
                    keyword.col,
                )

        self.statements(statement)
        unknown = [
            UnknownName(
                f"{token.text} is not a point of {name.text}",
                token.line,
                token.col,
            )
            for low, high in pairs
            for token in (low, high)
            if token.text not in points
        ]
        if unknown:
            self.errors.extend(unknown)
            return
        if not self.declare("space", name):
            return
        try:
            space = FinSpace.build(
                tuple(points), [(low.text, high.text) for low, high in pairs]
            )
        except InvalidSpace as error:
            self.errors.append(DocumentError(str(error), name.line, name.col))
            return
        self.document.spaces[name.text] = space

    def structure_block(self):
        self.expect("structure")
        name = self.expect_name("a structure name")
        self.expect(":")
        theory_token = self.expect_name("a theory name")
        self.expect("on")
        carrier_token = self.expect_name("a set or space name")

        try:
            presentation = self.document.theory(theory_token.text)
        except UnknownName as error:
            raise UnknownName(
                error.message, theory_token.line, theory_token.col
            )
        try:
            carrier, _ = self.document.carrier(carrier_token.text)
        except UnknownName as error:
            raise UnknownName(
                error.message, carrier_token.line, carrier_token.col
            )
        signature = presentation.signature
        tables = {symbol: {} for symbol in signature.names}

        def point(token):
            if token.text not in carrier:
                raise UnknownName(
                    f"{token.text} is not a point of {carrier_token.text}",
                    token.line,
                    token.col,
                )
            return token.text

        def statement():
            symbol = self.expect_name("an operation name")
            args = []
            if self.at("("):
                self.advance()
                args.append(self.expect_name("a point"))
                while self.at(","):
                    self.advance()
                    args.append(self.expect_name("a point"))
                self.expect(")")
            self.expect("=")
            value = self.expect_name("a point")
            if symbol.text not in signature:
                raise UnknownName(
                    f"{theory_token.text} has no operation {symbol.text}",
                    symbol.line,
                    symbol.col,
                )
            arity = signature.arity(symbol.text)
            if len(args) != arity:
                raise ArityMismatch(
                    f"{symbol.text} expects {arity} arguments, "
                    f"got {len(args)}",
                    symbol.line,
                    symbol.col,
                )
            key = tuple(point(token) for token in args)
            if key in tables[symbol.text]:
                raise DocumentError(
                    f"{symbol.text} is defined twice at {key}",
                    symbol.line,
                    symbol.col,
                )
            tables[symbol.text][key] = point(value)
            self.expect(";")

        self.statements(statement)
        if not self.declare("structure", name):
            return

        for symbol, arity in signature.symbols:
            for key in itertools.product(carrier.points, repeat=arity):
                if key not in tables[symbol]:
                    label = f"{symbol}({','.join(key)})" if arity else symbol
                    self.errors.append(
                        DocumentError(
                            f"{name.text} leaves {label} undefined",
                            name.line,
                            name.col,
                        )
                    )
        self.document.structures[name.text] = StructureDecl(
            name.text, theory_token.text, carrier_token.text, tables
        )


def parse_spec(text):
    """
    Parse and elaborate a document.

    :raises DocumentErrorList: with every positioned error found
    """
    return Parser(text).parse()
