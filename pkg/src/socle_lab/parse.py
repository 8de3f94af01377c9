"""The ring-and-ideal input language.

Grammar (statements end with ";", "#" starts a comment to end of line):

    statement  := ring-decl | ideal-decl | print | check
    ring-decl  := "ring" NAME "=" field "[" NAME {"," NAME} "]" [order]
    field      := "Q" | "F" INT          (written juxtaposed: F101)
    order      := "degrevlex" | "lex" | "block" "(" INT ")"
    ideal-decl := "ideal" NAME "=" ideal-expr
    print      := "print" expr
    check      := "check" expr ("==" | "!=") expr
    ideal-expr := "(" poly {"," poly} ")" | NAME | "maxideal"
                | ("colon"|"sum"|"product"|"intersect") "(" ideal-expr "," ideal-expr ")"
                | "power" "(" ideal-expr "," INT ")"
    expr       := INT | scalar-call | ideal-expr
    scalar-call:= ("length"|"mult"|"mu"|"defect"|"dim") "(" ideal-expr ")"
    poly       := ["-"] term {("+"|"-") term}
    term       := factor {"*" factor}
    factor     := atom ["^" INT]
    atom       := INT ["/" INT] | NAME | "(" poly ")"

Ring and ideal names must be bound before use; ideal expressions are
parsed against the most recently declared ring.  Parsing resolves
bindings, so the resulting Script is a closed object: serializing it and
reparsing yields an equal Script.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ScriptError
from .field import GF, QQ
from .order import DEGREVLEX, elimination_order, order_from_name
from .polynomial import Polynomial
from .ring import Ring

IDEAL_FUNCTIONS = ("colon", "sum", "product", "intersect", "power")
SCALAR_FUNCTIONS = ("length", "mult", "mu", "defect", "dim")
KEYWORDS = ("ring", "ideal", "print", "check", "maxideal")

_TOKEN = re.compile(
    r"""(?P<ws>\s+|\#[^\n]*)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<int>\d+)
      | (?P<op>==|!=|[;,()\[\]=+\-*^/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "int" | "op" | "eof"
    text: str
    line: int
    column: int


def tokenize(text: str):
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ScriptError(f"unexpected character {text[pos]!r}", line, col)
        lexeme = m.group(0)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Stream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ScriptError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
            )
        return tok

    def error(self, message: str):
        tok = self.peek()
        raise ScriptError(message, tok.line, tok.column)


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class GensExpr:
    ring: Ring
    polys: tuple


@dataclass(frozen=True)
class NameExpr:
    name: str


@dataclass(frozen=True)
class MaxIdealExpr:
    ring: Ring


@dataclass(frozen=True)
class CallExpr:
    func: str
    args: tuple  # ideal expressions, ints for power()


@dataclass(frozen=True)
class ScalarExpr:
    func: str
    arg: object


@dataclass(frozen=True)
class IntExpr:
    value: int


@dataclass(frozen=True)
class RingDecl:
    name: str
    ring: Ring


@dataclass(frozen=True)
class IdealDecl:
    name: str
    expr: object


@dataclass(frozen=True)
class PrintStmt:
    expr: object


@dataclass(frozen=True)
class CheckStmt:
    left: object
    op: str
    right: object


@dataclass(frozen=True)
class Script:
    statements: tuple


# -- polynomial parsing ------------------------------------------------------


def _parse_poly(ts: _Stream, ring: Ring) -> Polynomial:
    result = _parse_poly_term(ts, ring, negate=_eat_sign(ts))
    while ts.peek().text in ("+", "-"):
        sign = ts.next().text
        result = result + _parse_poly_term(ts, ring, negate=(sign == "-"))
    return result


def _eat_sign(ts: _Stream) -> bool:
    if ts.peek().text == "-":
        ts.next()
        return True
    return False


def _parse_poly_term(ts: _Stream, ring: Ring, negate: bool) -> Polynomial:
    result = _parse_poly_factor(ts, ring)
    while ts.peek().text == "*":
        ts.next()
        result = result * _parse_poly_factor(ts, ring)
    return -result if negate else result


def _parse_poly_factor(ts: _Stream, ring: Ring) -> Polynomial:
    base = _parse_poly_atom(ts, ring)
    if ts.peek().text == "^":
        ts.next()
        tok = ts.next()
        if tok.kind != "int":
            raise ScriptError("exponent must be an integer", tok.line, tok.column)
        return base ** int(tok.text)
    return base


def _parse_poly_atom(ts: _Stream, ring: Ring) -> Polynomial:
    tok = ts.next()
    if tok.kind == "int":
        numerator = int(tok.text)
        if ts.peek().text == "/":
            ts.next()
            den = ts.next()
            if den.kind != "int":
                raise ScriptError("malformed rational literal", den.line, den.column)
            return ring.const(ring.field.from_fraction(numerator, int(den.text)))
        return ring.const(numerator)
    if tok.kind == "name":
        if tok.text not in ring.variables:
            raise ScriptError(
                f"unbound variable {tok.text!r} in ring {ring.ring_id}",
                tok.line,
                tok.column,
            )
        return ring.var(tok.text)
    if tok.text == "(":
        inner = _parse_poly(ts, ring)
        ts.expect(")")
        return inner
    raise ScriptError(
        f"expected a polynomial, found {tok.text!r}", tok.line, tok.column
    )


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    ts = _Stream(tokenize(text))
    poly = _parse_poly(ts, ring)
    tok = ts.peek()
    if tok.kind != "eof":
        raise ScriptError(f"trailing input {tok.text!r}", tok.line, tok.column)
    return poly


def parse_generator_list(ring: Ring, text: str):
    """Parse "(p1, p2, ...)" into a list of polynomials."""
    ts = _Stream(tokenize(text))
    ts.expect("(")
    polys = [_parse_poly(ts, ring)]
    while ts.peek().text == ",":
        ts.next()
        polys.append(_parse_poly(ts, ring))
    ts.expect(")")
    tok = ts.peek()
    if tok.kind != "eof":
        raise ScriptError(f"trailing input {tok.text!r}", tok.line, tok.column)
    return polys


# -- ring descriptors ("F101[x,y]", "Q[x]") ----------------------------------


def parse_ring_descriptor(text: str, order=DEGREVLEX) -> Ring:
    ts = _Stream(tokenize(text))
    ring = _parse_ring_descriptor(ts)
    tok = ts.peek()
    if tok.kind != "eof":
        raise ScriptError(f"trailing input {tok.text!r}", tok.line, tok.column)
    if order is not DEGREVLEX:
        ring = Ring(ring.variables, ring.field, order)
    return ring


def _parse_field(tok: Token):
    if tok.text == "Q":
        return QQ
    m = re.fullmatch(r"F(\d+)", tok.text)
    if m:
        return GF(int(m.group(1)))
    raise ScriptError(
        f"expected a field (Q or F<prime>), found {tok.text!r}",
        tok.line,
        tok.column,
    )


def _parse_ring_descriptor(ts: _Stream) -> Ring:
    field = _parse_field(ts.next())
    ts.expect("[")
    names = []
    tok = ts.next()
    if tok.kind != "name":
        raise ScriptError("expected a variable name", tok.line, tok.column)
    names.append(tok.text)
    while ts.peek().text == ",":
        ts.next()
        tok = ts.next()
        if tok.kind != "name":
            raise ScriptError("expected a variable name", tok.line, tok.column)
        names.append(tok.text)
    ts.expect("]")
    order = DEGREVLEX
    nxt = ts.peek()
    if nxt.kind == "name" and nxt.text in ("degrevlex", "lex", "block"):
        ts.next()
        if nxt.text == "block":
            ts.expect("(")
            size = ts.next()
            if size.kind != "int":
                raise ScriptError("block size must be an integer", size.line, size.column)
            ts.expect(")")
            order = elimination_order(int(size.text))
        else:
            order = order_from_name(nxt.text)
    return Ring(tuple(names), field, order)


# -- script parsing ----------------------------------------------------------


class _ScriptParser:
    def __init__(self, tokens):
        self.ts = _Stream(tokens)
        self.rings = {}
        self.ideals = {}
        self.active_ring = None

    def parse(self) -> Script:
        statements = []
        while self.ts.peek().kind != "eof":
            statements.append(self.statement())
            self.ts.expect(";")
        return Script(tuple(statements))

    def statement(self):
        tok = self.ts.peek()
        if tok.text == "ring":
            return self.ring_decl()
        if tok.text == "ideal":
            return self.ideal_decl()
        if tok.text == "print":
            self.ts.next()
            return PrintStmt(self.expr())
        if tok.text == "check":
            self.ts.next()
            left = self.expr()
            op = self.ts.next()
            if op.text not in ("==", "!="):
                raise ScriptError("expected == or !=", op.line, op.column)
            right = self.expr()
            if _expr_kind(left) != _expr_kind(right):
                raise ScriptError(
                    "check compares values of different kinds", op.line, op.column
                )
            return CheckStmt(left, op.text, right)
        raise ScriptError(
            f"expected a statement, found {tok.text or 'end of input'!r}",
            tok.line,
            tok.column,
        )

    def ring_decl(self) -> RingDecl:
        self.ts.expect("ring")
        name_tok = self.ts.next()
        if name_tok.kind != "name":
            raise ScriptError("expected a ring name", name_tok.line, name_tok.column)
        self.ts.expect("=")
        ring = _parse_ring_descriptor(self.ts)
        decl = RingDecl(name_tok.text, ring)
        self.rings[name_tok.text] = ring
        self.active_ring = ring
        return decl

    def ideal_decl(self) -> IdealDecl:
        self.ts.expect("ideal")
        name_tok = self.ts.next()
        if name_tok.kind != "name":
            raise ScriptError("expected an ideal name", name_tok.line, name_tok.column)
        self.ts.expect("=")
        expr = self.ideal_expr()
        decl = IdealDecl(name_tok.text, expr)
        self.ideals[name_tok.text] = expr
        return decl

    def require_ring(self, tok: Token) -> Ring:
        if self.active_ring is None:
            raise ScriptError("no ring has been declared", tok.line, tok.column)
        return self.active_ring

    def ideal_expr(self):
        tok = self.ts.peek()
        if tok.text == "(":
            ring = self.require_ring(tok)
            self.ts.next()
            polys = [_parse_poly(self.ts, ring)]
            while self.ts.peek().text == ",":
                self.ts.next()
                polys.append(_parse_poly(self.ts, ring))
            self.ts.expect(")")
            return GensExpr(ring, tuple(polys))
        if tok.text == "maxideal":
            self.ts.next()
            return MaxIdealExpr(self.require_ring(tok))
        if tok.kind == "name" and tok.text in IDEAL_FUNCTIONS:
            self.ts.next()
            self.ts.expect("(")
            first = self.ideal_expr()
            self.ts.expect(",")
            if tok.text == "power":
                n = self.ts.next()
                if n.kind != "int":
                    raise ScriptError("power exponent must be an integer", n.line, n.column)
                args = (first, int(n.text))
            else:
                args = (first, self.ideal_expr())
            self.ts.expect(")")
            return CallExpr(tok.text, args)
        if tok.kind == "name":
            self.ts.next()
            if tok.text not in self.ideals:
                raise ScriptError(f"unbound ideal {tok.text!r}", tok.line, tok.column)
            return NameExpr(tok.text)
        raise ScriptError(
            f"expected an ideal expression, found {tok.text!r}", tok.line, tok.column
        )

    def expr(self):
        tok = self.ts.peek()
        if tok.kind == "int":
            self.ts.next()
            return IntExpr(int(tok.text))
        if tok.kind == "name" and tok.text in SCALAR_FUNCTIONS:
            self.ts.next()
            self.ts.expect("(")
            arg = self.ideal_expr()
            self.ts.expect(")")
            return ScalarExpr(tok.text, arg)
        return self.ideal_expr()


def _expr_kind(expr) -> str:
    if isinstance(expr, (IntExpr, ScalarExpr)):
        return "scalar"
    return "ideal"


def parse_script(text: str) -> Script:
    """Parse a script, resolving ring and ideal bindings as it goes."""
    return _ScriptParser(tokenize(text)).parse()


# -- serialization -----------------------------------------------------------


def _ring_text(ring: Ring) -> str:
    return f"{ring.field.key}[{','.join(ring.variables)}] {ring.order.descriptor()}"


def _expr_text(expr) -> str:
    if isinstance(expr, GensExpr):
        return "(" + ", ".join(str(p) for p in expr.polys) + ")"
    if isinstance(expr, NameExpr):
        return expr.name
    if isinstance(expr, MaxIdealExpr):
        return "maxideal"
    if isinstance(expr, CallExpr):
        args = ", ".join(
            str(a) if isinstance(a, int) else _expr_text(a) for a in expr.args
        )
        return f"{expr.func}({args})"
    if isinstance(expr, ScalarExpr):
        return f"{expr.func}({_expr_text(expr.arg)})"
    if isinstance(expr, IntExpr):
        return str(expr.value)
    raise TypeError(f"not an expression: {expr!r}")


def serialize_script(script: Script) -> str:
    lines = []
    for stmt in script.statements:
        if isinstance(stmt, RingDecl):
            lines.append(f"ring {stmt.name} = {_ring_text(stmt.ring)};")
        elif isinstance(stmt, IdealDecl):
            lines.append(f"ideal {stmt.name} = {_expr_text(stmt.expr)};")
        elif isinstance(stmt, PrintStmt):
            lines.append(f"print {_expr_text(stmt.expr)};")
        elif isinstance(stmt, CheckStmt):
            lines.append(
                f"check {_expr_text(stmt.left)} {stmt.op} {_expr_text(stmt.right)};"
            )
        else:
            raise TypeError(f"not a statement: {stmt!r}")
    return "\n".join(lines) + ("\n" if lines else "")
