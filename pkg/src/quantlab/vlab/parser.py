"""Expression front-end for classical observables.

Grammar (whitespace insensitive, explicit '*' required):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint ('/' uint)? | symbol | '(' expr ')' | '-' base

The eight legal symbols are i, hbar, omega, sqrt2, x, y, px, py.  The
AST lowers to a canonical PhasePoly, so printing a polynomial and
parsing it back reproduces the same value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from quantlab.coeffring import Coefficient
from quantlab.phasepoly import PhasePoly, PhaseVar

SYMBOLS = ("i", "hbar", "omega", "sqrt2", "x", "y", "px", "py")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class UnknownSymbolError(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "ExprAST"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-' or '*'
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Pow:
    base: "ExprAST"
    exponent: int


ExprAST = Num | Sym | Neg | BinOp | Pow

_OP_CHARS = set("+-*^/()")


def _tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch.isspace():
            col += 1
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            start_col = col
            while pos < len(text) and text[pos].isdigit():
                pos += 1
                col += 1
            tokens.append(Token("int", text[start:pos], line, start_col))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            start_col = col
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
                col += 1
            tokens.append(Token("name", text[start:pos], line, start_col))
            continue
        if ch in _OP_CHARS:
            tokens.append(Token("op", ch, line, col))
            pos += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def match_op(self, *ops: str) -> Token | None:
        token = self.peek()
        if token.kind == "op" and token.text in ops:
            return self.advance()
        return None

    def error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.peek()
        shown = token.text if token.kind != "end" else "end of input"
        return ParseError(f"{message}, got {shown!r}", token.line, token.column)

    def expr(self) -> ExprAST:
        node = self.term()
        while True:
            op = self.match_op("+", "-")
            if op is None:
                return node
            node = BinOp(op.text, node, self.term())

    def term(self) -> ExprAST:
        node = self.factor()
        while self.match_op("*"):
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> ExprAST:
        node = self.base()
        if self.match_op("^"):
            token = self.peek()
            if token.kind != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.advance()
            return Pow(node, int(token.text))
        return node

    def base(self) -> ExprAST:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            numerator = int(token.text)
            if self.match_op("/"):
                den_token = self.peek()
                if den_token.kind != "int":
                    raise self.error("expected integer denominator")
                self.advance()
                denominator = int(den_token.text)
                if denominator == 0:
                    raise ParseError(
                        "zero denominator in rational literal",
                        den_token.line,
                        den_token.column,
                    )
                return Num(Fraction(numerator, denominator))
            return Num(Fraction(numerator))
        if token.kind == "name":
            self.advance()
            if token.text not in SYMBOLS:
                raise UnknownSymbolError(
                    f"unknown symbol {token.text!r}; legal symbols are "
                    + ", ".join(SYMBOLS),
                    token.line,
                    token.column,
                )
            return Sym(token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.expr()
            if not self.match_op(")"):
                raise self.error("expected ')'")
            return node
        if token.kind == "op" and token.text == "-":
            self.advance()
            return Neg(self.base())
        raise self.error("expected a number, symbol, '(' or '-'")


def parse(text: str) -> ExprAST:
    """Parse an expression string into an AST; raises ParseError on bad input."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise parser.error("unexpected token after expression", tail)
    return node


_SYMBOL_POLYS = {
    "i": PhasePoly.constant(Coefficient.i()),
    "hbar": PhasePoly.constant(Coefficient.hbar()),
    "omega": PhasePoly.constant(Coefficient.omega()),
    "sqrt2": PhasePoly.constant(Coefficient.sqrt2()),
    "x": PhasePoly.variable(PhaseVar.X),
    "y": PhasePoly.variable(PhaseVar.Y),
    "px": PhasePoly.variable(PhaseVar.PX),
    "py": PhasePoly.variable(PhaseVar.PY),
}


def lower(node: ExprAST) -> PhasePoly:
    """Lower an AST to its unique canonical polynomial."""
    match node:
        case Num(value):
            return PhasePoly.constant(value)
        case Sym(name):
            return _SYMBOL_POLYS[name]
        case Neg(operand):
            return -lower(operand)
        case BinOp("+", left, right):
            return lower(left) + lower(right)
        case BinOp("-", left, right):
            return lower(left) - lower(right)
        case BinOp("*", left, right):
            return lower(left) * lower(right)
        case Pow(base, exponent):
            return lower(base) ** exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_polynomial(text: str) -> PhasePoly:
    """Parse and lower in one step."""
    return lower(parse(text))
