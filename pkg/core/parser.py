"""
Recursive-descent parser for the expression grammar:

    expr     := term (("+"|"-") term)*
    term     := factor (("*"|"/") factor)*
    factor   := base ("^" nonneg-int)?
    base     := rational | ident | "(" expr ")" | "-" base
    rational := int ("/" posint)?
    ident    := "x" posint                     must be one of the declared variables

Unary minus and literal fractions sit inside base, below "^": "-x1^2" is
(-x1)^2 and "2/3^2" is (2/3)^2. Write -(x1^2) as "-1*x1^2" or "-(x1^2)".
Errors carry the 0-based character position of the offending token.
"""
import re
from dataclasses import dataclass
from typing import List, Sequence

from sympy import Rational

from core.expr import Expr
from core.ring import coordinate_ring
from exceptions import ExprParseError, UnknownIdentifierError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str   # "int", "ident", "op", "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        start = match.start(match.lastindex)
        integer, ident, op = match.groups()
        if integer is not None:
            tokens.append(Token("int", integer, start))
        elif ident is not None:
            tokens.append(Token("ident", ident, start))
        elif op in "+-*/^()":
            tokens.append(Token("op", op, start))
        else:
            raise ExprParseError(f"unexpected character {op!r}", start)
        pos = match.end()
    tokens.append(Token("end", "", length))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.ring = coordinate_ring(vars)
        self.index = {name: i for i, name in enumerate(vars)}
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _at_op(self, symbol: str) -> bool:
        return self.current.kind == "op" and self.current.text == symbol

    def _expect_op(self, symbol: str) -> Token:
        if not self._at_op(symbol):
            raise ExprParseError(f"expected '{symbol}', found {self._describe()}", self.current.position)
        return self._advance()

    def _describe(self) -> str:
        token = self.current
        return "end of input" if token.kind == "end" else f"'{token.text}'"

    def parse(self) -> Expr:
        if self.current.kind == "end":
            raise ExprParseError("empty expression", 0)
        result = self.expr()
        if self.current.kind != "end":
            raise ExprParseError(f"unexpected {self._describe()}", self.current.position)
        return result

    def expr(self) -> Expr:
        result = self.term()
        while self._at_op("+") or self._at_op("-"):
            op = self._advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Expr:
        result = self.factor()
        while self._at_op("*") or self._at_op("/"):
            op = self._advance().text
            divisor = self.current
            rhs = self.factor()
            if op == "*":
                result = result * rhs
            else:
                if rhs.is_zero():
                    literal = divisor.kind == "int"
                    raise ExprParseError("zero denominator literal" if literal else "zero denominator",
                                         divisor.position)
                result = result / rhs
        return result

    def factor(self) -> Expr:
        result = self.base()
        if self._at_op("^"):
            self._advance()
            token = self.current
            if token.kind != "int":
                raise ExprParseError(f"exponent must be a nonnegative integer, found {self._describe()}",
                                     token.position)
            self._advance()
            result = result ** int(token.text)
        return result

    def base(self) -> Expr:
        token = self.current
        if token.kind == "int":
            self._advance()
            return self._rational(token)
        if self._at_op("-"):
            self._advance()
            return -self.base()
        if token.kind == "ident":
            self._advance()
            if token.text not in self.index:
                raise UnknownIdentifierError(token.text, token.position)
            return Expr.variable(self.ring, self.index[token.text])
        if self._at_op("("):
            self._advance()
            inner = self.expr()
            self._expect_op(")")
            return inner
        raise ExprParseError(f"unexpected {self._describe()}", token.position)

    def _rational(self, numerator: Token) -> Expr:
        # int "/" int is one literal; int "/" anything else is left to term()
        if not (self._at_op("/") and self.tokens[self.pos + 1].kind == "int"):
            return Expr.constant(self.ring, int(numerator.text))
        self._advance()
        denominator = self._advance()
        if int(denominator.text) == 0:
            raise ExprParseError("zero denominator literal", denominator.position)
        return Expr.constant(self.ring, Rational(int(numerator.text), int(denominator.text)))


def parse_expr(text: str, vars: Sequence[str]) -> Expr:
    """Parse grammar text into an exact rational function of the given variables."""
    return _Parser(text, list(vars)).parse()
