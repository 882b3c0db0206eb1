"""Expression trees for basis functions, with a small recursive-descent parser.

Grammar, loosest binding first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?          # right associative
    atom    := NUMBER | VAR | FUNC '(' expr ')' | '(' expr ')'

Exponents must fold to a non-negative integer constant, and divisors to a
nonzero constant, so polynomial-pure trees stay evaluable in exact
rational arithmetic.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exactnum import InvalidInputError

FUNCTIONS = ("sin", "cos", "exp")
_FLOAT_FUNCS = {"sin": math.sin, "cos": math.cos, "exp": math.exp}
_NAMED_VARS = {"x": 1, "y": 2, "z": 3}


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


Expr = Union[Const, Var, Neg, BinOp, Pow, Call]


def is_polynomial(e: Expr) -> bool:
    """True iff no sin/cos/exp node occurs in ``e``."""
    if isinstance(e, (Const, Var)):
        return True
    if isinstance(e, Call):
        return False
    if isinstance(e, Neg):
        return is_polynomial(e.arg)
    if isinstance(e, Pow):
        return is_polynomial(e.base)
    return is_polynomial(e.left) and is_polynomial(e.right)


def max_variable(e: Expr) -> int:
    if isinstance(e, Var):
        return e.index
    if isinstance(e, Const):
        return 0
    if isinstance(e, (Neg, Call)):
        return max_variable(e.arg)
    if isinstance(e, Pow):
        return max_variable(e.base)
    return max(max_variable(e.left), max_variable(e.right))


def _constant_value(e: Expr):
    """Fold a variable-free polynomial subtree, or return None."""
    if max_variable(e) or not is_polynomial(e):
        return None
    return evaluate_exact(e, ())


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, k: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.k = k

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            what = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {value!r}, found {what}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        return e

    def expr(self):
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op, pos = self.take()[1:]
            right = self.unary()
            if op == "/":
                divisor = _constant_value(right)
                if divisor is None:
                    raise ExprSyntaxError("divisor must be a constant", pos)
                if divisor == 0:
                    raise ExprSyntaxError("division by zero", pos)
                if isinstance(left, Const) and isinstance(right, Const):
                    left = Const(left.value / right.value)
                    continue
            left = BinOp(op, left, right)
        return left

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            exp_pos = self.peek()[2]
            exponent = _constant_value(self.unary())
            if exponent is None or exponent.denominator != 1:
                raise ExprSyntaxError("exponent must be an integer constant", exp_pos)
            if exponent < 0:
                raise ExprSyntaxError("exponent must be non-negative", exp_pos)
            return Pow(base, int(exponent))
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Const(Fraction(val))
        if kind == "name":
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(val, arg)
            index = _variable_index(val)
            if index is None:
                raise ExprSyntaxError(f"unknown identifier {val!r}", pos)
            if index > self.k:
                raise ExprSyntaxError(
                    f"variable {val!r} exceeds dimension k={self.k}", pos
                )
            return Var(index)
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {what}", pos)


def _variable_index(name: str):
    if name in _NAMED_VARS:
        return _NAMED_VARS[name]
    m = re.fullmatch(r"x([1-9])", name)
    return int(m.group(1)) if m else None


def parse_expression(text: str, k: int) -> Expr:
    """Parse ``text`` into an expression over variables ``x1..xk``.

    ``x``, ``y`` and ``z`` alias ``x1``, ``x2`` and ``x3``.
    """
    return _Parser(text, k).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(e: Expr, k: int = 3) -> str:
    """Render ``e`` so that :func:`parse_expression` gives back the same tree."""
    return _render(e, k, 0)


def _var_name(index: int, k: int) -> str:
    if k <= 3:
        return "xyz"[index - 1]
    return f"x{index}"


def _render(e: Expr, k: int, outer: int) -> str:
    # outer: 0 top, 1 additive, 2 multiplicative, 3 unary, 4 power base
    if isinstance(e, Const):
        v = e.value
        if v.denominator == 1:
            s = str(v.numerator)
            return f"({s})" if v < 0 and outer >= 2 else s
        s = f"({abs(v.numerator)}/{v.denominator})"
        if v < 0:
            return f"(-{s})" if outer >= 2 else f"-{s}"
        return s
    if isinstance(e, Var):
        return _var_name(e.index, k)
    if isinstance(e, Call):
        return f"{e.func}({_render(e.arg, k, 0)})"
    if isinstance(e, Neg):
        s = "-" + _render(e.arg, k, 3)
        return f"({s})" if outer >= 2 else s
    if isinstance(e, Pow):
        s = f"{_render(e.base, k, 4)}^{e.exponent}"
        return f"({s})" if outer >= 4 else s
    prec = _PREC[e.op]
    # parenthesize same-precedence right operands: the parser is left associative
    s = f"{_render(e.left, k, prec)} {e.op} {_render(e.right, k, prec + 1)}"
    return f"({s})" if outer > prec else s


def evaluate_exact(e: Expr, point: Sequence[Fraction]) -> Fraction:
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        return Fraction(point[e.index - 1])
    if isinstance(e, Neg):
        return -evaluate_exact(e.arg, point)
    if isinstance(e, Pow):
        return evaluate_exact(e.base, point) ** e.exponent
    if isinstance(e, Call):
        raise InvalidInputError(f"{e.func} has no exact rational value")
    a = evaluate_exact(e.left, point)
    b = evaluate_exact(e.right, point)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    return a / b


def evaluate_float(e: Expr, point: Sequence) -> float:
    try:
        value = _eval_float(e, point)
    except OverflowError as exc:
        raise InvalidInputError("floating-point overflow during evaluation") from exc
    if not math.isfinite(value):
        raise InvalidInputError("floating-point overflow during evaluation")
    return value


def _eval_float(e: Expr, point) -> float:
    if isinstance(e, Const):
        return float(e.value)
    if isinstance(e, Var):
        return float(point[e.index - 1])
    if isinstance(e, Neg):
        return -_eval_float(e.arg, point)
    if isinstance(e, Pow):
        return _eval_float(e.base, point) ** e.exponent
    if isinstance(e, Call):
        return _FLOAT_FUNCS[e.func](_eval_float(e.arg, point))
    a = _eval_float(e.left, point)
    b = _eval_float(e.right, point)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    return a / b
