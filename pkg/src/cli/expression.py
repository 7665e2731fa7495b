"""
Generating-function expressions for the command line.

This module provides:
1. A pyparsing grammar for expressions such as
   "(1-2*t-sqrt(1-4*t))/(2*t)"
2. A small AST with a printer whose output parses back to the same tree
3. Exact evaluation of an AST to a Series of a requested order

Grammar, loosest binding first:

    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := "-"* power
    power   := atom ("^" integer)?
    atom    := integer | "t" | "sqrt(" sum ")" | "(" sum ")"

Rationals are written as quotients of integers ("1/3"). Division by a
series with zero constant term is allowed when the numerator cancels the
same power of t.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Union

import pyparsing as pp

from src.errors import DivByNonUnit, GFSyntaxError, InsufficientOrder
from src.series import Series, sqrt

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Symbol:
    name: str = "t"


@dataclass(frozen=True)
class Neg:
    operand: "GFExpression"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "GFExpression"
    right: "GFExpression"


@dataclass(frozen=True)
class Pow:
    base: "GFExpression"
    exponent: int


@dataclass(frozen=True)
class Sqrt:
    argument: "GFExpression"


GFExpression = Union[Num, Symbol, Neg, BinOp, Pow, Sqrt]


def _reject_name(s, loc, toks):
    raise pp.ParseFatalException(
        s, loc, f"unknown name '{toks[0]}': only t and sqrt(...) are allowed, composition is not supported"
    )


def _fold_power(toks):
    base = toks[0]
    if len(toks) == 1:
        return base
    return Pow(base, int(toks[1]))


def _fold_unary(toks):
    node = toks[-1]
    for _ in range(len(toks) - 1):
        node = Neg(node)
    return node


def _fold_binary(toks):
    node = toks[0]
    for i in range(1, len(toks), 2):
        node = BinOp(toks[i], node, toks[i + 1])
    return node


def make_grammar() -> pp.ParserElement:
    """Build the expression grammar."""
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    expr = pp.Forward()

    integer = pp.Word(pp.nums).set_parse_action(lambda toks: Num(int(toks[0])))
    exponent = pp.Word(pp.nums)
    symbol = pp.Keyword("t").set_parse_action(lambda: Symbol())
    sqrt_call = (pp.Keyword("sqrt").suppress() + lpar + expr + rpar).set_parse_action(lambda toks: Sqrt(toks[0]))
    unknown = pp.Word(pp.alphas + "_", pp.alphanums + "_").set_parse_action(_reject_name)

    atom = sqrt_call | symbol | integer | (lpar + expr + rpar) | unknown
    power = (atom + pp.Optional(pp.Suppress("^") + exponent)).set_parse_action(_fold_power)
    unary = (pp.ZeroOrMore(pp.Literal("-")) + power).set_parse_action(_fold_unary)
    product = (unary + pp.ZeroOrMore(pp.one_of("* /") + unary)).set_parse_action(_fold_binary)
    total = (product + pp.ZeroOrMore(pp.one_of("+ -") + product)).set_parse_action(_fold_binary)
    expr <<= total
    return expr.parse_with_tabs()


_GRAMMAR = make_grammar()


def parse_gf(text: str) -> GFExpression:
    """
    Parse a generating-function expression.

    Args:
        text: The expression, in the variable t

    Returns:
        The AST

    Raises:
        GFSyntaxError: With the byte offset of the problem
    """
    try:
        result = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        offset = len(text[:exc.loc].encode("utf-8"))
        raise GFSyntaxError(exc.msg, offset) from exc
    return result[0]


def _needs_parens(node: GFExpression) -> bool:
    return isinstance(node, (BinOp, Neg, Pow))


def _wrapped(node: GFExpression) -> str:
    text = to_text(node)
    return f"({text})" if _needs_parens(node) else text


def to_text(node: GFExpression) -> str:
    """Render an AST; parse_gf(to_text(e)) == e."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Symbol):
        return "t"
    if isinstance(node, Sqrt):
        return f"sqrt({to_text(node.argument)})"
    if isinstance(node, Neg):
        return f"-{_wrapped(node.operand)}"
    if isinstance(node, Pow):
        return f"{_wrapped(node.base)}^{node.exponent}"
    return f"{_wrapped(node.left)} {node.op} {_wrapped(node.right)}"


def _divide(a: Series, b: Series) -> Series:
    if b.coeffs[0] != 0:
        return a / b
    k = b.valuation()
    if k is None:
        raise DivByNonUnit("division by a series that vanishes to its known order")
    # both sides lose t^k; divide_t raises UncanceledPole when a cannot
    return a.divide_t(k) / b.divide_t(k)


def _evaluate(node: GFExpression, order: int) -> Series:
    if isinstance(node, Num):
        return Series.constant(node.value, order)
    if isinstance(node, Symbol):
        return Series.t(order)
    if isinstance(node, Neg):
        return -_evaluate(node.operand, order)
    if isinstance(node, Pow):
        return _evaluate(node.base, order).pow(node.exponent)
    if isinstance(node, Sqrt):
        return sqrt(_evaluate(node.argument, order))
    left, right = _evaluate(node.left, order), _evaluate(node.right, order)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return _divide(left, right)


def evaluate_gf(node: GFExpression, order: int) -> Series:
    """
    Expand an expression to a Series known to the given order.

    Cancelling powers of t costs precision, so evaluation is repeated at
    a higher working order until the result reaches `order`.

    Raises:
        DivByNonUnit, NonSquareConstantTerm, UncanceledPole: On invalid input
    """
    work = max(order, 1)
    failure: Optional[DivByNonUnit] = None
    for _ in range(8):
        try:
            value = _evaluate(node, work)
        except DivByNonUnit as exc:
            # a divisor may vanish only because it is truncated too early
            failure = exc
            logger.debug("divisor vanished at working order %d; retrying", work)
            work += max(order, 1)
            continue
        failure = None
        if value.order >= order:
            return value.truncate(order)
        logger.debug("expression lost %d orders; retrying", order - value.order)
        work += order - value.order
    if failure is not None:
        raise failure
    raise InsufficientOrder(f"could not expand the expression to order {order}")


def series_from_text(text: str, order: int) -> Series:
    return evaluate_gf(parse_gf(text), order)
