"""Shared element expression grammar.

Whitespace-insensitive.  Supported forms: integer literals (negative only
where the carrier has them), rational literals via division of integer
literals, the reserved literal ``inf`` (tropical carriers only), the
indeterminate ``X``, ``^`` with integer exponents (parenthesised rationals
where the exponent monoid allows them), ``+``, ``*``, and ``(e1)/(e2)``
building a fraction over a fraction instance.  Content polynomials use the
same grammar extended with the fresh indeterminate ``Y``.

Ideal literals: ``ideal[e1, e2, ...]`` and ``fuzzy[0,a]`` / ``fuzzy[0,a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .content import ContentPolynomial, cp_add, cp_mul, make_content_poly
from .ideals import IntervalIdeal, make_ideal
from .instances import FractionSemiring, MonoidSemiring
from .semiring import Element, Semiring


class ParseError(ValueError):
    """Syntax error with position and the tokens that were expected."""

    def __init__(self, message: str, pos: int, expected: tuple[str, ...] = ()):
        self.pos = pos
        self.expected = expected
        text = f"{message} at position {pos}"
        if expected:
            text += " (expected " + " or ".join(expected) + ")"
        super().__init__(text)


@dataclass(frozen=True)
class _Token:
    kind: str  # int, name, sym, end
    value: object
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+*/^()[],-":
            tokens.append(_Token("sym", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    """Recursive descent over +, * and /, ^, atoms."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym: str) -> _Token:
        tok = self.peek()
        if tok.kind == "sym" and tok.value == sym:
            return self.take()
        raise ParseError("syntax error", tok.pos, (repr(sym),))

    def at_sym(self, sym: str) -> bool:
        tok = self.peek()
        return tok.kind == "sym" and tok.value == sym

    def parse_expr(self):
        node = self.parse_term()
        while self.at_sym("+"):
            self.take()
            node = ("add", node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_power()
        while self.at_sym("*") or self.at_sym("/"):
            op = self.take().value
            rhs = self.parse_power()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def parse_power(self):
        node = self.parse_atom()
        if self.at_sym("^"):
            self.take()
            node = ("pow", node, self.parse_exponent())
        return node

    def parse_exponent(self):
        tok = self.peek()
        if self.at_sym("-"):
            self.take()
            num = self.peek()
            if num.kind != "int":
                raise ParseError("syntax error", num.pos, ("integer",))
            self.take()
            return -num.value
        if tok.kind == "int":
            self.take()
            return tok.value
        if self.at_sym("("):
            self.take()
            sign = 1
            if self.at_sym("-"):
                self.take()
                sign = -1
            num = self.peek()
            if num.kind != "int":
                raise ParseError("syntax error", num.pos, ("integer",))
            self.take()
            self.expect_sym("/")
            den = self.peek()
            if den.kind != "int":
                raise ParseError("syntax error", den.pos, ("integer",))
            self.take()
            self.expect_sym(")")
            return Fraction(sign * num.value, den.value)
        raise ParseError("syntax error", tok.pos, ("integer exponent",))

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return ("int", tok.value)
        if tok.kind == "sym" and tok.value == "-":
            self.take()
            num = self.peek()
            if num.kind != "int":
                raise ParseError("syntax error", num.pos, ("integer",))
            self.take()
            return ("int", -num.value)
        if tok.kind == "name":
            self.take()
            return ("name", tok.value, tok.pos)
        if tok.kind == "sym" and tok.value == "(":
            self.take()
            node = self.parse_expr()
            self.expect_sym(")")
            return node
        raise ParseError("syntax error", tok.pos,
                         ("literal", "'X'", "'('",))

    def finish(self, node):
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError("trailing input", tok.pos, ("end of input",))
        return node


def _parse_ast(text: str):
    p = _Parser(text)
    return p.finish(p.parse_expr())


def _int_literal(node):
    return node[1] if node[0] == "int" else None


def _eval_element(node, instance: Semiring) -> Element:
    kind = node[0]
    if kind == "int":
        return instance.from_literal(node[1])
    if kind == "name":
        name, pos = node[1], node[2]
        if name == "X":
            return instance.indeterminate()
        if name == "inf":
            return instance.infinity()
        raise ParseError(f"unknown name {name!r}", pos, ("'X'", "'inf'"))
    if kind == "add":
        return instance.add(_eval_element(node[1], instance),
                            _eval_element(node[2], instance))
    if kind == "mul":
        return instance.mul(_eval_element(node[1], instance),
                            _eval_element(node[2], instance))
    if kind == "div":
        if isinstance(instance, FractionSemiring):
            num = _eval_element(node[1], instance.base)
            den = _eval_element(node[2], instance.base)
            return instance.fraction(num, den)
        left_int = _int_literal(node[1])
        right_int = _int_literal(node[2])
        if left_int is not None and right_int is not None:
            return instance.from_literal(Fraction(left_int, right_int))
        if instance.caps.semifield:
            return instance.div(_eval_element(node[1], instance),
                                _eval_element(node[2], instance))
        raise ValueError(f"{instance.sid} has no division")
    if kind == "pow":
        exponent = node[2]
        if isinstance(exponent, Fraction):
            base_node = node[1]
            if (base_node[0] == "name" and base_node[1] == "X"
                    and isinstance(instance, MonoidSemiring)
                    and instance.exponents == "Q"):
                return instance.element(
                    instance.monomial_payload(exponent, instance.base._one()))
            raise ValueError(f"{instance.sid}: rational exponents only apply "
                             "to X over rational exponent monoids")
        return instance.power(_eval_element(node[1], instance), exponent)
    raise AssertionError(f"unhandled node {node!r}")


def parse_element(text: str, instance: Semiring) -> Element:
    """Parse one element of the given instance from the shared grammar."""
    return _eval_element(_parse_ast(text), instance)


def _eval_content(node, instance: Semiring) -> ContentPolynomial:
    kind = node[0]
    if kind == "name" and node[1] == "Y":
        return make_content_poly(instance, [instance.zero, instance.one])
    if kind == "add":
        return cp_add(_eval_content(node[1], instance),
                      _eval_content(node[2], instance))
    if kind == "mul":
        return cp_mul(_eval_content(node[1], instance),
                      _eval_content(node[2], instance))
    if kind == "pow" and isinstance(node[2], int) and _mentions_y(node[1]):
        if node[2] < 0:
            raise ValueError("negative powers of Y are not polynomials")
        base = _eval_content(node[1], instance)
        out = make_content_poly(instance, [instance.one])
        for _ in range(node[2]):
            out = cp_mul(out, base)
        return out
    if _mentions_y(node):
        raise ValueError("Y may only appear in sums, products and powers")
    return make_content_poly(instance, [_eval_element(node, instance)])


def _mentions_y(node) -> bool:
    if node[0] == "name":
        return node[1] == "Y"
    if node[0] in ("add", "mul", "div"):
        return _mentions_y(node[1]) or _mentions_y(node[2])
    if node[0] == "pow":
        return _mentions_y(node[1])
    return False


def parse_content_polynomial(text: str, instance: Semiring) -> ContentPolynomial:
    """Parse a polynomial in the fresh indeterminate Y with coefficients in
    the given instance."""
    return _eval_content(_parse_ast(text), instance)


def parse_ideal(text: str, instance: Semiring, dvs=None):
    """Parse ``ideal[e1, ...]`` into a finitely generated ideal, or
    ``fuzzy[0,a]`` / ``fuzzy[0,a)`` into an interval ideal."""
    stripped = text.strip()
    if stripped.startswith("ideal[") and stripped.endswith("]"):
        inner = stripped[len("ideal["):-1]
        parts = _split_top_level(inner)
        gens = [parse_element(part, instance) for part in parts if part.strip()]
        if not gens:
            raise ParseError("an ideal needs at least one generator",
                             len("ideal["))
        return make_ideal(instance, gens, dvs=dvs)
    if stripped.startswith("fuzzy[0,") and stripped[-1] in ")]":
        if instance.sid != "fuzzy":
            raise ValueError("interval ideals only exist over fuzzy")
        closed = stripped.endswith("]")
        endpoint = parse_element(stripped[len("fuzzy[0,"):-1], instance)
        return IntervalIdeal(endpoint.payload, closed)
    raise ParseError("expected ideal[...] or fuzzy[0,...]", 0)


def _split_top_level(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts
