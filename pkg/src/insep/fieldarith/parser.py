"""Recursive-descent parser for field expressions.

Grammar:
    expr   := ['-'] term  (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' NAT)?
    base   := NAT | IDENT | '(' expr ')'

NAT is a decimal literal reduced mod p, IDENT a declared variable.  Whitespace
is insignificant.  format(parse(x)) reparses to an equal value.
"""

from .ratfunc import FunctionField


class ParseError(ValueError):
    """Syntax error with a 0-based character position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class UnknownVariableError(ParseError):
    def __init__(self, name, position):
        super().__init__("unknown variable %r" % name, position)
        self.name = name


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return None, self.pos
        return self.text[self.pos], self.pos

    def take_symbol(self, symbols):
        ch, _ = self.peek()
        if ch is not None and ch in symbols:
            self.pos += 1
            return ch
        return None

    def take_nat(self):
        ch, start = self.peek()
        if ch is None or not ch.isdigit():
            return None, start
        end = self.pos
        while end < len(self.text) and self.text[end].isdigit():
            end += 1
        value = int(self.text[self.pos:end])
        self.pos = end
        return value, start

    def take_ident(self):
        ch, start = self.peek()
        if ch is None or not (ch.isalpha() or ch == "_"):
            return None, start
        end = self.pos
        while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
            end += 1
        name = self.text[self.pos:end]
        self.pos = end
        return name, start


def parse_expr(text, field):
    """Parse an expression string into a RatFunc over the given field.

    ``field`` is a FunctionField or a JSON-style descriptor {"p": ..., "vars": [...]}.
    """
    if isinstance(field, dict):
        field = FunctionField.from_descriptor(field)
    toks = _Tokens(text)
    value = _parse_sum(toks, field)
    ch, pos = toks.peek()
    if ch is not None:
        raise ParseError("unexpected %r" % ch, pos)
    return value


def _parse_sum(toks, field):
    negate = toks.take_symbol("-") is not None
    value = _parse_term(toks, field)
    if negate:
        value = -value
    while True:
        op = toks.take_symbol("+-")
        if op is None:
            return value
        rhs = _parse_term(toks, field)
        value = value + rhs if op == "+" else value - rhs


def _parse_term(toks, field):
    value = _parse_factor(toks, field)
    while True:
        op = toks.take_symbol("*/")
        if op is None:
            return value
        rhs = _parse_factor(toks, field)
        value = value * rhs if op == "*" else value / rhs


def _parse_factor(toks, field):
    value = _parse_base(toks, field)
    if toks.take_symbol("^"):
        n, pos = toks.take_nat()
        if n is None:
            raise ParseError("expected exponent after '^'", pos)
        value = value ** n
    return value


def _parse_base(toks, field):
    n, _ = toks.take_nat()
    if n is not None:
        return field.from_int(n)
    name, pos = toks.take_ident()
    if name is not None:
        if name not in field.vars:
            raise UnknownVariableError(name, pos)
        return field.gen(name)
    if toks.take_symbol("("):
        value = _parse_sum(toks, field)
        ch, pos = toks.peek()
        if ch != ")":
            raise ParseError("expected ')'", pos)
        toks.pos += 1
        return value
    ch, pos = toks.peek()
    raise ParseError("expected a number, variable or '('" if ch is None
                     else "unexpected %r" % ch, pos)
