"""Parser for the ring-element expression language shared by the CLI.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := [scalar '*'] factor ('.' factor)*  |  scalar
    factor := ident | ident '^*' | '(' expr ')' | '[' expr '@' index ',' index ']'
    index  := '0' | ident ('.' ident)*
    scalar := integer ['/' integer]

Parsing produces a small tuple AST; ``evaluate`` folds it with callbacks
supplied by the target algebra.
"""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\^\*)|([-+*./()\[\]@,]))")


class ExpressionError(ValueError):
    pass


def tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos:].strip()[:1]!r} at column {pos + 1}")
        num, ident, star, sym = m.groups()
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("id", ident))
        elif star is not None:
            out.append(("sym", "^*"))
        else:
            out.append(("sym", sym))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            got = tok[1] if tok[0] else "end of input"
            raise ExpressionError(f"expected {want!r}, got {got!r}")
        self.i += 1
        return tok

    def at(self, value):
        return self.peek()[0] == "sym" and self.peek()[1] == value

    def expr(self):
        terms = []
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        elif self.at("+"):
            self.take()
        terms.append((sign, self.term()))
        while self.at("+") or self.at("-"):
            sign = 1 if self.take()[1] == "+" else -1
            terms.append((sign, self.term()))
        return ("add", terms)

    def scalar(self):
        c = Fraction(int(self.take("num")[1]))
        if self.at("/") and self.peek(1)[0] == "num":
            self.take()
            d = int(self.take("num")[1])
            if d == 0:
                raise ExpressionError("zero denominator in scalar")
            c /= d
        return c

    def term(self):
        if self.peek()[0] == "num":
            c = self.scalar()
            if not self.at("*"):
                return ("num", c)
            self.take()
            return ("scale", c, self.product())
        return self.product()

    def product(self):
        factors = [self.factor()]
        while self.at("."):
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else ("mul", factors)

    def factor(self):
        if self.at("("):
            self.take()
            node = self.expr()
            self.take("sym", ")")
            return node
        if self.at("["):
            self.take()
            coeff = self.expr()
            self.take("sym", "@")
            p = self.index()
            self.take("sym", ",")
            q = self.index()
            self.take("sym", "]")
            return ("unit", coeff, p, q)
        name = self.take("id")[1]
        if self.at("^*"):
            self.take()
            return ("star", name)
        return ("id", name)

    def index(self):
        if self.peek()[0] == "num":
            if self.take()[1] != "0":
                raise ExpressionError("matrix index must be '0' or an edge list")
            return None
        names = [self.take("id")[1]]
        while self.at("."):
            self.take()
            names.append(self.take("id")[1])
        return tuple(names)


def parse(text: str):
    p = _Parser(tokenize(text))
    if not p.toks:
        raise ExpressionError("empty expression")
    node = p.expr()
    if p.i != len(p.toks):
        raise ExpressionError(f"unexpected trailing input {p.peek()[1]!r}")
    return node


def evaluate(node, env):
    """Fold an AST.

    ``env`` must provide ``scalar(c)``, ``ident(name)``, ``star(name)`` and,
    if matrix units occur, ``unit(coeff_node, p, q)``.
    """
    kind = node[0]
    if kind == "add":
        acc = None
        for sign, sub in node[1]:
            val = evaluate(sub, env)
            if sign < 0:
                val = -val
            acc = val if acc is None else acc + val
        return acc
    if kind == "num":
        return env.scalar(node[1])
    if kind == "scale":
        return env.scale(node[1], evaluate(node[2], env))
    if kind == "mul":
        acc = evaluate(node[1][0], env)
        for sub in node[1][1:]:
            acc = acc * evaluate(sub, env)
        return acc
    if kind == "id":
        return env.ident(node[1])
    if kind == "star":
        return env.star(node[1])
    if kind == "unit":
        if not hasattr(env, "unit"):
            raise ExpressionError("matrix units are not allowed here")
        return env.unit(node[1], node[2], node[3])
    raise ExpressionError(f"bad node {kind}")
