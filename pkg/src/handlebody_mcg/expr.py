"""Text syntax for words in the named generators.

    expr   := factor (('*' | whitespace) factor)*
    factor := atom ('^' integer)?
    atom   := generator | '(' expr ')' | 'id'

Generators are spelled ``rho``, ``rho12``, ``omega1``, ``tau1``, ``eta11``,
``eta'11``, ``theta12``, ``theta'12``, ``xi12``, ``xi'12``, ``tdelta1``,
``talpha1`` and ``tgamma``.  Each index is a single digit.  A power of a
parenthesised group is expanded, so ``(rho eta11)^2`` has four factors.
The empty string and ``id`` denote the identity.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .generators import GeneratorName, MappingClassExpr
from .words import WordError

_ATOMS = {
    "rho": ("Rho", "RhoExch"),
    "omega": ("Omega",),
    "tau": ("Tau",),
    "eta": ("Eta",),
    "eta'": ("EtaPrime",),
    "theta": ("Theta",),
    "theta'": ("ThetaPrime",),
    "xi": ("Xi",),
    "xi'": ("XiPrime",),
    "tdelta": ("TwistDelta",),
    "talpha": ("TwistAlpha",),
    "tgamma": ("TGamma",),
}

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<name>[A-Za-z]+'?)(?P<digits>\d*)|(?P<pow>\^\s*[-+]?\d+)|(?P<op>[()*])"
)


class ExprSyntaxError(WordError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("name") is not None:
            out.append(("name", m.group("name") + m.group("digits"), pos))
        elif m.group("pow") is not None:
            out.append(("pow", m.group("pow")[1:].strip(), pos))
        elif m.group("op") is not None:
            out.append((m.group("op"), m.group("op"), pos))
        pos = m.end()
    return out


def _atom(token: str, pos: int, genus: int) -> GeneratorName:
    m = re.fullmatch(r"([A-Za-z]+'?)(\d*)", token)
    stem, digits = m.group(1), m.group(2)
    if stem not in _ATOMS:
        raise ExprSyntaxError(f"unknown generator {token!r}", pos)
    idx = tuple(int(c) for c in digits)
    tags = _ATOMS[stem]
    tag = tags[0] if not idx else tags[-1]
    try:
        return GeneratorName(tag, idx).validate(genus)
    except WordError as exc:
        raise ExprSyntaxError(str(exc), pos) from None


class _Parser:
    def __init__(self, text: str, genus: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.genus = genus
        self.end = len(text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self, closing: bool) -> list:
        factors: list = []
        expect_factor = False
        while True:
            t = self.peek()
            if t is None or t[0] == ")":
                if expect_factor:
                    raise ExprSyntaxError("missing factor after '*'", t[2] if t else self.end)
                if t is not None and not closing:
                    raise ExprSyntaxError("unbalanced ')'", t[2])
                return factors
            if t[0] == "*":
                if not factors or expect_factor:
                    raise ExprSyntaxError("misplaced '*'", t[2])
                self.take()
                expect_factor = True
                continue
            factors += self.factor()
            expect_factor = False

    def factor(self) -> list:
        kind, val, pos = self.take()
        if kind == "name":
            body = [] if val == "id" else [(_atom(val, pos, self.genus), 1)]
        elif kind == "(":
            body = self.expr(closing=True)
            close = self.take()
            if close is None:
                raise ExprSyntaxError("missing ')'", self.end)
        else:
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        t = self.peek()
        if t is not None and t[0] == "pow":
            self.take()
            n = int(t[1])
            if n == 0:
                return []
            if n < 0:
                body = [(g, -e) for g, e in reversed(body)]
            if kind == "name":
                return [(g, e * abs(n)) for g, e in body]
            return body * abs(n)
        return body


def parse_expr(text: str, genus: int) -> MappingClassExpr:
    """Parse ``text`` into a validated expression for the given genus."""
    p = _Parser(text, genus)
    factors = p.expr(closing=False)
    return MappingClassExpr(tuple(factors))


def format_expr(expr: MappingClassExpr) -> str:
    return str(expr)
