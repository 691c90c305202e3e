"""
Text form of polynomials.

Grammar (both kinds)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' uint)?
    atom   := NUMBER | VAR | '(' expr ')'

``NUMBER`` is ``digits`` or ``digits/digits``.  Juxtaposition and ``*`` are
the same (noncommutative) product, read left to right.  For noncommutative
input every letter is its own variable, so ``zxz`` is ``z*x*z``.  For
commutative input the variables are ``t0, t1, ...`` or ``zb1, zb2`` (``z1``,
``z2`` are accepted as aliases).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional

from .cpoly import T, ZBAR, CPoly
from .errors import ParseError
from .ncpoly import NCPoly, word_key

NC_LETTERS = {"x": "x", "y": "y", "z": "z"}
# polynomials h(t, z); t is stored as x
H_LETTERS = {"t": "x", "z": "z"}


class Token(NamedTuple):
    kind: str  # NUM, VAR, OP, END
    text: str
    pos: int


_NUM = re.compile(r"\d+(?:/\d*)?")
_CVAR = re.compile(r"t\d+|zb[12]|z[12]")


def _tokenize(text: str, letters: Optional[Dict[str, str]]) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append(Token("OP", ch, i))
            i += 1
            continue
        m = _NUM.match(text, i)
        if m:
            if m.group().endswith("/"):
                raise ParseError("missing denominator", text, m.end())
            if re.search(r"/0+$", m.group()):
                raise ParseError("zero denominator", text, i)
            tokens.append(Token("NUM", m.group(), i))
            i = m.end()
            continue
        if letters is not None:
            if ch in letters:
                tokens.append(Token("VAR", ch, i))
                i += 1
                continue
        else:
            m = _CVAR.match(text, i)
            if m:
                tokens.append(Token("VAR", m.group(), i))
                i = m.end()
                continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, tokens, make_var: Callable, make_const: Callable):
        self.text = text
        self.tokens = tokens
        self.i = 0
        self.make_var = make_var
        self.make_const = make_const

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok.pos)

    def parse(self):
        if self.peek().kind == "END":
            self.fail("empty expression")
        value = self.expr()
        if self.peek().kind != "END":
            self.fail(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok.kind == "OP" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def _starts_atom(self, tok: Token) -> bool:
        return tok.kind in ("NUM", "VAR") or (tok.kind == "OP" and tok.text == "(")

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.take()
                if not self._starts_atom(self.peek()):
                    self.fail("expected a factor after '*'")
                value = value * self.factor()
            elif self._starts_atom(tok):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.take()
            exp = self.peek()
            if exp.kind != "NUM" or "/" in exp.text:
                self.fail("expected a non-negative integer exponent")
            self.take()
            value = value ** int(exp.text)
        return value

    def atom(self):
        tok = self.peek()
        if tok.kind == "NUM":
            self.take()
            return self.make_const(Fraction(tok.text))
        if tok.kind == "VAR":
            self.take()
            try:
                return self.make_var(tok.text)
            except ParseError as exc:
                raise ParseError(str(exc).rsplit(" at position", 1)[0], self.text, tok.pos) from None
        if tok.kind == "OP" and tok.text == "(":
            self.take()
            if self.peek().kind == "END" or (self.peek().kind == "OP" and self.peek().text == ")"):
                self.fail("empty parentheses")
            value = self.expr()
            if not (self.peek().kind == "OP" and self.peek().text == ")"):
                self.fail("expected ')'")
            self.take()
            return value
        if tok.kind == "END":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok.text!r}")


def parse_nc(text: str, letters: Dict[str, str] = NC_LETTERS) -> NCPoly:
    """Parse a noncommutative polynomial in x, y, z."""
    tokens = _tokenize(text, letters)
    return _Parser(text, tokens, lambda v: NCPoly.var(letters[v]), NCPoly.const).parse()


def parse_h(text: str) -> NCPoly:
    """Parse h(t, z); the letter t is stored as x."""
    return parse_nc(text, H_LETTERS)


def parse_c(text: str, family: str = T) -> CPoly:
    """Parse a commutative polynomial in t0, t1, ... or zb1, zb2."""
    tokens = _tokenize(text, None)

    def make_var(name):
        if name.startswith("t"):
            if family != T:
                raise ParseError(f"t-variable {name} in a z1,z2 polynomial", text, 0)
            return CPoly.var(int(name[1:]), T)
        if family != ZBAR:
            raise ParseError(f"{name} in a t-polynomial", text, 0)
        return CPoly.var(int(name[-1]), ZBAR)

    return _Parser(text, tokens, make_var, lambda c: CPoly.const(c, family)).parse()


# -- printing ----------------------------------------------------------------

def _coeff_prefix(c: Fraction, has_monomial: bool) -> str:
    a = abs(c)
    if not has_monomial:
        return str(a)
    if a == 1:
        return ""
    return f"{a}*"


def _join(parts) -> str:
    if not parts:
        return "0"
    out = []
    for i, (negative, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _word_text(word: str, names: Dict[str, str]) -> str:
    chunks = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = names.get(word[i], word[i])
        chunks.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(chunks)


def print_nc(p: NCPoly, names: Dict[str, str] | None = None) -> str:
    """Canonical text: monomials in length-lex order, explicit ``*``."""
    names = names or {}
    parts = []
    for w, c in sorted(p.terms.items(), key=lambda wc: word_key(wc[0])):
        parts.append((c < 0, _coeff_prefix(c, bool(w)) + _word_text(w, names)))
    return _join(parts)


def print_h(p: NCPoly) -> str:
    return print_nc(p, {"x": "t"})


def print_c(p: CPoly) -> str:
    prefix = "t" if p.family == T else "zb"
    parts = []
    for e, c in p.items():
        vars_ = []
        for i, v in enumerate(e):
            if v:
                vars_.append(f"{prefix}{i}" if v == 1 else f"{prefix}{i}^{v}")
        parts.append((c < 0, _coeff_prefix(c, bool(vars_)) + "*".join(vars_)))
    return _join(parts)
