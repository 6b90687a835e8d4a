"""Small expression language for naming graphs.

Grammar::

    expr   := INT '*' expr | atom
    atom   := FAMILY '(' INT ')'
            | 'union' '(' expr (',' expr)+ ')'
            | 'corona' '(' expr ',' expr ')'
            | '(' expr ')'
            | '@' PATH
    FAMILY := C | K | P | Star | Empty

``Star(n)`` is ``K_{1,n}`` (n+1 vertices, centre 0). ``3*K(2)`` is three
disjoint copies. ``@file`` loads a graph6 or edge-list file.
"""
from __future__ import annotations

import re

from . import graph as gr
from .formats import read_graph_file
from .graph import Graph

MAX_FAMILY_N = 64

_FAMILIES = {
    "C": gr.cycle,
    "K": gr.complete,
    "P": gr.path,
    "Star": gr.star,
    "Empty": gr.empty,
}

_TOKEN = re.compile(r"\s*(?:(@[^\s,()]+)|(\d+)|([A-Za-z_]+)|(.))")


class GraphSpecError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tok = next(t for t in m.groups() if t is not None)
        toks.append(tok)
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise GraphSpecError(f"unexpected end of graph spec {self.text!r}")
        if expected is not None and tok != expected:
            raise GraphSpecError(f"expected {expected!r}, found {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise GraphSpecError(f"expected an integer, found {tok!r}")
        return int(tok)

    def expr(self) -> Graph:
        tok = self.peek()
        if tok is not None and tok.isdigit():
            m = self.integer()
            self.take("*")
            if not 1 <= m <= MAX_FAMILY_N:
                raise GraphSpecError(f"copy count {m} outside [1, {MAX_FAMILY_N}]")
            return gr.copies(m, self.expr())
        return self.atom()

    def atom(self) -> Graph:
        tok = self.take()
        if tok == "(":
            g = self.expr()
            self.take(")")
            return g
        if tok.startswith("@"):
            return read_graph_file(tok[1:])
        if tok == "union":
            self.take("(")
            parts = [self.expr()]
            while self.peek() == ",":
                self.take(",")
                parts.append(self.expr())
            self.take(")")
            if len(parts) < 2:
                raise GraphSpecError("union needs at least two operands")
            g = parts[0]
            for h in parts[1:]:
                g = gr.disjoint_union(g, h)
            return g
        if tok == "corona":
            self.take("(")
            base = self.expr()
            self.take(",")
            attached = self.expr()
            self.take(")")
            return gr.corona(base, attached)
        if tok in _FAMILIES:
            self.take("(")
            n = self.integer()
            self.take(")")
            if n > MAX_FAMILY_N:
                raise GraphSpecError(f"{tok}({n}) exceeds the limit {MAX_FAMILY_N}")
            try:
                return _FAMILIES[tok](n)
            except ValueError as exc:
                raise GraphSpecError(str(exc)) from None
        raise GraphSpecError(f"unknown token {tok!r} in {self.text!r}")


def parse_graph_spec(text: str) -> Graph:
    p = _Parser(text)
    g = p.expr()
    if p.peek() is not None:
        raise GraphSpecError(f"trailing input {p.peek()!r} in {text!r}")
    return g
