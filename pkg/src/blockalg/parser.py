"""Expression language for algebra elements and module words.

Grammar (whitespace-insensitive, rationals as `p/q` or integers):

    expr := ('+' | '-')? term (('+' | '-') term)*
    term := rational? atom
    atom := 'L[' int ',' int ']' | 'C' | '[' expr ',' expr ']' | '(' expr ')'
    word := atom ('.' atom)* '.v'

A word denotes a sequence of algebra elements applied to the highest-weight
vector, leftmost factor acting last.  Errors carry 1-based line and column
positions.  The canonical renderings produced by LieElement.render re-parse
to equal elements; a bare `0` is accepted as the zero element since that is
the canonical rendering of zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieElement


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


# -- tokens -------------------------------------------------------------------

_PUNCT = set("[](),+-/.")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int', 'name', one of _PUNCT, or 'eof'
    text: str
    line: int
    column: int


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    line = 1
    col = 1
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch in " \t\r":
            col += 1
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            startcol = col
            while pos < n and src[pos].isdigit():
                pos += 1
                col += 1
            tokens.append(_Token("int", src[start:pos], line, startcol))
            continue
        if ch.isalpha():
            start = pos
            startcol = col
            while pos < n and src[pos].isalpha():
                pos += 1
                col += 1
            tokens.append(_Token("name", src[start:pos], line, startcol))
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, line, col))
            pos += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class GenNode:
    alpha: int
    index: int


@dataclass(frozen=True)
class CentralNode:
    pass


@dataclass(frozen=True)
class TermNode:
    coefficient: Fraction
    atom: object


@dataclass(frozen=True)
class SumNode:
    terms: tuple


@dataclass(frozen=True)
class BracketNode:
    left: object
    right: object


@dataclass(frozen=True)
class WordNode:
    factors: tuple


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    def expect(self, kind: str, description: str) -> _Token:
        if self.peek().kind != kind:
            raise self.fail(f"expected {description}")
        return self.advance()

    def expect_eof(self) -> None:
        if self.peek().kind != "eof":
            raise self.fail("unexpected trailing input")

    # grammar rules

    def expr_or_word(self):
        tok = self.peek()
        if tok.kind == "int" and tok.text == "0" and self.tokens[self.pos + 1].kind == "eof":
            self.advance()
            return SumNode(())
        if self._starts_atom():
            atom = self.atom()
            if self.peek().kind == ".":
                return self.word_tail(atom)
            return self.expr(first=TermNode(Fraction(1), atom))
        return self.expr()

    def _starts_atom(self) -> bool:
        tok = self.peek()
        return tok.kind in ("[", "(") or (tok.kind == "name" and tok.text in ("L", "C"))

    def word_tail(self, first) -> WordNode:
        factors = [first]
        while True:
            self.expect(".", "'.'")
            tok = self.peek()
            if tok.kind == "name" and tok.text == "v":
                self.advance()
                return WordNode(tuple(factors))
            factors.append(self.atom())

    def expr(self, first=None) -> SumNode:
        terms = []
        if first is not None:
            terms.append(first)
        else:
            sign = 1
            if self.peek().kind in ("+", "-"):
                sign = -1 if self.advance().kind == "-" else 1
            terms.append(self.term(sign))
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
            terms.append(self.term(sign))
        return SumNode(tuple(terms))

    def term(self, sign: int) -> TermNode:
        coeff = Fraction(sign)
        if self.peek().kind == "int":
            coeff *= self.rational()
        return TermNode(coeff, self.atom())

    def rational(self) -> Fraction:
        numer = int(self.expect("int", "an integer").text)
        if self.peek().kind == "/":
            self.advance()
            denom_tok = self.expect("int", "a denominator")
            denom = int(denom_tok.text)
            if denom == 0:
                raise ParseError("zero denominator", denom_tok.line, denom_tok.column)
            return Fraction(numer, denom)
        return Fraction(numer)

    def integer(self) -> int:
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        return sign * int(self.expect("int", "an integer").text)

    def atom(self):
        tok = self.peek()
        if tok.kind == "name" and tok.text == "L":
            self.advance()
            self.expect("[", "'['")
            alpha = self.integer()
            self.expect(",", "','")
            index = self.integer()
            self.expect("]", "']'")
            return GenNode(alpha, index)
        if tok.kind == "name" and tok.text == "C":
            self.advance()
            return CentralNode()
        if tok.kind == "[":
            self.advance()
            left = self.expr()
            self.expect(",", "','")
            right = self.expr()
            self.expect("]", "']'")
            return BracketNode(left, right)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if tok.kind == "name":
            raise self.fail(f"unexpected name {tok.text!r}")
        raise self.fail("expected an element")


# -- public API ---------------------------------------------------------------


def parse_expr(src: str):
    """Parse to an AST node; raises ParseError with 1-based position."""
    parser = _Parser(_tokenize(src))
    node = parser.expr_or_word()
    parser.expect_eof()
    return node


def evaluate_element(node) -> LieElement:
    if isinstance(node, GenNode):
        return LieElement.gen(node.alpha, node.index)
    if isinstance(node, CentralNode):
        return LieElement.central()
    if isinstance(node, TermNode):
        return evaluate_element(node.atom).scale(node.coefficient)
    if isinstance(node, SumNode):
        out = LieElement.zero()
        for term in node.terms:
            out = out + evaluate_element(term)
        return out
    if isinstance(node, BracketNode):
        return evaluate_element(node.left).bracket(evaluate_element(node.right))
    if isinstance(node, WordNode):
        raise ValueError("a word is not a single algebra element")
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_word(node: WordNode) -> list[LieElement]:
    if not isinstance(node, WordNode):
        raise TypeError("not a word node")
    return [evaluate_element(factor) for factor in node.factors]


def parse_element(src: str) -> LieElement:
    node = parse_expr(src)
    if isinstance(node, WordNode):
        tok = _tokenize(src)[0]
        raise ParseError("expected an element, found a word", tok.line, tok.column)
    return evaluate_element(node)


def parse_action(src: str):
    """Parse to ('word', factors) or ('element', element)."""
    node = parse_expr(src)
    if isinstance(node, WordNode):
        return ("word", evaluate_word(node))
    return ("element", evaluate_element(node))
