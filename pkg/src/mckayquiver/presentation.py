"""Two-generator presentations: words, parsing and the Gamma_m family.

A word is a tuple over the letters ``a``, ``b``, ``A``, ``B`` where the
capitals denote inverses. Grammar accepted by :func:`parse_presentation`::

    pres   := stmt (';' stmt)*
    stmt   := word '=' word | word '=' '1'
    word   := factor+
    factor := atom ('^' int)?
    atom   := 'a' | 'b' | 'A' | 'B' | '(' word ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple

from .errors import PresentationSyntaxError

Word = Tuple[str, ...]

LETTERS = ("a", "b", "A", "B")
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


def invert(word: Word) -> Word:
    return tuple(_INVERSE[x] for x in reversed(word))


def free_reduce(word: Word) -> Word:
    out: list[str] = []
    for x in word:
        if out and out[-1] == _INVERSE[x]:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_to_str(word: Word) -> str:
    """Compact rendering with run-length exponents, e.g. ``aab`` -> ``a2b``.

    The identity renders as ``1``.
    """
    if not word:
        return "1"
    return "".join(x if n == 1 else f"{x}{n}" for x, n in _runs(word))


def word_to_text(word: Word) -> str:
    """Render ``word`` in the input grammar, e.g. ``aab`` -> ``a^2 b``."""
    if not word:
        return "1"
    return " ".join(x if n == 1 else f"{x}^{n}" for x, n in _runs(word))


def _runs(word: Word):
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        yield word[i], j - i
        i = j


@dataclass(frozen=True)
class Presentation:
    relators: Tuple[Word, ...]
    source_text: str = ""

    def __str__(self):
        return "; ".join(word_to_text(r) + " = 1" for r in self.relators)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise PresentationSyntaxError(message, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        if self.peek() == "-":
            self.error("exponent must be a positive integer")
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a positive integer")
        value = int(self.text[start:self.pos])
        if value <= 0:
            self.error("exponent must be a positive integer", start)
        return value

    def atom(self) -> Word:
        ch = self.peek()
        if ch in LETTERS:
            self.pos += 1
            return (ch,)
        if ch == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if ch.isalpha():
            self.error(f"unknown generator {ch!r}")
        self.error(f"unexpected {ch or 'end of input'!r}")

    def factor(self) -> Word:
        w = self.atom()
        if self.peek() == "^":
            self.pos += 1
            w = w * self.integer()
        return w

    def word(self) -> Word:
        w = self.factor()
        while self.peek() in LETTERS or self.peek() == "(":
            w = w + self.factor()
        return w

    def side(self) -> Word:
        if self.peek() == "1":
            self.pos += 1
            if self.peek().isdigit():
                self.error("unexpected integer")
            return ()
        return self.word()

    def statement(self) -> Word:
        lhs = self.side()
        self.expect("=")
        rhs = self.side()
        return lhs + invert(rhs)

    def presentation(self) -> list[Word]:
        if not self.peek():
            self.error("empty presentation")
        relators = [self.statement()]
        while self.peek() == ";":
            self.pos += 1
            if not self.peek():
                break  # trailing separator
            relators.append(self.statement())
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return relators


def parse_word(text: str) -> Word:
    """Parse a single word; ``1`` is the empty word."""
    p = _Parser(text)
    if not p.peek():
        p.error("empty word")
    w = p.side()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    return w


def parse_presentation(text: str) -> Presentation:
    """Parse ``text`` into relators; ``u = w`` becomes the relator ``u w^-1``.

    ``#`` starts a comment running to the end of the line.
    """
    # blank out comments so reported positions still index into ``text``
    body = re.sub(r"#[^\n]*", lambda mo: " " * len(mo.group()), text)
    return Presentation(tuple(_Parser(body).presentation()), text)


def gamma_m_presentation(m: int) -> Presentation:
    """The group ``<a,b | a^2=b^2, a^4m=b^4m=(ab)^m=(ba)^m=1>``."""
    if m < 2:
        raise ValueError(f"Gamma_m needs m >= 2, got {m}")
    text = f"a^2 = b^2; a^{4 * m} = 1; b^{4 * m} = 1; (a b)^{m} = 1; (b a)^{m} = 1"
    return parse_presentation(text)
