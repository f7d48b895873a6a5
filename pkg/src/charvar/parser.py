"""Parser for the presentation input language.

Line-oriented, ``#`` starts a comment.  One ``gens`` statement followed by
zero or more ``rel`` statements, each terminated by ``;``::

    gens a1,b1,a2,b2;
    rel [a1,b1][a2,b2];   # genus-2 surface relator

Word syntax: generator names multiply by juxtaposition (whitespace between
names is optional around brackets but required between two names), the
swapcase of a name is its inverse (A = a^-1), explicit powers are written
``a^3`` or ``a^-1``, and ``[x,y]`` is the commutator x y x^-1 y^-1.
Powers attach to names and bracketed groups alike.
"""

from __future__ import annotations

import re

from .errors import EmptyGeneratorList, PresentationSyntaxError, UnknownGenerator
from .presentations import Presentation
from .words import Word, commutator

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"-?[0-9]+")


class _Tokens:
    """Token stream over one logical line, tracking columns for errors."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def error(self, message: str) -> PresentationSyntaxError:
        return PresentationSyntaxError(message, self.line_no, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> None:
        if self.peek() != char:
            raise self.error(f"expected {char!r}")
        self.pos += 1

    def try_take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def take_name(self) -> str:
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error("expected a name")
        self.pos = m.end()
        return m.group()

    def take_int(self) -> int:
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        return self.peek() == ""


def parse_presentation(text: str) -> Presentation:
    """Parse presentation-language input; relators come out freely reduced."""
    generators: list[str] = []
    lookup: dict[str, tuple[int, int]] = {}
    relators: list[Word] = []
    seen_gens = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = _Tokens(line, line_no)
        while not toks.at_end():
            keyword = toks.take_name()
            if keyword == "gens":
                if seen_gens:
                    raise toks.error("duplicate gens statement")
                seen_gens = True
                generators.append(toks.take_name())
                while toks.try_take(","):
                    generators.append(toks.take_name())
                toks.take(";")
                _check_generator_names(generators, toks)
                for i, name in enumerate(generators):
                    lookup[name] = (i, 1)
                    lookup[name.swapcase()] = (i, -1)
            elif keyword == "rel":
                if not seen_gens:
                    raise toks.error("rel before gens")
                relators.append(_parse_word(toks, lookup, stop=";"))
                toks.take(";")
            else:
                raise toks.error(f"unknown statement {keyword!r}")

    if not seen_gens:
        raise EmptyGeneratorList("input declares no generators")
    return Presentation(tuple(generators), tuple(relators))


def _check_generator_names(names: list[str], toks: _Tokens) -> None:
    if not names:
        raise EmptyGeneratorList("empty generator list")
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise toks.error(f"duplicate generator {name!r}")
        if name.swapcase() in seen or name.swapcase() == name:
            raise toks.error(f"generator {name!r} collides with an inverse name")
        seen.add(name)


def _parse_word(toks: _Tokens, lookup, stop: str) -> Word:
    word = Word.identity()
    while True:
        ch = toks.peek()
        if ch == "" or ch == stop or ch == ",":
            return word
        if ch == "[":
            toks.take("[")
            left = _parse_word(toks, lookup, stop="]")
            toks.take(",")
            right = _parse_word(toks, lookup, stop="]")
            toks.take("]")
            atom = commutator(left, right)
        else:
            start = toks.pos
            name = toks.take_name()
            if name not in lookup:
                toks.pos = start
                raise UnknownGenerator(
                    f"line {toks.line_no}, column {start + 1}: "
                    f"unknown generator {name!r}"
                )
            index, sign = lookup[name]
            atom = Word.generator(index, sign)
        if toks.try_take("^"):
            atom = atom ** toks.take_int()
        word = word * atom
