"""Rack presentations: generators, primary relations, axiom schemata, and
the line-oriented text format.

The file format is UTF-8, one directive per line, ``#`` starts a comment:

    gens a b            exactly one, first significant line
    quandle             optional flag
    nquandle 2          optional flag, n >= 2
    rel a^[b a] = b     one primary relation; letters are names or ~name

Rendering emits the same grammar deterministically, so every value
round-trips through parse(render(p)) == p.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .words import Word, concat, invert_word, reduce_word

__all__ = [
    "PresentationError",
    "PrimaryRelation",
    "Presentation",
    "CrossingList",
    "derive_secondary",
    "inject_axioms",
    "build_link_presentation",
    "parse_presentation",
    "render_presentation",
    "parse_element",
    "format_word",
    "format_element",
]


class PresentationError(ValueError):
    """Raised for malformed presentation text or inconsistent data."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class PrimaryRelation(NamedTuple):
    """A relation base^exponent = target between generators."""

    base: int
    exponent: Word
    target: int


@dataclass(frozen=True)
class Presentation:
    """A finite rack presentation, optionally flagged as an (n-)quandle."""

    generator_names: tuple[str, ...]
    relations: tuple[PrimaryRelation, ...] = ()
    quandle: bool = False
    nquandle: int | None = None

    def __post_init__(self):
        names = self.generator_names
        if not names:
            raise PresentationError("a presentation needs at least one generator")
        for name in names:
            if not name or not name.isalnum():
                raise PresentationError(f"invalid generator name {name!r}")
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be distinct")
        if self.nquandle is not None and self.nquandle < 2:
            raise PresentationError(f"nquandle must be at least 2, got {self.nquandle}")
        g = len(names)
        for rel in self.relations:
            if not 1 <= rel.base <= g or not 1 <= rel.target <= g:
                raise PresentationError(f"relation {rel} references a generator out of range")
            if any(not 1 <= abs(y) <= g for y in rel.exponent):
                raise PresentationError(f"relation {rel} has an exponent letter out of range")
            if reduce_word(rel.exponent) != rel.exponent:
                raise PresentationError(f"relation {rel} has a non-reduced exponent")

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)


@dataclass(frozen=True)
class CrossingList:
    """Arc-labelled crossing data for a link diagram.

    Each crossing is a triple (over, under_in, under_out) of 1-based arc
    indices and contributes the relation under_in^over = under_out.
    """

    arcs: int
    crossings: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.arcs < 1:
            raise PresentationError("a diagram needs at least one arc")
        for c in self.crossings:
            if any(not 1 <= arc <= self.arcs for arc in c):
                raise PresentationError(f"crossing {c} references an arc out of range 1..{self.arcs}")


def derive_secondary(rel: PrimaryRelation) -> Word | None:
    """Secondary relation word for a primary relation.

    base^u = target forces x^(u-bar base u target-bar) = x for every x;
    the reduced form of that exponent is returned, or None when it reduces
    to nothing (as for base^base = base).
    """
    word = concat(invert_word(rel.exponent), (rel.base,), rel.exponent, (-rel.target,))
    return word or None


def inject_axioms(p: Presentation) -> list[PrimaryRelation]:
    """Presentation relations followed by the flagged axiom relations.

    The quandle flag appends a^a = a for each generator; nquandle n
    additionally appends a^(b^n) = a for every ordered pair of distinct
    generators, base-major.  nquandle implies the quandle relations.
    """
    if p.nquandle is not None and p.nquandle < 2:
        raise PresentationError(f"nquandle must be at least 2, got {p.nquandle}")
    rels = list(p.relations)
    g = p.generator_count
    if p.quandle or p.nquandle is not None:
        for k in range(1, g + 1):
            rels.append(PrimaryRelation(k, (k,), k))
    if p.nquandle is not None:
        n = p.nquandle
        for a in range(1, g + 1):
            for b in range(1, g + 1):
                if a != b:
                    rels.append(PrimaryRelation(a, (b,) * n, a))
    return rels


def build_link_presentation(diagram: CrossingList, n: int) -> Presentation:
    """n-quandle presentation of a link from arc-labelled crossing data.

    One generator per arc (named x1, x2, ...), one relation per crossing,
    with the n-quandle axiom schema left to be injected at enumeration.
    """
    if n < 2:
        raise PresentationError(f"n must be at least 2, got {n}")
    names = tuple(f"x{i}" for i in range(1, diagram.arcs + 1))
    rels = tuple(
        PrimaryRelation(under_in, (over,), under_out)
        for over, under_in, under_out in diagram.crossings
    )
    return Presentation(names, rels, nquandle=n)


# --- text format ------------------------------------------------------------

_SINGLE_CHARS = {"^": "caret", "[": "lbrack", "]": "rbrack", "=": "equals"}


def _tokenize(line: str, line_no: int) -> list[tuple[str, str, int]]:
    """Split a line into (kind, text, column) tokens; columns are 1-based."""
    tokens = []
    i = 0
    while i < len(line):
        c = line[i]
        if c == "#":
            break
        if c.isspace():
            i += 1
            continue
        if c in _SINGLE_CHARS:
            tokens.append((_SINGLE_CHARS[c], c, i + 1))
            i += 1
            continue
        if c == "~":
            start = i
            i += 1
            j = i
            while j < len(line) and line[j].isalnum():
                j += 1
            if j == i:
                raise PresentationError("'~' must be followed by a generator name", line_no, start + 1)
            tokens.append(("inverse", line[i:j], start + 1))
            i = j
            continue
        if c.isalnum():
            j = i
            while j < len(line) and line[j].isalnum():
                j += 1
            tokens.append(("name", line[i:j], i + 1))
            i = j
            continue
        raise PresentationError(f"unexpected character {c!r}", line_no, i + 1)
    return tokens


class _TokenStream:
    def __init__(self, tokens, line_no):
        self.tokens = tokens
        self.line_no = line_no
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str, what: str):
        tok = self.peek()
        if tok is None:
            last_col = self.tokens[-1][2] + len(self.tokens[-1][1]) if self.tokens else 1
            raise PresentationError(f"expected {what}", self.line_no, last_col)
        if tok[0] != kind:
            raise PresentationError(f"expected {what}, found {tok[1]!r}", self.line_no, tok[2])
        self.pos += 1
        return tok

    def expect_end(self):
        tok = self.peek()
        if tok is not None:
            raise PresentationError(f"unexpected trailing {tok[1]!r}", self.line_no, tok[2])


def _parse_letters(stream: _TokenStream, name_index: dict[str, int]) -> Word:
    stream.take("lbrack", "'['")
    letters: list[int] = []
    while True:
        tok = stream.peek()
        if tok is None:
            raise PresentationError("unterminated exponent, expected ']'", stream.line_no,
                                    stream.tokens[-1][2] if stream.tokens else 1)
        kind, text, col = tok
        if kind == "rbrack":
            stream.pos += 1
            return reduce_word(letters)
        if kind in ("name", "inverse"):
            if text not in name_index:
                raise PresentationError(f"unknown generator {text!r}", stream.line_no, col)
            idx = name_index[text]
            letters.append(idx if kind == "name" else -idx)
            stream.pos += 1
            continue
        raise PresentationError(f"malformed exponent near {text!r}", stream.line_no, col)


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text; raises PresentationError with line/column."""
    names: tuple[str, ...] | None = None
    name_index: dict[str, int] = {}
    relations: list[PrimaryRelation] = []
    quandle = False
    nquandle: int | None = None

    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, line_no)
        if not tokens:
            continue
        stream = _TokenStream(tokens, line_no)
        kind, directive, col = tokens[0]
        if kind != "name":
            raise PresentationError(f"expected a directive, found {directive!r}", line_no, col)
        stream.pos = 1

        if names is None and directive != "gens":
            raise PresentationError("the first significant line must be 'gens ...'", line_no, col)

        if directive == "gens":
            if names is not None:
                raise PresentationError("duplicate 'gens' line", line_no, col)
            got = []
            while stream.peek() is not None:
                got.append(stream.take("name", "a generator name")[1])
            if not got:
                raise PresentationError("'gens' needs at least one generator name", line_no, col)
            names = tuple(got)
            if len(set(names)) != len(names):
                raise PresentationError("generator names must be distinct", line_no, col)
            name_index = {name: i + 1 for i, name in enumerate(names)}
        elif directive == "quandle":
            stream.expect_end()
            quandle = True
        elif directive == "nquandle":
            tok = stream.take("name", "an integer")
            if not tok[1].isdigit():
                raise PresentationError(f"expected an integer, found {tok[1]!r}", line_no, tok[2])
            value = int(tok[1])
            if value < 2:
                raise PresentationError(f"nquandle must be at least 2, got {value}", line_no, tok[2])
            stream.expect_end()
            nquandle = value
        elif directive == "rel":
            base_tok = stream.take("name", "a generator name")
            if base_tok[1] not in name_index:
                raise PresentationError(f"unknown generator {base_tok[1]!r}", line_no, base_tok[2])
            stream.take("caret", "'^'")
            exponent = _parse_letters(stream, name_index)
            stream.take("equals", "'='")
            target_tok = stream.take("name", "a generator name")
            if target_tok[1] not in name_index:
                raise PresentationError(f"unknown generator {target_tok[1]!r}", line_no, target_tok[2])
            stream.expect_end()
            relations.append(
                PrimaryRelation(name_index[base_tok[1]], exponent, name_index[target_tok[1]])
            )
        else:
            raise PresentationError(f"unknown directive {directive!r}", line_no, col)

    if names is None:
        raise PresentationError("no 'gens' line found")
    return Presentation(names, tuple(relations), quandle=quandle, nquandle=nquandle)


def format_word(names: tuple[str, ...], word: Word) -> str:
    """Letters separated by spaces, inverses prefixed with '~'."""
    return " ".join(names[y - 1] if y > 0 else "~" + names[-y - 1] for y in word)


def format_element(names: tuple[str, ...], base: int, exponent: Word) -> str:
    """Render base^exponent; a bare name when the exponent is empty."""
    if not exponent:
        return names[base - 1]
    return f"{names[base - 1]}^[{format_word(names, exponent)}]"


def render_presentation(p: Presentation) -> str:
    lines = ["gens " + " ".join(p.generator_names)]
    if p.quandle:
        lines.append("quandle")
    if p.nquandle is not None:
        lines.append(f"nquandle {p.nquandle}")
    for rel in p.relations:
        exponent = format_word(p.generator_names, rel.exponent)
        lines.append(
            f"rel {p.generator_names[rel.base - 1]}^[{exponent}] = {p.generator_names[rel.target - 1]}"
        )
    return "\n".join(lines) + "\n"


def parse_element(text: str, p: Presentation) -> tuple[int, Word]:
    """Parse 'a' or 'a^[b b]' into (generator index, reduced word)."""
    tokens = _tokenize(text, 1)
    if not tokens:
        raise PresentationError("empty element")
    stream = _TokenStream(tokens, 1)
    name_index = {name: i + 1 for i, name in enumerate(p.generator_names)}
    base_tok = stream.take("name", "a generator name")
    if base_tok[1] not in name_index:
        raise PresentationError(f"unknown generator {base_tok[1]!r}", 1, base_tok[2])
    base = name_index[base_tok[1]]
    if stream.peek() is None:
        return base, ()
    stream.take("caret", "'^'")
    word = _parse_letters(stream, name_index)
    stream.expect_end()
    return base, word


def with_flags(p: Presentation, quandle: bool | None = None, nquandle: int | None = None) -> Presentation:
    """Copy of p with axiom flags overridden (used by the CLI)."""
    changes = {}
    if quandle is not None:
        changes["quandle"] = quandle
    if nquandle is not None:
        changes["nquandle"] = nquandle
    return replace(p, **changes) if changes else p
