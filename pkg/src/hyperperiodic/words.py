"""Freely reduced words and partial rewriting tables.

Symbols are identifiers such as ``e1`` or ``b12``. Internally a letter is a
nonzero int: ``+i`` for the ``i``-th interned symbol and ``-i`` for its
inverse. Text form is whitespace separated, ``e2 e1^-1``; ``1`` or the empty
string is the identity.
"""
from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, Mapping, Sequence, Union

from . import kernels
from .errors import MissingRule

_SYMBOL_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")

# append-only; reads of existing entries need no lock
_names: list[str] = [""]
_ids: dict[str, int] = {}
_lock = threading.Lock()


def symbol_id(name: str) -> int:
    try:
        return _ids[name]
    except KeyError:
        pass
    if not _SYMBOL_RE.match(name):
        raise ValueError(f"invalid generator symbol {name!r}")
    with _lock:
        if name not in _ids:
            _ids[name] = len(_names)
            _names.append(name)
        return _ids[name]


def symbol_name(letter: int) -> str:
    return _names[abs(letter)]


class Word:
    """An element of a free group, always stored freely reduced."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", kernels.reduce_letters(tuple(letters)))

    def __setattr__(self, key, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def symbol(cls, name: str, exponent: int = 1) -> "Word":
        x = symbol_id(name)
        return cls([x if exponent > 0 else -x] * abs(exponent))

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        letters = []
        for token in text.split():
            match = _TOKEN_RE.match(token)
            if not match:
                raise ValueError(f"cannot parse word token {token!r}")
            name, exp = match.group(1), int(match.group(2) or 1)
            x = symbol_id(name)
            letters.extend([x if exp > 0 else -x] * abs(exp))
        return cls(letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(-x for x in reversed(self.letters))

    __invert__ = inverse

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def symbols(self) -> set[str]:
        return {symbol_name(x) for x in self.letters}

    def signed(self) -> list[tuple[str, int]]:
        return [(symbol_name(x), 1 if x > 0 else -1) for x in self.letters]

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(symbol_name(x) + ("" if x > 0 else "^-1") for x in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


WordLike = Union[Word, str, Sequence[tuple[str, int]]]


def as_word(w: WordLike) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    letters = []
    for name, sign in w:
        x = symbol_id(name)
        letters.extend([x if sign > 0 else -x] * abs(sign))
    return Word(letters)


def reduce(w: WordLike) -> Word:
    """Freely reduced form of a word given as text, signed pairs or a Word."""
    return as_word(w)


@dataclass(frozen=True)
class PartialEndomorphism:
    """A free-group endomorphism known only on some generators.

    Applying it to a word containing a symbol outside ``table`` raises
    :class:`MissingRule`; there is no silent identity default.
    """

    name: str
    table: Mapping[str, Word] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "table", {k: as_word(v) for k, v in dict(self.table).items()})
        for key in self.table:
            symbol_id(key)

    def __call__(self, w: WordLike) -> Word:
        return apply(self, w)

    def covers(self, symbols: Iterable[str]) -> bool:
        return all(s in self.table for s in symbols)

    def extended(self, entries: Mapping[str, WordLike]) -> "PartialEndomorphism":
        """Add entries; an entry that contradicts an existing one is an error."""
        table = dict(self.table)
        for key, value in entries.items():
            value = as_word(value)
            if key in table and table[key] != value:
                raise ValueError(f"{self.name}({key}) is already {table[key]}, cannot redefine as {value}")
            table[key] = value
        return PartialEndomorphism(self.name, table)

    def to_dict(self) -> dict[str, str]:
        return {k: str(v) for k, v in sorted(self.table.items())}


def apply(e: PartialEndomorphism, w: WordLike) -> Word:
    w = as_word(w)
    letters: list[int] = []
    for x in w.letters:
        image = e.table.get(symbol_name(x))
        if image is None:
            raise MissingRule(symbol_name(x), e.name)
        letters.extend(image.letters if x > 0 else (-y for y in reversed(image.letters)))
    return Word(letters)


def apply_sequence(factors: Sequence[PartialEndomorphism], w: WordLike) -> Word:
    """Apply a product of endomorphisms, rightmost factor first."""
    w = as_word(w)
    for position in range(len(factors) - 1, -1, -1):
        try:
            w = apply(factors[position], w)
        except MissingRule as exc:
            raise exc.at(position) from None
    return w


def substitute(w: WordLike, symbol: str, replacement: WordLike) -> Word:
    """Replace every occurrence of ``symbol`` (and its inverse) and reduce."""
    w, replacement = as_word(w), as_word(replacement)
    target = symbol_id(symbol)
    letters: list[int] = []
    for x in w.letters:
        if x == target:
            letters.extend(replacement.letters)
        elif x == -target:
            letters.extend(-y for y in reversed(replacement.letters))
        else:
            letters.append(x)
    return Word(letters)


def load_rule_tables(source: Union[str, PathLike, Mapping]) -> dict[str, dict[str, Word]]:
    """Read ``{name: {generator: "word"}}`` from a JSON file path or a mapping."""
    if isinstance(source, Mapping):
        data = source
    else:
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    if not isinstance(data, Mapping):
        raise ValueError("rule table file must hold a JSON object")
    out = {}
    for name, entries in data.items():
        if not isinstance(entries, Mapping):
            raise ValueError(f"rules for {name!r} must be an object")
        out[str(name)] = {}
        for gen, text in entries.items():
            symbol_id(gen)
            out[str(name)][gen] = Word.parse(str(text))
    return out
