"""Dehn-twist products versus polygon rotations, acting on pi_1.

Generator names: ``b1 .. b{2g+1}`` for the F1 surface, ``c1 .. c{2g}`` and
``d1 .. d{2g}`` (gamma and delta loops) for F2, ``e1 .. e{2g+2}`` for F3.
Twists are ``A1 ..``, ``B1 ..``, ``D1 ..``. Only the entries the rotation
checks need are built in; everything else has to come from an extension table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import MissingRule
from .words import PartialEndomorphism, Word, WordLike, apply, apply_sequence, as_word, substitute

PASS = "pass"
FAIL = "fail"
NEEDS_RULES = "needs-extended-rules"


def _w(*letters: tuple[str, int]) -> Word:
    return as_word(list(letters))


@dataclass(frozen=True)
class PresentationFamily:
    family: str
    genus: int
    alphabet: tuple[str, ...]
    generators: tuple[str, ...]
    relations: Mapping[str, Word]
    twists: Mapping[str, PartialEndomorphism]
    product: tuple[str, ...]
    rotation: PartialEndomorphism
    surface_relator: Word | None = None

    def eliminate(self, w: WordLike) -> Word:
        w = as_word(w)
        for symbol, replacement in self.relations.items():
            w = substitute(w, symbol, replacement)
        return w

    def factors(self) -> list[PartialEndomorphism]:
        return [self.twists[name] for name in self.product]

    def with_extensions(self, extensions: Mapping[str, Mapping[str, WordLike]]) -> "PresentationFamily":
        """Merge extra twist entries; unknown twists, foreign symbols and conflicts are rejected."""
        twists = dict(self.twists)
        for name, entries in extensions.items():
            if name not in twists:
                raise ValueError(f"no twist named {name!r} in family {self.family}")
            for gen, image in entries.items():
                if gen not in self.alphabet or not as_word(image).symbols() <= set(self.alphabet):
                    raise ValueError(f"extension {name}({gen}) uses symbols outside the {self.family} alphabet")
            twists[name] = twists[name].extended(entries)
        return PresentationFamily(
            self.family, self.genus, self.alphabet, self.generators, self.relations,
            twists, self.product, self.rotation, self.surface_relator,
        )


def _tables_f1(g: int) -> PresentationFamily:
    top = 2 * g + 1
    b = [f"b{i}" for i in range(1, top + 1)]
    twists = {}
    for j in range(1, top + 1):
        table = {}
        for i in range(1, top + 1):
            if j == i + 1:
                table[f"b{i}"] = _w((f"b{i + 1}", 1))
            elif j <= i - 1 or j >= i + 2:
                table[f"b{i}"] = _w((f"b{i}", 1))
        twists[f"A{j}"] = PartialEndomorphism(f"A{j}", table)
    # b_{2g+1} * prod_{i=0}^{g-1} b_{2g-2i}^-1 b_{2g-2i-1} = 1
    prod = []
    for i in range(g):
        prod += [(f"b{2 * g - 2 * i}", -1), (f"b{2 * g - 2 * i - 1}", 1)]
    relations = {f"b{top}": as_word(prod).inverse()}
    rotation = PartialEndomorphism("f1", {f"b{i}": _w((f"b{i + 1}", 1)) for i in range(1, 2 * g + 1)})
    return PresentationFamily(
        "F1", g, tuple(b), tuple(b[: 2 * g]), relations, twists,
        tuple(f"A{j}" for j in range(1, 2 * g + 1)), rotation,
    )


def _tables_f2(g: int) -> PresentationFamily:
    top = 2 * g
    c = [f"c{i}" for i in range(1, top + 1)]
    d = [f"d{i}" for i in range(1, top + 1)]
    twists = {}
    for j in range(1, top + 1):
        table = {f"d{j}": _w((f"c{j}", 1))}
        for i in range(1, top + 1):
            if i != j:
                table[f"c{i}"] = _w((f"c{i}", 1))
        table[f"c{j}"] = _w((f"d{j + 1}", 1)) if j < top else _w(("d1", -1))
        twists[f"B{j}"] = PartialEndomorphism(f"B{j}", table)
    # d1 = prod_{i=0}^{g-1} c_{2g-2i}^-1 c_{2g-2i-1}
    prod = []
    for i in range(g):
        prod += [(f"c{top - 2 * i}", -1), (f"c{top - 2 * i - 1}", 1)]
    relations = {"d1": as_word(prod)}
    rot = {f"c{i}": _w((f"c{i + 1}", 1)) for i in range(1, top)}
    rot[f"c{top}"] = _w(("c1", -1))
    return PresentationFamily(
        "F2", g, tuple(c + d), tuple(c), relations, twists,
        ("B1",) + tuple(f"B{j}" for j in range(top, 0, -1)), PartialEndomorphism("f2", rot),
    )


def _tables_f3(g: int) -> PresentationFamily:
    top = 2 * g + 2
    e = [f"e{i}" for i in range(1, top + 1)]
    twists = {}
    for j in range(1, 2 * g + 2):
        table = {}
        for i in range(1, top + 1):
            if i == j + 1:
                table[f"e{i}"] = _w((f"e{i}", 1), (f"e{j}", -1))
            elif i == j - 1:
                table[f"e{i}"] = _w((f"e{j}", 1), (f"e{i}", 1))
            else:
                table[f"e{i}"] = _w((f"e{i}", 1))
        twists[f"D{j}"] = PartialEndomorphism(f"D{j}", table)
    # e_{2g+2} e_{2g} ... e_2 = 1 and e_{2g+1} e_{2g-1} ... e_1 = 1
    relations = {
        f"e{top}": _w(*[(f"e{i}", -1) for i in range(2, 2 * g + 1, 2)]),
        f"e{top - 1}": _w(*[(f"e{i}", -1) for i in range(1, 2 * g, 2)]),
    }
    relator = _w(*[(f"e{i}", 1) for i in range(top, 0, -1)])
    rotation = PartialEndomorphism("f3", {f"e{i}": _w((f"e{i + 1}", 1)) for i in range(1, 2 * g + 1)})
    fam = PresentationFamily(
        "F3", g, tuple(e), tuple(e[: 2 * g]), relations, twists,
        tuple(f"D{j}" for j in range(1, 2 * g + 2)), rotation,
    )
    return PresentationFamily(**{**fam.__dict__, "surface_relator": fam.eliminate(relator)})


def make_tables(family: str, g: int) -> PresentationFamily:
    if g < 2:
        raise ValueError("twist presentations need genus at least 2")
    builders = {"F1": _tables_f1, "F2": _tables_f2, "F3": _tables_f3}
    if family not in builders:
        raise ValueError(f"unknown family {family!r}")
    return builders[family](g)


@dataclass(frozen=True)
class ReportEntry:
    generator: str
    expected: Word
    computed: Word | None
    verdict: str
    missing: MissingRule | None = None

    def to_dict(self) -> dict:
        out = {
            "generator": self.generator,
            "expected": str(self.expected),
            "computed": None if self.computed is None else str(self.computed),
            "verdict": self.verdict,
        }
        if self.missing is not None:
            out["missing_rule"] = {
                "twist": self.missing.endomorphism,
                "symbol": self.missing.symbol,
                "factor": self.missing.position,
            }
        return out


@dataclass(frozen=True)
class VerificationReport:
    family: str
    genus: int
    product: tuple[str, ...]
    entries: tuple[ReportEntry, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(e.verdict != FAIL for e in self.entries)

    @property
    def needs_extended_rules(self) -> bool:
        return any(e.verdict == NEEDS_RULES for e in self.entries)

    def verdicts(self) -> dict[str, str]:
        return {e.generator: e.verdict for e in self.entries}

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "genus": self.genus,
            "product": " ".join(self.product),
            "ok": self.ok,
            "needs_extended_rules": self.needs_extended_rules,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_text(self) -> str:
        rows = [("generator", "expected", "computed", "verdict")]
        for e in self.entries:
            computed = str(e.computed) if e.computed is not None else f"missing {e.missing.endomorphism}({e.missing.symbol})"
            rows.append((e.generator, str(e.expected), computed, e.verdict))
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = [f"{self.family} genus {self.genus}: {' '.join(self.product)}"]
        for r in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        return "\n".join(lines)


def verify_family(
    family: str, g: int, extensions: Mapping[str, Mapping[str, WordLike]] | None = None
) -> VerificationReport:
    """Compare the twist product with the rotation on each checked generator.

    Both sides are reduced after eliminating the relation symbols; a verdict is
    ``pass`` only on literal equality of those reduced words.
    """
    pf = make_tables(family, g)
    if extensions:
        pf = pf.with_extensions(extensions)
    factors = pf.factors()
    entries = []
    for gen in pf.generators:
        expected = pf.eliminate(apply(pf.rotation, gen))
        try:
            computed = pf.eliminate(apply_sequence(factors, gen))
        except MissingRule as exc:
            entries.append(ReportEntry(gen, expected, None, NEEDS_RULES, exc))
            continue
        entries.append(ReportEntry(gen, expected, computed, PASS if computed == expected else FAIL))
    return VerificationReport(pf.family, g, pf.product, tuple(entries))


def rotation_power(pf: PresentationFamily, k: int) -> dict[str, Word]:
    """Images of the checked generators under ``k`` applications of the rotation."""
    images = {gen: Word.symbol(gen) for gen in pf.generators}
    for _ in range(k):
        images = {gen: pf.eliminate(apply(pf.rotation, w)) for gen, w in images.items()}
    return images


def literal_rotation_order(pf: PresentationFamily, bound: int) -> int | None:
    """Smallest ``k <= bound`` with the rotation literally the identity, if any."""
    images = {gen: Word.symbol(gen) for gen in pf.generators}
    for k in range(1, bound + 1):
        images = {gen: pf.eliminate(apply(pf.rotation, w)) for gen, w in images.items()}
        if all(w == Word.symbol(gen) for gen, w in images.items()):
            return k
    return None


def inner_conjugator(images: Mapping[str, Word]) -> Word | None:
    """``c`` with ``images[x] == c x c^-1`` for every generator ``x``, if it exists."""
    gens = list(images)
    first = Word.symbol(gens[0])
    w = images[gens[0]]
    if len(w) % 2 == 0:
        return None
    prefix = Word(w.letters[: len(w) // 2])
    if prefix * first * prefix.inverse() != w:
        return None
    for k in range(-len(w) - 2, len(w) + 3):
        c = prefix * Word([first.letters[0] if k > 0 else -first.letters[0]] * abs(k))
        if all(c * Word.symbol(x) * c.inverse() == images[x] for x in gens):
            return c
    return None


def abelianized_matrix(pf: PresentationFamily) -> list[list[int]]:
    """Integer matrix of the rotation on the abelianization, columns = images."""
    gens = list(pf.generators)
    cols = []
    for gen in gens:
        image = pf.eliminate(apply(pf.rotation, gen))
        col = [0] * len(gens)
        for name, sign in image.signed():
            col[gens.index(name)] += sign
        cols.append(col)
    return [[cols[j][i] for j in range(len(gens))] for i in range(len(gens))]


def matrix_order(matrix: list[list[int]], bound: int) -> int | None:
    size = len(matrix)
    ident = [[int(i == j) for j in range(size)] for i in range(size)]
    power = ident
    for k in range(1, bound + 1):
        power = [[sum(power[i][t] * matrix[t][j] for t in range(size)) for j in range(size)] for i in range(size)]
        if power == ident:
            return k
    return None
