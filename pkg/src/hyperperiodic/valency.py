"""Valencies and total valencies of periodic surface maps.

A periodic map ``f`` of order ``n`` on a closed oriented surface of genus ``g``
is determined up to conjugacy by its *total valency*: the genus, the order, the
genus of the quotient, and one fraction ``theta/lam`` per multiple orbit. Here
``lam`` is the isotropy order of the orbit and ``theta`` the inverse mod ``lam``
of the rotation number ``nu`` by which the isotropy generator ``f**(n/lam)``
turns a small disk clockwise (angle ``2*pi*nu/lam``).

Everything here is exact integer / :class:`fractions.Fraction` arithmetic.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ExponentOutOfRange, InvalidRotation, InvalidTotalValency

__all__ = [
    "Valency",
    "TotalValency",
    "ValidationResult",
    "FamilyTag",
    "FAMILIES",
    "mod_inverse",
    "validate_total_valency",
    "nielsen_equal",
    "tv_power",
    "tv_power_direct",
    "closed_form_tv",
    "family_order",
    "classify_hyperelliptic",
    "hyperelliptic_involution_tv",
    "parse_tv",
]

FAMILIES = ("F1", "F2", "F3", "IF3")


def mod_inverse(nu: int, lam: int) -> int:
    """Return ``theta`` in ``1..lam-1`` with ``nu * theta = 1 (mod lam)``."""
    if lam < 2 or not 1 <= nu < lam:
        raise InvalidRotation(f"rotation {nu}/{lam} out of range")
    if gcd(nu, lam) != 1:
        raise InvalidRotation(f"{nu} is not a unit mod {lam}")
    return pow(nu, -1, lam)


@dataclass(frozen=True, order=False)
class Valency:
    theta: int
    lam: int

    def __post_init__(self):
        if self.lam < 2 or not 1 <= self.theta < self.lam or gcd(self.theta, self.lam) != 1:
            raise InvalidTotalValency(f"bad valency {self.theta}/{self.lam}")

    @classmethod
    def from_rotation(cls, nu: int, lam: int) -> "Valency":
        return cls(mod_inverse(nu % lam, lam), lam)

    @property
    def rotation(self) -> int:
        """The clockwise rotation number ``nu`` of the isotropy generator."""
        return mod_inverse(self.theta, self.lam)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.theta, self.lam)

    def sort_key(self):
        return (-self.lam, self.theta)

    def __str__(self):
        return f"{self.theta}/{self.lam}"


def _rh_quotient_genus(genus: int, order: int, valencies) -> Fraction:
    # 2 - 2g = n(2 - 2h) - sum (n/lam)(lam - 1), solved for h
    ramification = sum((order // v.lam) * (v.lam - 1) for v in valencies)
    return Fraction(2 * order - ramification - 2 + 2 * genus, 2 * order)


@dataclass(frozen=True)
class TotalValency:
    """``[g, n; theta_1/lam_1 + ... ]`` plus the genus of the quotient surface.

    Valencies are stored in canonical order (``lam`` descending, then ``theta``
    ascending), so dataclass equality and hashing are multiset equality.
    Construction checks only structure; use :func:`validate_total_valency` for
    integrality and Riemann-Hurwitz.
    """

    genus: int
    order: int
    quotient_genus: int
    valencies: tuple[Valency, ...] = field(default=())

    def __post_init__(self):
        vals = tuple(sorted(self.valencies, key=Valency.sort_key))
        object.__setattr__(self, "valencies", vals)
        if self.genus < 0 or self.order < 1 or self.quotient_genus < 0:
            raise InvalidTotalValency(f"bad header g={self.genus} n={self.order} h={self.quotient_genus}")
        for v in vals:
            if self.order % v.lam:
                raise InvalidTotalValency(f"isotropy order {v.lam} does not divide {self.order}")

    @classmethod
    def build(cls, genus: int, order: int, valencies, quotient_genus: int | None = None) -> "TotalValency":
        """Build from ``Valency`` objects or ``(theta, lam)`` pairs.

        When ``quotient_genus`` is omitted it is the value forced by
        Riemann-Hurwitz, which must then be a nonnegative integer.
        """
        vals = tuple(v if isinstance(v, Valency) else Valency(*v) for v in valencies)
        if quotient_genus is None:
            h = _rh_quotient_genus(genus, order, vals)
            if h.denominator != 1 or h < 0:
                raise InvalidTotalValency(
                    f"no integral quotient genus for [{genus},{order}; ...] (Riemann-Hurwitz gives {h})"
                )
            quotient_genus = int(h)
        return cls(genus, order, quotient_genus, vals)

    @classmethod
    def identity(cls, genus: int) -> "TotalValency":
        return cls(genus, 1, genus, ())

    @property
    def total(self) -> Fraction:
        return sum((v.fraction for v in self.valencies), Fraction(0))

    @property
    def cone_orders(self) -> tuple[int, ...]:
        return tuple(v.lam for v in self.valencies)

    @property
    def fixed_points(self) -> int:
        """Number of points fixed by the map itself (orbits of isotropy ``n``)."""
        return sum(1 for v in self.valencies if v.lam == self.order)

    def multiset(self) -> Counter:
        return Counter((v.theta, v.lam) for v in self.valencies)

    def to_dict(self) -> dict:
        return {
            "g": self.genus,
            "n": self.order,
            "quotient_genus": self.quotient_genus,
            "valencies": [{"theta": v.theta, "lambda": v.lam} for v in self.valencies],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TotalValency":
        try:
            vals = [(int(v["theta"]), int(v["lambda"])) for v in data["valencies"]]
            h = data.get("quotient_genus")
            return cls.build(int(data["g"]), int(data["n"]), vals, None if h is None else int(h))
        except (KeyError, TypeError) as exc:
            raise InvalidTotalValency(f"malformed total valency object: {exc}") from None

    def __str__(self):
        body = " + ".join(str(v) for v in self.valencies)
        text = f"[{self.genus},{self.order}; {body}]"
        if _rh_quotient_genus(self.genus, self.order, self.valencies) != self.quotient_genus:
            text += f"@{self.quotient_genus}"
        return text


_TV_RE = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*;(.*)\]\s*(?:@\s*(\d+))?$", re.S)
_TERM_RE = re.compile(r"^(\d+)\s*/\s*(\d+)\s*(?:(?:[x×*])\s*(\d+))?$")


def parse_tv(text: str) -> TotalValency:
    """Parse ``[g,n; t1/l1 + t2/l2 + ...]`` with an optional ``@h`` suffix.

    A term may carry a multiplicity, ``1/2 x6`` (also ``×6`` or ``*6``). An
    empty body or ``∅`` means no multiple orbits.
    """
    match = _TV_RE.match(text.strip())
    if not match:
        raise InvalidTotalValency(f"cannot parse total valency {text!r}")
    g, n, body, h = match.groups()
    body = body.strip()
    vals = []
    if body and body != "∅":
        for term in body.split("+"):
            tm = _TERM_RE.match(term.strip())
            if not tm:
                raise InvalidTotalValency(f"cannot parse valency term {term.strip()!r}")
            theta, lam, mult = tm.groups()
            vals.extend([(int(theta), int(lam))] * int(mult or 1))
    return TotalValency.build(int(g), int(n), vals, None if h is None else int(h))


@dataclass(frozen=True)
class ValidationResult:
    integral: bool
    riemann_hurwitz: bool
    reasons: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.integral and self.riemann_hurwitz

    def __bool__(self):
        return self.ok


def validate_total_valency(tv: TotalValency) -> ValidationResult:
    reasons = []
    integral = tv.total.denominator == 1
    if not integral:
        reasons.append(f"sum of valencies is {tv.total}, not an integer")
    h = _rh_quotient_genus(tv.genus, tv.order, tv.valencies)
    rh = h == tv.quotient_genus
    if not rh:
        reasons.append(f"Riemann-Hurwitz needs quotient genus {h}, got {tv.quotient_genus}")
    return ValidationResult(integral, rh, tuple(reasons))


def _require_valid(tv: TotalValency) -> None:
    result = validate_total_valency(tv)
    if not result:
        raise InvalidTotalValency(f"{tv}: " + "; ".join(result.reasons))


def nielsen_equal(a: TotalValency, b: TotalValency) -> bool:
    """Conjugacy test: same genus, order, quotient genus and valency multiset."""
    return (
        a.genus == b.genus
        and a.order == b.order
        and a.quotient_genus == b.quotient_genus
        and a.multiset() == b.multiset()
    )


def tv_power(tv: TotalValency, k: int) -> TotalValency:
    """Total valency of ``f**k`` given the total valency of ``f``.

    Realizes ``tv`` as the cyclic action of Z/n whose cone generators are the
    isotropy generators of the orbits, and reads off the element ``k``.
    """
    from .action import cyclic_action, element_tv

    if k < 1:
        raise ExponentOutOfRange(f"power must be positive, got {k}")
    _require_valid(tv)
    if k % tv.order == 0:
        return TotalValency.identity(tv.genus)
    return element_tv(cyclic_action(tv), k % tv.order)


def tv_power_direct(tv: TotalValency, k: int) -> TotalValency:
    """Same as :func:`tv_power`, by orbit-splitting arithmetic instead of an action."""
    if k < 1:
        raise ExponentOutOfRange(f"power must be positive, got {k}")
    _require_valid(tv)
    n = tv.order
    step = gcd(n, k)
    new_order = n // step
    if new_order == 1:
        return TotalValency.identity(tv.genus)
    out = []
    for v in tv.valencies:
        d = n // v.lam
        # isotropy of the orbit inside <f^k> is generated by f^L
        span = step * d // gcd(step, d)
        lam = n // span
        if lam < 2:
            continue
        size = new_order // lam
        c = (k * size // d) % v.lam
        nu = (c * v.rotation) % v.lam // (v.lam // lam)
        out.extend([Valency.from_rotation(nu, lam)] * (d // size))
    result = TotalValency.build(tv.genus, new_order, out)
    _require_valid(result)
    return result


def generator_tv(family: str, g: int) -> TotalValency:
    """Closed-form total valency of the standard generator ``f1``, ``f2`` or ``f3``."""
    if family == "F1":
        return TotalValency.build(g, 4 * g + 2, [(1, 4 * g + 2), (g, 2 * g + 1), (1, 2)])
    if family == "F2":
        return TotalValency.build(g, 4 * g, [(1, 4 * g), (2 * g - 1, 4 * g), (1, 2)])
    if family == "F3":
        return TotalValency.build(g, 2 * g + 2, [(1, 2 * g + 2), (1, 2 * g + 2), (g, g + 1)])
    raise ValueError(f"no closed form for family {family!r}")


def family_order(family: str, g: int) -> int:
    """Order of the generator whose powers a family tag ranges over."""
    return {"F1": 4 * g + 2, "F2": 4 * g, "F3": 2 * g + 2, "IF3": 2 * g + 2}[family]


@dataclass(frozen=True)
class FamilyTag:
    """``family`` in F1, F2, F3 names ``f_i**exponent``; IF3 names ``I * f3**exponent``."""

    family: str
    exponent: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.exponent < 1:
            raise ExponentOutOfRange(f"exponent must be positive, got {self.exponent}")

    def to_dict(self) -> dict:
        return {"family": self.family, "exponent": self.exponent}

    def __str__(self):
        if self.family == "IF3":
            return f"I*f3^{self.exponent}"
        return f"f{self.family[1]}^{self.exponent}"


@lru_cache(maxsize=4096)
def closed_form_tv(tag: FamilyTag, g: int) -> TotalValency:
    if g < 1:
        raise ValueError(f"genus must be at least 1, got {g}")
    if tag.exponent > family_order(tag.family, g):
        raise ExponentOutOfRange(f"{tag} exceeds the order {family_order(tag.family, g)} at genus {g}")
    if tag.family == "IF3":
        from .action import element_tv, standard_model

        model = standard_model("G3", g)
        h = model.group.add(model.group.scale(model.f, tag.exponent), model.involution)
        if model.group.is_identity(h):
            return TotalValency.identity(g)
        return element_tv(model.action, h)
    return tv_power(generator_tv(tag.family, g), tag.exponent)


def hyperelliptic_involution_tv(g: int) -> TotalValency:
    return TotalValency.build(g, 2, [(1, 2)] * (2 * g + 2))


def all_tags(g: int):
    """Every family tag at genus ``g``, in classification precedence order."""
    for family in FAMILIES:
        for k in range(1, family_order(family, g) + 1):
            yield FamilyTag(family, k)


def classify_hyperelliptic(tv: TotalValency) -> FamilyTag | None:
    """First tag (F1 > F2 > F3 > IF3, then smallest exponent) Nielsen-equal to ``tv``."""
    if tv.genus < 2:
        raise ValueError("classification needs genus at least 2")
    _require_valid(tv)
    for tag in all_tags(tv.genus):
        candidate = closed_form_tv(tag, tv.genus)
        if candidate.order == tv.order and nielsen_equal(candidate, tv):
            return tag
    return None
