"""Finite abelian group actions on surfaces, encoded by orbifold data.

An action of ``G`` (Z/n or Z/n + Z/2) on a genus-``g`` surface with quotient
``S^2(m_1, ..., m_s)`` is given by the images ``x_i`` in ``G`` of the elliptic
generators of the orbifold group. Each point above cone ``i`` has stabilizer
``<x_i>`` and ``x_i`` turns a small disk around it clockwise by ``2*pi/m_i``.
That is enough to read off the total valency of any element.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence, Union

from . import kernels
from .errors import (
    IdentityElement,
    NotHyperelliptic,
    NotSurjective,
    OrderMismatch,
    RelationViolated,
    RiemannHurwitzFailed,
)
from .valency import (
    FamilyTag,
    TotalValency,
    Valency,
    classify_hyperelliptic,
    hyperelliptic_involution_tv,
    nielsen_equal,
    validate_total_valency,
)

Element = tuple[int, ...]
ElementLike = Union[int, Sequence[int]]

MODEL_NAMES = ("G1", "G2", "G3")


@dataclass(frozen=True)
class AbelianGroup:
    """Z/n (``moduli == (n,)``) or Z/n + Z/2 (``moduli == (n, 2)``)."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= len(self.moduli) <= 2 or any(n < 1 for n in self.moduli):
            raise ValueError(f"unsupported group moduli {self.moduli}")
        if len(self.moduli) == 2 and self.moduli[1] != 2:
            raise ValueError("second factor must be Z/2")

    @property
    def order(self) -> int:
        out = 1
        for n in self.moduli:
            out *= n
        return out

    @property
    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    def normalize(self, x: ElementLike) -> Element:
        if isinstance(x, int):
            x = (x,)
        x = tuple(int(r) for r in x)
        if len(x) != len(self.moduli):
            raise ValueError(f"element {x} does not belong to a group with moduli {self.moduli}")
        return tuple(r % n for r, n in zip(x, self.moduli))

    def add(self, x: ElementLike, y: ElementLike) -> Element:
        x, y = self.normalize(x), self.normalize(y)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.moduli))

    def neg(self, x: ElementLike) -> Element:
        return tuple((-a) % n for a, n in zip(self.normalize(x), self.moduli))

    def scale(self, x: ElementLike, k: int) -> Element:
        return tuple((k * a) % n for a, n in zip(self.normalize(x), self.moduli))

    def is_identity(self, x: ElementLike) -> bool:
        return self.normalize(x) == self.identity

    def element_order(self, x: ElementLike) -> int:
        return kernels.element_order(self.moduli, self.normalize(x))

    def elements(self) -> Iterator[Element]:
        return product(*(range(n) for n in self.moduli))

    def cyclic_subgroup(self, x: ElementLike) -> frozenset[Element]:
        x = self.normalize(x)
        return frozenset(self.scale(x, k) for k in range(self.element_order(x)))

    def generated_order(self, gens: Sequence[ElementLike]) -> int:
        seen = {self.identity}
        frontier = [self.identity]
        gens = [self.normalize(x) for x in gens]
        while frontier:
            nxt = []
            for y in frontier:
                for x in gens:
                    z = self.add(x, y)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return len(seen)

    def format(self, x: ElementLike) -> Union[int, list[int]]:
        x = self.normalize(x)
        return x[0] if len(x) == 1 else list(x)


@dataclass(frozen=True)
class OrbifoldAction:
    group: AbelianGroup
    genus: int
    cone_orders: tuple[int, ...]
    images: tuple[Element, ...]
    # Nonzero only for the cyclic actions built by cyclic_action(); the handle
    # generators of the orbifold group can then hit anything.
    quotient_genus: int = 0

    def _moduli2(self) -> tuple[int, int]:
        m = self.group.moduli
        return (m[0], m[1] if len(m) == 2 else 1)

    def _cones2(self):
        return [(m, x[0], x[1] if len(x) == 2 else 0) for m, x in zip(self.cone_orders, self.images)]

    def cone_data(self, h: ElementLike) -> list[tuple[int, int, int]]:
        """Per cone ``(lam, nu, count)`` for the element ``h`` (see kernels)."""
        h = self.group.normalize(h)
        h2 = (h[0], h[1] if len(h) == 2 else 0)
        return kernels.cone_orbits(self._moduli2(), h2, self._cones2())

    def fixed_points(self, h: ElementLike) -> int:
        """Number of points of the surface fixed by ``h`` (``h`` not the identity)."""
        h = self.group.normalize(h)
        total = 0
        for m, x in zip(self.cone_orders, self.images):
            if h in self.group.cyclic_subgroup(x):
                total += self.group.order // m
        return total


def make_action(data: dict) -> OrbifoldAction:
    """Validate an orbifold epimorphism given as a plain mapping.

    Keys: ``group`` (list of moduli, ``[n]`` or ``[n, 2]``), ``cones`` (cone
    orders), ``images`` (group elements, ints allowed for cyclic groups), and
    optionally ``genus`` (checked against Riemann-Hurwitz) and
    ``quotient_genus`` (default 0).
    """
    group = AbelianGroup(tuple(int(n) for n in data["group"]))
    cones = tuple(int(m) for m in data["cones"])
    images = tuple(group.normalize(x) for x in data["images"])
    h = int(data.get("quotient_genus", 0))
    if len(cones) != len(images):
        raise ValueError("need one image per cone point")
    for i, (m, x) in enumerate(zip(cones, images)):
        if group.element_order(x) != m:
            raise OrderMismatch(
                f"image {group.format(x)} of cone {i} has order {group.element_order(x)}, expected {m}"
            )
    total = group.identity
    for x in images:
        total = group.add(total, x)
    if total != group.identity:
        raise RelationViolated(f"cone images sum to {group.format(total)}, not 0")
    if h == 0 and group.generated_order(images) != group.order:
        raise NotSurjective("cone images do not generate the group")
    euler = Fraction(group.order) * (2 - 2 * h - sum(Fraction(m - 1, m) for m in cones))
    if euler.denominator != 1 or euler > 2 or euler % 2:
        raise RiemannHurwitzFailed(f"Riemann-Hurwitz gives Euler characteristic {euler}")
    genus = int(1 - euler / 2)
    if "genus" in data and int(data["genus"]) != genus:
        raise RiemannHurwitzFailed(f"Riemann-Hurwitz gives genus {genus}, not {data['genus']}")
    return OrbifoldAction(group, genus, cones, images, h)


def element_tv(action: OrbifoldAction, h: ElementLike) -> TotalValency:
    """Total valency of the group element ``h`` acting on the surface."""
    group = action.group
    h = group.normalize(h)
    if group.is_identity(h):
        raise IdentityElement("the identity has no total valency of finite order > 1")
    vals = []
    for lam, nu, count in action.cone_data(h):
        if lam >= 2:
            vals.extend([Valency.from_rotation(nu, lam)] * count)
    tv = TotalValency.build(action.genus, group.element_order(h), vals)
    result = validate_total_valency(tv)
    if not result:
        raise AssertionError(f"element {h} produced an invalid total valency: {result.reasons}")
    return tv


def cyclic_action(tv: TotalValency) -> OrbifoldAction:
    """Z/n action realizing ``tv`` with ``1`` acting as the map itself.

    The isotropy generator of an orbit with valency ``theta/lam`` is
    ``(n/lam) * theta`` times the generator.
    """
    n = tv.order
    return make_action(
        {
            "group": [n],
            "cones": [v.lam for v in tv.valencies],
            "images": [(n // v.lam) * v.theta for v in tv.valencies],
            "quotient_genus": tv.quotient_genus,
            "genus": tv.genus,
        }
    )


@dataclass(frozen=True)
class StandardModel:
    """One of the groups ``G_i = <f_i, I>`` with its distinguished elements."""

    name: str
    genus: int
    action: OrbifoldAction
    f: Element
    involution: Element

    @property
    def group(self) -> AbelianGroup:
        return self.action.group


def model_data(name: str, g: int) -> dict:
    """Orbifold data of the three standard groups (derived; see ``derive_model_images``)."""
    if name == "G1":
        n = 4 * g + 2
        return {"group": [n], "cones": [n, 2 * g + 1, 2], "images": [1, 2 * g, 2 * g + 1], "genus": g}
    if name == "G2":
        n = 4 * g
        return {"group": [n], "cones": [n, n, 2], "images": [1, 2 * g - 1, 2 * g], "genus": g}
    if name == "G3":
        n = 2 * g + 2
        return {"group": [n, 2], "cones": [n, n, 2], "images": [(1, 0), (n - 1, 1), (0, 1)], "genus": g}
    raise ValueError(f"unknown model {name!r}")


def standard_model(name: str, g: int) -> StandardModel:
    if g < 2:
        raise ValueError("standard models need genus at least 2")
    action = make_action(model_data(name, g))
    if name == "G3":
        f, inv = (1, 0), (0, 1)
    else:
        f, inv = (1,), (action.group.order // 2,)
    return StandardModel(name, g, action, f, inv)


def derive_model_images(name: str, g: int) -> list[tuple[Element, ...]]:
    """Search every cone-image triple for the standard model shape.

    The generator image is pinned to ``f`` (1 or (1, 0)); the other two images
    range over elements of the right orders with zero sum. A triple is kept when
    the action is valid, ``f`` has the closed-form total valency of the family,
    and the distinguished involution fixes ``2g + 2`` points.
    """
    from .valency import generator_tv

    data = model_data(name, g)
    family = {"G1": "F1", "G2": "F2", "G3": "F3"}[name]
    target = generator_tv(family, g)
    group = AbelianGroup(tuple(data["group"]))
    f = group.normalize(data["images"][0])
    inv = (0, 1) if name == "G3" else (group.order // 2,)
    found = []
    for x2 in group.elements():
        x3 = group.neg(group.add(f, x2))
        try:
            action = make_action({**data, "images": [f, x2, x3]})
        except ValueError:
            continue
        if nielsen_equal(element_tv(action, f), target) and action.fixed_points(inv) == 2 * g + 2:
            found.append((f, x2, x3))
    return found


def pair_case(action: OrbifoldAction, f: ElementLike, involution: ElementLike) -> tuple[str, int, int]:
    """Classify a commuting pair ``(f, I)`` into the cases ``i``, ``ii``, ``iii``.

    Returns ``(case, n, n_bar)`` with ``n`` the order of ``f`` and ``n_bar`` its
    order modulo ``<I>``. The case is read off from how many of the ``2g + 2``
    branch points of ``surface/<I>`` the induced rotation fixes: two, one or none.
    """
    group = action.group
    f, inv = group.normalize(f), group.normalize(involution)
    if group.element_order(inv) != 2 or action.fixed_points(inv) != 2 * action.genus + 2:
        raise NotHyperelliptic(f"{group.format(inv)} is not a hyperelliptic involution")
    n = group.element_order(f)
    n_bar = next(k for k in range(1, n + 1) if group.scale(f, k) in (group.identity, inv))
    if n_bar == 1:
        raise ValueError("f induces the identity on the quotient by I")
    fixed_branch = sum(
        group.order // m
        for m, x in zip(action.cone_orders, action.images)
        if inv in group.cyclic_subgroup(x) and f in group.cyclic_subgroup(x)
    )
    case = {2: "i", 1: "ii", 0: "iii"}.get(fixed_branch)
    if case is None:
        raise AssertionError(f"rotation of the sphere fixes {fixed_branch} branch points")
    return case, n, n_bar


@dataclass(frozen=True)
class OrbifoldSignature:
    genus: int
    cone_orders: tuple[int, ...]

    def __str__(self):
        base = "S^2" if self.genus == 0 else f"Sigma_{self.genus}"
        return f"{base}({', '.join(map(str, self.cone_orders))})" if self.cone_orders else base


def quotient_signature(action: OrbifoldAction, generator: ElementLike) -> OrbifoldSignature:
    """Quotient orbifold of the surface by the cyclic subgroup ``<generator>``."""
    if action.group.is_identity(generator):
        return OrbifoldSignature(action.genus, ())
    tv = element_tv(action, generator)
    return OrbifoldSignature(tv.quotient_genus, tv.cone_orders)


def element_table(model: StandardModel) -> list[tuple[Element, TotalValency]]:
    """``(element, total valency)`` for every non-identity element, in group order."""
    group = model.group
    return [(x, element_tv(model.action, x)) for x in group.elements() if not group.is_identity(x)]


def hyperelliptic_involutions(model: StandardModel) -> list[Element]:
    target = hyperelliptic_involution_tv(model.genus)
    return [x for x, tv in element_table(model) if nielsen_equal(tv, target)]


@dataclass(frozen=True)
class PairVerdict:
    group: str | None
    element: Element | None = None
    involution: Element | None = None
    family_tag: FamilyTag | None = None

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "element": None if self.element is None else list(self.element),
            "involution": None if self.involution is None else list(self.involution),
            "family_tag": None if self.family_tag is None else self.family_tag.to_dict(),
        }


def classify_pair(g: int, f_tv: TotalValency, composed_tv: TotalValency | None = None) -> PairVerdict:
    """Find a standard group holding a pair ``(f, I)`` that matches the input.

    ``f_tv`` must match ``f``; ``composed_tv``, when given, must match ``I f``.
    Models are tried in the order G1, G2, G3 and elements in group order.
    """
    tag = classify_hyperelliptic(f_tv) if f_tv.order > 1 else None
    for name in MODEL_NAMES:
        model = standard_model(name, g)
        group = model.group
        table = dict(element_table(model))
        for inv in hyperelliptic_involutions(model):
            for x, tv in table.items():
                if not nielsen_equal(tv, f_tv):
                    continue
                if composed_tv is not None:
                    y = group.add(inv, x)
                    other = TotalValency.identity(g) if group.is_identity(y) else table[y]
                    if not nielsen_equal(other, composed_tv):
                        continue
                return PairVerdict(name, x, inv, tag)
    return PairVerdict(None, None, None, tag)
