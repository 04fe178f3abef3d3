"""Closed surfaces glued from one regular polygon, and their rotations.

Conventions: corners ``v_0 .. v_{m-1}`` are numbered clockwise, edge ``e`` runs
from ``v_e`` to ``v_{e+1}``, and a rotation by ``step`` sends edge ``e`` to
``e + step`` (clockwise). The polygon is coned from its barycenter ``O`` with
every edge split at its midpoint ``M_e``, giving ``2m`` triangles

    wedge 2e     = (O, v_e, M_e)
    wedge 2e + 1 = (O, M_e, v_{e+1})

so the barycenter, midpoints and corners are all vertices and every rotation is
simplicial. Links are listed clockwise; a rotation that fixes a vertex shifts
its link by ``s`` wedges out of ``W``, which is a clockwise turn by
``2*pi*s/W``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from . import kernels
from .errors import InvalidTotalValency, NonOrientableGluing, NotAnInvolution, NotEquivariant
from .valency import TotalValency, Valency, validate_total_valency


@dataclass(frozen=True)
class Cell:
    """A vertex of the quotient complex.

    ``kind`` is ``"center"``, ``"midpoint"`` (members are edge indices) or
    ``"corner"`` (members are polygon corner indices).
    """

    kind: str
    members: frozenset[int]

    def shifted(self, step: int, m: int) -> "Cell":
        if self.kind == "center":
            return self
        return Cell(self.kind, frozenset((x + step) % m for x in self.members))

    def sort_key(self):
        return ({"center": 0, "midpoint": 1, "corner": 2}[self.kind], min(self.members, default=-1))


CENTER = Cell("center", frozenset())


@dataclass(frozen=True)
class GluedPolygon:
    m: int
    pairing: tuple[int, ...]

    @cached_property
    def corner_labels(self) -> list[int]:
        return kernels.vertex_classes(self.m, self.pairing)

    @cached_property
    def corner_classes(self) -> tuple[Cell, ...]:
        groups: dict[int, set[int]] = {}
        for corner, label in enumerate(self.corner_labels):
            groups.setdefault(label, set()).add(corner)
        return tuple(Cell("corner", frozenset(g)) for _, g in sorted(groups.items()))

    @cached_property
    def midpoint_classes(self) -> tuple[Cell, ...]:
        return tuple(
            Cell("midpoint", frozenset((e, p))) for e, p in enumerate(self.pairing) if e < p
        )

    @property
    def cells(self) -> tuple[Cell, ...]:
        return (CENTER,) + self.midpoint_classes + self.corner_classes

    @property
    def euler_characteristic(self) -> int:
        m = self.m
        vertices = 1 + len(self.midpoint_classes) + len(self.corner_classes)
        # spokes to corners, spokes to midpoints, glued half-edges
        edges = m + m + m
        faces = 2 * m
        return vertices - edges + faces

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def cell_of_corner(self, corner: int) -> Cell:
        label = self.corner_labels[corner % self.m]
        return next(c for c in self.corner_classes if min(c.members) == label)

    def link(self, cell: Cell) -> tuple[int, ...]:
        """Wedges around ``cell`` in clockwise order, starting at its smallest member."""
        m = self.m
        if cell.kind == "center":
            return tuple(range(2 * m))
        if cell.kind == "midpoint":
            e = min(cell.members)
            p = self.pairing[e]
            return (2 * e + 1, 2 * e, 2 * p + 1, 2 * p)
        start = min(cell.members)
        out = []
        corner = start
        while True:
            # inside the corner at v_j: towards M_j, then towards M_{j-1};
            # leaving across edge j-1 lands at the start of its partner edge
            out += [2 * corner, (2 * corner - 1) % (2 * m)]
            corner = self.pairing[(corner - 1) % m]
            if corner == start:
                break
        return tuple(out)


@dataclass(frozen=True)
class RotationAction:
    """Rotation of the polygon by ``step`` edges, clockwise."""

    step: int

    def order(self, m: int) -> int:
        return m // gcd(m, self.step % m) if self.step % m else 1


def _check_equivariant(surface: GluedPolygon, rot: RotationAction) -> None:
    m, s = surface.m, rot.step
    for e, p in enumerate(surface.pairing):
        if surface.pairing[(e + s) % m] != (p + s) % m:
            raise NotEquivariant(f"rotation by {s} does not preserve the pairing at edge {e}")


def build(m: int, pairs: Iterable[Sequence]) -> GluedPolygon:
    """Glue an ``m``-gon along the given edge pairs.

    Each pair is ``(a, b)`` or ``(a, b, reversed)``; ``reversed`` must be true
    (gluing with reversed boundary orientation), anything else would make the
    surface non-orientable.
    """
    if m < 2 or m % 2:
        raise NotAnInvolution(f"polygon must have an even number of edges, got {m}")
    pairing = [-1] * m
    for item in pairs:
        if len(item) == 3:
            a, b, rev = item
            if not rev:
                raise NonOrientableGluing(f"edges {a} and {b} glued without orientation reversal")
        elif len(item) == 2:
            a, b = item
        else:
            raise NotAnInvolution(f"malformed pair {item!r}")
        a, b = int(a), int(b)
        if not (0 <= a < m and 0 <= b < m) or a == b:
            raise NotAnInvolution(f"bad pair ({a}, {b}) for an {m}-gon")
        if pairing[a] != -1 or pairing[b] != -1:
            raise NotAnInvolution(f"edge used twice in pair ({a}, {b})")
        pairing[a], pairing[b] = b, a
    if -1 in pairing:
        raise NotAnInvolution(f"edge {pairing.index(-1)} is not paired")
    surface = GluedPolygon(m, tuple(pairing))
    chi = surface.euler_characteristic
    if chi > 2 or chi % 2:
        raise AssertionError(f"gluing produced Euler characteristic {chi}")
    return surface


def pairs_of(surface: GluedPolygon) -> list[tuple[int, int]]:
    return [(e, p) for e, p in enumerate(surface.pairing) if e < p]


@dataclass(frozen=True)
class OrbitDatum:
    size: int
    isotropy: int
    rotation: int
    valency: Valency
    cell: Cell

    def as_tuple(self):
        return (self.size, self.isotropy, self.rotation, str(self.valency))


def multiple_orbits(surface: GluedPolygon, rot: RotationAction) -> list[OrbitDatum]:
    """Every orbit with nontrivial isotropy, with its link-wedge rotation number."""
    _check_equivariant(surface, rot)
    m, s = surface.m, rot.step
    n = rot.order(m)
    if n == 1:
        return []
    out = []
    seen: set[Cell] = set()
    for cell in surface.cells:
        if cell in seen:
            continue
        orbit = [cell]
        nxt = cell.shifted(s, m)
        while nxt != cell:
            orbit.append(nxt)
            nxt = nxt.shifted(s, m)
        seen.update(orbit)
        d = len(orbit)
        lam = n // d
        if lam < 2:
            continue
        link = surface.link(cell)
        width = len(link)
        shift_by = 2 * s * d
        image = [(w + shift_by) % (2 * m) for w in link]
        offset = link.index(image[0])
        if image != [link[(i + offset) % width] for i in range(width)]:
            raise AssertionError(f"rotation does not act on the link of {cell} as a cyclic shift")
        if (offset * lam) % width:
            raise AssertionError(f"link shift {offset}/{width} is not of order {lam}")
        nu = offset * lam // width
        out.append(OrbitDatum(d, lam, nu, Valency.from_rotation(nu, lam), cell))
    out.sort(key=lambda o: (o.size, o.rotation, o.cell.sort_key()))
    return out


def tv_from_polygon(surface: GluedPolygon, rot: RotationAction) -> TotalValency:
    orbits = multiple_orbits(surface, rot)
    n = rot.order(surface.m)
    if n == 1:
        return TotalValency.identity(surface.genus)
    tv = TotalValency.build(surface.genus, n, [o.valency for o in orbits])
    result = validate_total_valency(tv)
    if not result:
        raise InvalidTotalValency(f"polygon rotation gave {tv}: {'; '.join(result.reasons)}")
    return tv


def family_polygon_size(family: str, g: int) -> int:
    return {"F1": 8 * g + 4, "F2": 8 * g, "F3": 4 * g + 4}[family]


def _family_offset(family: str, m: int) -> int:
    # Found by derive_pairings(); each family also matches the mirror offset m - offset.
    return 3 if family == "F3" else m // 2 + 1


def standard_family(family: str, g: int) -> tuple[GluedPolygon, RotationAction]:
    """Built-in polygon model of ``f1``, ``f2`` or ``f3``.

    Even edges ``2j`` are glued to ``2j + offset`` (``offset`` odd), i.e. one
    pair and all its images under the rotation by two edges.
    """
    if g < 2:
        raise ValueError("standard families need genus at least 2")
    m = family_polygon_size(family, g)
    offset = _family_offset(family, m)
    surface = build(m, [(2 * j, (2 * j + offset) % m) for j in range(m // 2)])
    return surface, RotationAction(2)


def equivariant_pairings(m: int, step: int) -> list[tuple[int, ...]]:
    """All fixed-point-free involutions of ``Z/m`` commuting with ``+step``."""
    c = gcd(m, step % m) if step % m else m
    reps = range(c)
    out = []
    for images in product(range(m), repeat=c):
        pairing = [-1] * m
        for r, t in zip(reps, images):
            for j in range(m // c):
                pairing[(r + j * step) % m] = (t + j * step) % m
        if all(pairing[e] != e and pairing[pairing[e]] == e for e in range(m)):
            out.append(tuple(pairing))
    return sorted(set(out))


def derive_pairings(family: str, g: int) -> list[tuple[int, ...]]:
    """Equivariant pairings whose rotation by two edges has the family's closed form."""
    from .valency import generator_tv, nielsen_equal

    m = family_polygon_size(family, g)
    target = generator_tv(family, g)
    found = []
    for pairing in equivariant_pairings(m, 2):
        surface = build(m, [(e, p) for e, p in enumerate(pairing) if e < p])
        if surface.genus == g and nielsen_equal(tv_from_polygon(surface, RotationAction(2)), target):
            found.append(pairing)
    return found
