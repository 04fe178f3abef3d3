import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperperiodic.errors import NonOrientableGluing, NotAnInvolution, NotEquivariant
from hyperperiodic.polygon import (
    CENTER,
    RotationAction,
    _family_offset,
    build,
    derive_pairings,
    family_polygon_size,
    multiple_orbits,
    pairs_of,
    standard_family,
    tv_from_polygon,
)
from hyperperiodic.valency import TotalValency, generator_tv, parse_tv, tv_power

FAMILIES = ("F1", "F2", "F3")
TORUS = [(0, 2), (1, 3)]


class TestBuild:
    def test_torus(self):
        assert build(4, TORUS).genus == 1

    @pytest.mark.parametrize("family, m", [("F1", 20), ("F2", 16), ("F3", 12)])
    def test_family_genus(self, family, m):
        surface, _ = standard_family(family, 2)
        assert surface.m == m == family_polygon_size(family, 2)
        assert build(m, pairs_of(surface)).genus == 2

    def test_explicit_orientation_flag(self):
        assert build(4, [(0, 2, True), (1, 3, True)]).genus == 1
        with pytest.raises(NonOrientableGluing):
            build(4, [(0, 2, False), (1, 3, True)])

    @pytest.mark.parametrize(
        "m, pairs",
        [(5, [(0, 1), (2, 3)]), (4, [(0, 1), (1, 2)]), (4, [(0, 0), (1, 2)]), (4, [(0, 2)]), (4, [(0, 4), (1, 2)])],
    )
    def test_bad_pairings(self, m, pairs):
        with pytest.raises(NotAnInvolution):
            build(m, pairs)

    @pytest.mark.parametrize("g", range(2, 11))
    @pytest.mark.parametrize("family", FAMILIES)
    def test_euler_characteristic(self, family, g):
        surface, _ = standard_family(family, g)
        assert surface.euler_characteristic == 2 - 2 * g
        assert surface.genus == g


class TestOrbits:
    def test_f1_genus_two(self):
        surface, rot = standard_family("F1", 2)
        got = {o.as_tuple() for o in multiple_orbits(surface, rot)}
        assert got == {(1, 10, 1, "1/10"), (2, 5, 3, "2/5"), (5, 2, 1, "1/2")}

    def test_identity_rotation(self):
        surface, _ = standard_family("F2", 3)
        assert multiple_orbits(surface, RotationAction(0)) == []
        assert multiple_orbits(surface, RotationAction(surface.m)) == []
        assert tv_from_polygon(surface, RotationAction(0)) == TotalValency.identity(3)

    def test_f3_genus_two(self):
        surface, rot = standard_family("F3", 2)
        assert tv_from_polygon(surface, rot) == parse_tv("[2,6; 1/6 + 1/6 + 2/3]")

    def test_not_equivariant(self):
        surface, _ = standard_family("F1", 2)
        with pytest.raises(NotEquivariant):
            multiple_orbits(surface, RotationAction(1))

    def test_center_is_fixed(self):
        surface, rot = standard_family("F2", 2)
        (center,) = [o for o in multiple_orbits(surface, rot) if o.cell == CENTER]
        assert (center.size, center.isotropy, center.rotation) == (1, 8, 1)


class TestTvFromPolygon:
    def test_examples(self):
        assert tv_from_polygon(*standard_family("F1", 3)) == parse_tv("[3,14; 1/14 + 3/7 + 1/2]")
        assert tv_from_polygon(*standard_family("F2", 2)) == parse_tv("[2,8; 1/8 + 3/8 + 1/2]")

    def test_torus_quarter_turn(self):
        assert tv_from_polygon(build(4, TORUS), RotationAction(1)) == parse_tv("[1,4; 1/4 + 1/4 + 1/2]")

    def test_torus_half_turn(self):
        assert tv_from_polygon(build(4, TORUS), RotationAction(2)) == parse_tv("[1,2; 1/2 ×4]")

    @pytest.mark.parametrize("g", range(2, 11))
    @pytest.mark.parametrize("family", FAMILIES)
    def test_closed_form(self, family, g):
        assert tv_from_polygon(*standard_family(family, g)) == generator_tv(family, g)

    @pytest.mark.parametrize("g", range(2, 7))
    @pytest.mark.parametrize("family", FAMILIES)
    def test_powers(self, family, g):
        surface, rot = standard_family(family, g)
        base = tv_from_polygon(surface, rot)
        for k in range(1, base.order):
            assert tv_from_polygon(surface, RotationAction(k * rot.step)) == tv_power(base, k)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(FAMILIES), st.integers(2, 8), st.data())
    def test_links_are_full_turns(self, family, g, data):
        surface, _ = standard_family(family, g)
        cells = surface.cells
        cell = data.draw(st.sampled_from(cells))
        link = surface.link(cell)
        assert len(set(link)) == len(link)
        # every wedge has one corner of each kind
        assert sum(len(surface.link(c)) for c in cells if c.kind == "corner") == 2 * surface.m
        assert sum(len(surface.link(c)) for c in cells if c.kind == "midpoint") == 2 * surface.m


class TestWedgeOrder:
    @pytest.mark.parametrize("g", range(2, 8))
    def test_domains_around_the_period_two_vertex(self, g):
        # domains are numbered by the rotation, 1-based: wedge w lies in domain w // 4 + 1
        surface, rot = standard_family("F1", g)
        n = 4 * g + 2
        (orbit,) = [o for o in multiple_orbits(surface, rot) if o.size == 2]
        start = surface.cell_of_corner(0)
        assert start in (orbit.cell, orbit.cell.shifted(rot.step, surface.m))
        domains = [w // 4 + 1 for w in surface.link(start)]
        assert domains[:5] == [1, n, 2 * g + 1, 2 * g, n - 1]
        expected = [1]
        for i in range(1, len(domains)):
            step = 1 if i % 2 else 2 * g + 1
            expected.append((expected[-1] - step - 1) % n + 1)
        assert domains == expected


class TestDerivedPairings:
    @pytest.mark.parametrize("g", [2, 3])
    @pytest.mark.parametrize("family", FAMILIES)
    def test_builtin_is_found_by_search(self, family, g):
        surface, _ = standard_family(family, g)
        found = derive_pairings(family, g)
        assert surface.pairing in found
        assert len(found) == 2
        offset = _family_offset(family, surface.m)
        mirror = build(surface.m, [(2 * j, (2 * j - offset) % surface.m) for j in range(surface.m // 2)])
        assert set(found) == {surface.pairing, mirror.pairing}
