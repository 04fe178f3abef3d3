import pytest

from hyperperiodic.twists import (
    FAIL,
    NEEDS_RULES,
    PASS,
    abelianized_matrix,
    inner_conjugator,
    literal_rotation_order,
    make_tables,
    matrix_order,
    rotation_power,
    verify_family,
)
from hyperperiodic.words import Word, apply

W = Word.parse


class TestTables:
    def test_f3(self):
        d2 = make_tables("F3", 2).twists["D2"]
        assert apply(d2, "e1") == W("e2 e1")
        assert apply(d2, "e3") == W("e3 e2^-1")
        assert apply(d2, "e2") == W("e2")
        assert apply(d2, "e5") == W("e5")

    def test_f1(self):
        a3 = make_tables("F1", 2).twists["A3"]
        assert apply(a3, "b2") == W("b3")
        assert apply(a3, "b4") == W("b4")
        assert "b3" not in a3.table

    def test_f2(self):
        pf = make_tables("F2", 2)
        assert apply(pf.twists["B4"], "c4") == W("d1^-1")
        assert apply(pf.twists["B2"], "d2") == W("c2")
        assert apply(pf.twists["B2"], "c2") == W("d3")
        assert pf.product == ("B1", "B4", "B3", "B2", "B1")

    def test_relations(self):
        assert make_tables("F3", 3).relations == {"e8": W("e2^-1 e4^-1 e6^-1"), "e7": W("e1^-1 e3^-1 e5^-1")}
        assert make_tables("F1", 3).relations == {"b7": W("b1^-1 b2 b3^-1 b4 b5^-1 b6")}

    def test_f3_surface_relator_uses_kept_generators(self):
        pf = make_tables("F3", 2)
        assert pf.surface_relator.symbols() <= set(pf.generators)

    def test_rejects(self):
        with pytest.raises(ValueError):
            make_tables("F1", 1)
        with pytest.raises(ValueError):
            make_tables("F4", 2)


class TestVerify:
    def test_f3_genus_two(self):
        report = verify_family("F3", 2)
        assert report.verdicts() == {f"e{i}": PASS for i in range(1, 5)}
        assert [str(e.computed) for e in report.entries[:3]] == ["e2", "e3", "e4"]

    def test_f2_genus_two(self):
        report = verify_family("F2", 2)
        assert report.verdicts() == {f"c{i}": PASS for i in range(1, 5)}
        assert [str(e.computed) for e in report.entries] == ["c2", "c3", "c4", "c1^-1"]

    def test_f1_genus_two(self):
        report = verify_family("F1", 2)
        assert report.verdicts() == {"b1": PASS, "b2": PASS, "b3": PASS, "b4": NEEDS_RULES}
        assert report.ok and report.needs_extended_rules
        missing = report.entries[3].missing
        assert missing.endomorphism == "A4" and missing.symbol == "b4"

    @pytest.mark.parametrize("g", range(2, 7))
    def test_all_genera(self, g):
        for family in ("F2", "F3"):
            report = verify_family(family, g)
            assert set(report.verdicts().values()) == {PASS}
        verdicts = verify_family("F1", g).verdicts()
        assert verdicts.pop(f"b{2 * g}") == NEEDS_RULES
        assert set(verdicts.values()) == {PASS}

    @pytest.mark.parametrize("g", range(2, 7))
    def test_extension_upgrades(self, g):
        report = verify_family("F1", g, {f"A{2 * g}": {f"b{2 * g}": f"b{2 * g + 1}"}})
        assert set(report.verdicts().values()) == {PASS}
        assert not report.needs_extended_rules

    def test_wrong_extension_fails(self):
        report = verify_family("F1", 2, {"A4": {"b4": "b4"}})
        assert report.verdicts()["b4"] == FAIL
        assert not report.ok

    @pytest.mark.parametrize(
        "ext",
        [{"A9": {"b1": "b1"}}, {"A4": {"z1": "b1"}}, {"A4": {"b4": "q"}}, {"A2": {"b1": "b1"}}],
    )
    def test_bad_extensions(self, ext):
        with pytest.raises(ValueError):
            verify_family("F1", 2, ext)

    def test_report_serialization(self):
        report = verify_family("F1", 2)
        data = report.to_dict()
        assert data["ok"] is True and data["needs_extended_rules"] is True
        assert data["entries"][3]["missing_rule"] == {"twist": "A4", "symbol": "b4", "factor": 3}
        text = report.to_text()
        assert text.splitlines()[0] == "F1 genus 2: A1 A2 A3 A4"
        assert "missing A4(b4)" in text


class TestRotationOrder:
    @pytest.mark.parametrize("g", range(2, 6))
    def test_f3_and_f2_are_literally_periodic(self, g):
        assert literal_rotation_order(make_tables("F3", g), 2 * g + 2) == 2 * g + 2
        assert literal_rotation_order(make_tables("F2", g), 4 * g) == 4 * g

    @pytest.mark.parametrize("g", range(2, 6))
    def test_f1_is_periodic_up_to_conjugation(self, g):
        pf = make_tables("F1", g)
        n = 4 * g + 2
        assert matrix_order(abelianized_matrix(pf), n) == n
        assert literal_rotation_order(pf, n) is None
        c = inner_conjugator(rotation_power(pf, n))
        assert c is not None and len(c) == 4 * g
        assert sorted(c.signed()) == sorted([(f"b{i}", s) for i in range(1, 2 * g + 1) for s in (1, -1)])

    def test_matrix_order_of_f3(self):
        pf = make_tables("F3", 3)
        assert matrix_order(abelianized_matrix(pf), 20) == 8
