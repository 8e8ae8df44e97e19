import json

import pytest

import covercraft as cc


def test_surface_arithmetic():
    f2 = cc.Surface.scroll(2, 3)
    c0 = cc.DivisorClass(1, 0)
    assert f2.intersection_number(c0, c0) == -2
    assert f2.degree() == 4
    assert f2.hyperplane_class() == cc.DivisorClass(1, 3)
    assert f2.canonical_class() == cc.DivisorClass(-2, -4)

    p2 = cc.Surface.p2()
    assert p2.cohomology(cc.DivisorClass(2, 0)).h0 == 6

    with pytest.raises(cc.CovercraftError):
        cc.Surface.scroll(3, 2)  # m < e+1


def test_cohomology_matches_oracle():
    for e in range(3):
        w = cc.Surface.scroll(e, e + 1)
        for a in range(-5, 6):
            for b in range(-5, 6):
                d = cc.DivisorClass(a, b)
                assert w.cohomology(d).h0 == cc.section_count_oracle(w, d)


def test_classification():
    cases = cc.classify_scroll(0, 3, cc.GaloisGroup.Z2xZ2)
    assert [c.label for c in cases] == ["A.2.1", "A.2.2", "A.2.3", "A.2.4"]
    by_label = {c.label: c for c in cases}
    assert by_label["A.2.2"].invariants["q"] == 3
    assert by_label["A.2.3"].invariants["q"] == 6
    assert by_label["A.2.1"].candidate.D1 == cc.DivisorClass(2, 8)

    p2_cases = cc.classify_p2(cc.GaloisGroup.Z4)
    assert len(p2_cases) == 1
    assert p2_cases[0].label == "B.1"
    assert p2_cases[0].invariants["generic_A1"] == 8

    w = cc.Surface.scroll(1, 2)
    assert cc.diff_report(cc.classify_scroll(1, 2, cc.GaloisGroup.Z4), w, cc.GaloisGroup.Z4) == ""


def test_candidates():
    f0 = cc.Surface.scroll(0, 1)
    cand = cc.make_candidate(f0, cc.GaloisGroup.Z2xZ2, cc.DivisorClass(2, 1), cc.DivisorClass(1, 2))
    assert cand.D1 == cc.DivisorClass(2, 4)
    assert cc.cover_canonical_class(cand) == f0.hyperplane_class()
    assert cc.irregularity(cand) == 0
    inv = cc.invariant_set(cand)
    assert inv["p_g"] == 4 and inv["K2"] == 8

    with pytest.raises(cc.CovercraftError):
        cc.make_candidate(f0, cc.GaloisGroup.Z4, cc.DivisorClass(1, 1), cc.DivisorClass(1, 1))


def test_nonexistence():
    assert cc.check_simple_cyclic_nonexistence(8, 4, 12) == []
    cases, witness = cc.classify_veronese()
    assert cases == []
    assert witness["required_degree"] == 5
    assert not witness["solvable"]
    assert cc.z4_no_simple_cyclic_property(3, 8)


def test_render_json():
    cases = cc.classify_scroll(0, 1, cc.GaloisGroup.Z4)
    rows = json.loads(cc.render_json(cases))
    assert [r["label"] for r in rows] == ["B.2.1", "B.2.2", "B.2.3", "Thm3.6-case2"]
    by_label = {r["label"]: r for r in rows}
    assert by_label["B.2.3"]["swap_duplicate_of"] == "B.2.1"
    assert by_label["B.2.1"]["D1"] == "(0,3)"
    assert all(r["source"] for r in rows)
