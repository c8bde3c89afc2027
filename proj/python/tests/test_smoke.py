import json
import math

import pytest

import dualdiam as dd


def test_convex_values():
    for n in range(4, 14):
        d, t = dd.min_dt(dd.regular_polygon(n))
        assert d == dd.convex_min_value(n)
        assert t.diameter() == d
        assert t.violations() == []
    d, t = dd.max_dt(dd.regular_polygon(9))
    assert d == 6


def test_triangulation_object():
    hexagon = dd.regular_polygon(6)
    t = dd.polygon_triangulation(hexagon, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)])
    assert len(t) == 4
    assert t.is_polygon
    assert t.diameter() == 3
    assert t.ears() == 2
    rep = t.report()
    assert rep["diameter"] == 3 and rep["ears"] == 2
    assert json.loads(t.to_json()) == {"triangles": [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5]]}
    assert "<svg" in t.svg()
    assert t.dot().startswith("graph dual")


def test_oracle_matches_dp():
    poly = dd.random_simple_polygon(10, 3)
    st = dd.oracle_stats(poly)
    assert st["min_diameter"] == dd.min_dt(poly)[0]
    assert st["max_diameter"] == dd.max_dt(poly)[0]
    assert st["min_ears"] == dd.extreme_ears(poly, "min")[0]
    assert st["max_ears"] == dd.extreme_ears(poly, "max")[0]
    assert sum(v[0] for v in st["per_ear_count"].values()) == st["triangulations"]


def test_gadgets():
    g = dd.gen_ears_gadget(2)
    assert all(c["holds"] for c in g["claims"])
    assert g["references"]["A"].diameter() == 10
    assert g["references"]["B"].diameter() == 7
    c = dd.gen_concat_gadget(2, 2)
    assert c["references"]["MAXE"].ears() == 8
    m = dd.gen_maxlog_polygon(2)
    assert len(m["polygon"]) == 30


def test_pointsets():
    pts = dd.random_pointset(64, 1)
    d, t, pockets = dd.pointset_min_dt(pts)
    assert t.violations() == []
    assert d <= 4 * math.log2(64) + 6
    assert pockets["max_distance"] <= pockets["bound"]
    d, t, hull = dd.pointset_max_dt(pts)
    assert d >= math.sqrt(61)
    assert t.report()["ears"] is None
    d, t, relaxed = dd.zigzag(dd.random_pointset(14, 2))
    assert t.violations() == []


def test_monotone_and_subsets():
    assert dd.longest_monotone_subsequence([3, 1, 2]) == ("inc", [1, 2])
    assert len(dd.max_convex_subset(dd.regular_polygon(7))) == 7


def test_errors_carry_kind():
    with pytest.raises(dd.DualDiamError) as err:
        dd.min_dt([(0, 0), (2, 2), (2, 0), (0, 2)])
    assert err.value.kind == "invalid-polygon"
    with pytest.raises(dd.DualDiamError) as err:
        dd.parse_polygon('{"polygon": [[0,0]')
    assert err.value.kind == "parse"
    with pytest.raises(dd.DualDiamError):
        dd.oracle_stats(dd.regular_polygon(20))


def test_round_trip():
    poly = dd.random_simple_polygon(12, 5)
    text = dd.serialize_polygon(poly)
    assert dd.parse_polygon(text) == poly
    assert dd.serialize_polygon(dd.parse_polygon(text)) == text
