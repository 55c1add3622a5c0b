from __future__ import annotations

import math

import pytest

from dyncolor import bounds_report


def entry(report, entry_id):
    matches = [e for e in report["results"] if e["id"] == entry_id]
    assert len(matches) == 1
    return matches[0]


def test_report_lists_every_bound_once():
    rep = bounds_report(10, 10, 2)
    assert [e["id"] for e in rep["results"]] == [
        "sublist_degree",
        "list_plus_r_minus_1",
        "dynamic_plus_one",
        "almost_regular",
        "random_gnp",
        "triangle_free",
        "sparse_neighborhoods",
    ]
    assert rep["inputs"]["max_degree"] == 10
    assert rep["inputs"]["list_size"] is None


def test_validation():
    with pytest.raises(ValueError):
        bounds_report(10, 10, 1)
    with pytest.raises(ValueError):
        bounds_report(5, 10, 2)
    with pytest.raises(ValueError):
        bounds_report(10, 0, 2)
    with pytest.raises(ValueError):
        bounds_report(10, 10, 2, p=-0.1)


def test_sublist_degree_entry():
    rep = bounds_report(24, 24, 2, list_size=1, slack=1)
    e = entry(rep, "sublist_degree")
    want_lhs = (3 * math.log(24) + math.log(2) + 1) * 2
    assert e["condition_lhs"] == pytest.approx(want_lhs)
    assert e["applicable"] is (want_lhs <= 24)
    assert e["applicable"]
    assert e["bound"] == 1 + 1 + 2 - 2
    low = entry(bounds_report(10, 10, 2, list_size=1, slack=1), "sublist_degree")
    assert not low["applicable"]


def test_sublist_degree_slack_floor_note():
    rep = bounds_report(24, 24, 3, list_size=2, slack=1)
    e = entry(rep, "sublist_degree")
    assert not e["applicable"]
    assert "note" in e and "floor" in e["note"]


def test_sublist_degree_missing_inputs():
    e = entry(bounds_report(24, 24, 2), "sublist_degree")
    assert e["missing"] == ["list_size", "slack"]
    assert not e["applicable"] and e["bound"] is None


def test_list_plus_r_minus_1_entry():
    rep = bounds_report(1200, 1200, 3, list_size=5)
    e = entry(rep, "list_plus_r_minus_1")
    want_lhs = (4 * math.log(1200) + 2 * math.log(3) + 1) * 36
    assert e["condition_lhs"] == pytest.approx(want_lhs)
    assert e["applicable"] is (want_lhs <= 1200)
    assert e["applicable"]
    assert e["bound"] == 5 + 3 - 1
    sparse = entry(bounds_report(100, 100, 3, list_size=5), "list_plus_r_minus_1")
    assert not sparse["applicable"]


def test_dynamic_plus_one_entry():
    rep = bounds_report(300, 300, 2, list_size=10)
    e = entry(rep, "dynamic_plus_one")
    want_lhs = (3 * math.log(300) + 2) * 11
    assert e["condition_lhs"] == pytest.approx(want_lhs)
    assert e["applicable"] is (want_lhs <= 300)
    assert e["applicable"]
    assert e["bound"] == 11
    # the entry is r=2 only
    e3 = entry(bounds_report(300, 300, 3, list_size=10), "dynamic_plus_one")
    assert not e3["applicable"] and e3["condition_lhs"] is None
    assert e3["requires_r"] == 2


def test_almost_regular_entry():
    rep = bounds_report(10, 10, 2, list_size=90000)
    e = entry(rep, "almost_regular")
    assert e["degree_ratio"] == 1.0
    assert e["list_size_threshold"] == 6**4 * 2**6  # 82944 at r=2, ratio 1
    assert e["list_size_threshold"] == 82944
    assert e["applicable"]
    want_choice = math.ceil(3 * 1.0 * 2 * math.log(90000))
    assert e["slack_choice"] == want_choice
    assert e["bound"] == 90000 + want_choice
    small = entry(bounds_report(10, 10, 2, list_size=100), "almost_regular")
    assert not small["applicable"]
    assert small["slack_choice"] == math.ceil(6 * math.log(100))


def test_random_gnp_entry():
    e = entry(bounds_report(10, 5, 2, n=100, p=0.3), "random_gnp")
    assert e["applicable"]
    assert e["bound"] is None  # constant only known symbolically
    assert "C" in e["symbols"]
    assert not entry(bounds_report(10, 5, 2, n=100, p=0.6), "random_gnp")["applicable"]
    assert not entry(bounds_report(10, 5, 2, n=100, p=0.01), "random_gnp")["applicable"]
    assert entry(bounds_report(10, 5, 2), "random_gnp")["missing"] == ["n", "p"]


def test_triangle_free_entry():
    rep = bounds_report(43, 43, 2, list_size=7)
    e = entry(rep, "triangle_free")
    assert e["condition_lhs"] == pytest.approx(6 * math.log(43) + 2)
    assert e["applicable"]
    assert e["addend"] == pytest.approx(86.0)
    assert e["bound"] == pytest.approx(7 + 86.0)
    assert e["choosability_cap"] == pytest.approx(13 * 43 / math.log(43))
    # min degree too small for the hypothesis
    low = entry(bounds_report(43, 10, 2, list_size=7), "triangle_free")
    assert not low["applicable"]


def test_sparse_neighborhoods_entry():
    rep = bounds_report(100, 50, 2, neighborhood_sparsity=16, degree_ratio_cap=3)
    e = entry(rep, "sparse_neighborhoods")
    assert e["applicable"]  # ratio 2 <= cap 3
    want = 100 * math.log(100) / (50 * math.log(16))
    assert e["cofactor"] == pytest.approx(want)
    assert e["bound"] is None and "K'" in e["symbols"]
    tight = entry(
        bounds_report(100, 20, 2, neighborhood_sparsity=16, degree_ratio_cap=3),
        "sparse_neighborhoods",
    )
    assert not tight["applicable"]  # ratio 5 > cap 3
    missing = entry(bounds_report(100, 50, 2), "sparse_neighborhoods")
    assert missing["missing"] == ["neighborhood_sparsity", "degree_ratio_cap"]


def test_entries_are_json_ready():
    import json

    rep = bounds_report(
        24, 24, 2, list_size=3, slack=1, n=50, p=0.3,
        neighborhood_sparsity=9, degree_ratio_cap=2,
    )
    text = json.dumps(rep, sort_keys=True)
    assert json.loads(text) == rep
