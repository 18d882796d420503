"""Smoke tests for the python bindings."""

import pytest

import splitsys as ss


def test_families_and_counts():
    net = ss.example_network5()
    assert net.n == 5
    assert net.split_count() == 10
    assert net.nontrivial_count() == 5
    assert ss.maximal_circular(6).split_count() == 15
    assert ss.witness_id8().split_count() == 25


def test_round_trip():
    sys = ss.half_grid(7)
    again = ss.SplitSystem.from_text(sys.to_text())
    assert again == sys
    assert again.ground_labels[-1] == "r"


def test_injectivity_both_routes():
    net = ss.example_network5()
    assert ss.is_injective(net)
    assert ss.is_injective(net, method="bruteforce")

    tree = ss.example_tree5()
    assert not ss.is_injective(tree)
    first, second = ss.injectivity_collision(tree)
    assert len(first) == 3 and len(second) == 3
    assert first != second


def test_dicing_triple():
    assert ss.dices(ss.maximal_circular(6)) == (True, True, True)
    assert ss.dices(ss.bipartite_pairs6()) == (True, True, False)


def test_dimension_and_restriction():
    mc = ss.maximal_circular(8)
    assert mc.dimension() == 4
    sub = mc.restrict(["1", "2", "3", "4", "5"])
    assert sub.n == 5
    assert sub.dimension() == 2


def test_rooted_and_surjective():
    hg = ss.half_grid(6)
    assert ss.is_rooted_injective(hg, "r")
    assert hg.dimension() == 2
    assert ss.is_surjective(ss.maximal_circular(4))
    assert not ss.is_surjective(ss.maximal_circular(5))
    assert ss.is_bijective(ss.maximal_circular(4))


def test_median_assignments():
    net = ss.example_network5()
    assignments = ss.median(net, ["1", "2", "3"])
    assert len(assignments) == net.split_count()
    parts = dict(assignments)
    assert parts["1,2|3,4,5"] == ["1", "2"]


def test_buneman_summary_and_dot():
    info = ss.buneman_summary(ss.example_network5())
    assert info["vertices"] == 16
    assert info["internal"] == 11
    assert info["median_graph"] and info["partial_cube"]
    dot = ss.buneman_dot(ss.example_tree5())
    assert dot.startswith("graph buneman {")


def test_budget_error():
    with pytest.raises(ss.ResourceLimitError):
        ss.buneman_summary(ss.maximal_circular(6), vertex_budget=5)


def test_parse_error():
    with pytest.raises(ss.FormatError):
        ss.SplitSystem.from_text("ground: 1,2,3\n1,2,3|\n")


def test_searches():
    assert ss.id_search(5)["value"] == 2
    report = ss.id_search(6)
    assert report["value"] == 3 and report["method"] == "exhaustive"
    assert ss.id2_search(5)["value"] == 2
    assert ss.idr_search(9)["value"] == 2
    wide = ss.id2_search(9)
    assert wide["exact"] is False and wide["value"] == (4, 6)


def test_scan():
    result = ss.scan_bijective(4)
    assert result["examined"] == 8
    assert len(result["found"]) == 3


def test_random_reproducible():
    a = ss.random_system(6, 42, 0.3)
    b = ss.random_system(6, 42, 0.3)
    assert a == b
