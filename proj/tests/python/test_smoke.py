import pytest

import potgraphic as pg


def test_sequences():
    assert pg.normalize([1, 3, 2, 2]) == [3, 2, 2, 1]
    assert pg.is_graphic([3, 3, 2, 2])
    assert not pg.is_graphic([3, 3, 1, 1])
    assert pg.erdos_gallai_margins([3, 3, 1, 1])[1] == -2
    assert pg.layoff([2, 2, 2], 1) == [1, 1]
    assert pg.havel_hakimi_realize([3, 3, 1, 1]) is None
    assert pg.havel_hakimi_realize([3, 3, 3, 3]) == pg.complete(4)
    assert [len(pg.enumerate_graphic_sequences(n)) for n in (2, 3, 4)] == [2, 4, 11]


def test_errors_carry_codes():
    with pytest.raises(pg.Error) as info:
        pg.normalize([4, 1, 1])
    assert info.value.code == "EntryExceedsNMinus1"
    assert isinstance(info.value, ValueError)
    with pytest.raises(pg.Error):
        pg.sigma_formula(4, 2, 0, 26)


def test_graphs():
    g = pg.Graph(4, [(0, 1), (2, 3)])
    assert g.size == 2
    assert g == pg.matching(2)
    assert pg.degree_sequence(pg.extremal_construction(4, 8)) == [7, 7] + [2] * 6
    assert pg.contains_subgraph(pg.complete(4), pg.cycle_graph(4)) is not None
    assert pg.parse_graph(pg.format_graph(g)) == g


def test_potential():
    pattern = pg.build_removed_pattern(4, 1, 1)
    decision = pg.is_potentially_subgraph([7] + [3] * 7, pattern)
    assert decision.verdict
    assert pg.degree_sequence(decision.witness) == [7] + [3] * 7
    assert not pg.is_potentially_subgraph([3, 1, 1, 1], pg.matching(2))
    assert pg.is_potentially_clique_on_top([3, 3, 3, 3], 3)
    graph, embedding = pg.realization_with_pattern_on_top([2, 2, 2, 2], pg.cycle_graph(4))
    assert sorted(embedding) == [0, 1, 2, 3]
    assert pg.hypothesis_check("thm2.2", [3] * 8, 3)
    assert pg.conclusion_check("thm2.2", [3] * 8, 3)


def test_extremal():
    assert pg.sigma_formula(4, 1, 1, 26) == 100
    assert pg.lower_bound_sum(4, 8) == 28
    report = pg.brute_force_sigma(pg.cycle_graph(4), 4)
    assert report["threshold"] == 10
    assert report["extremal_sequences"] == ["3,2,2,1"]
    assert pg.brute_force_sigma(pg.matching(2), 5, threads=2)["threshold"] == 10
    assert pg.verify_lower_bound(4, 1, 1, 26)["passed"]
    assert pg.unique_realization_check([4, 4, 2, 2, 2])
    assert not pg.unique_realization_check([2] * 6)
    assert pg.special_sequence(4, 26) == [25] + [3] * 25
    assert pg.proof_path_check(pg.special_sequence(4, 26), 4)["branch"] == "special"
    samples = pg.sample_graphic_sequences(26, 100, 5, 1)
    assert samples == pg.sample_graphic_sequences(26, 100, 5, 1)
    assert all(sum(s) >= 100 and pg.is_graphic(s) for s in samples)
