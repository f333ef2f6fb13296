import itertools

import pytest

import hs3


def test_triangle():
    g = hs3.Hypergraph([[1, 2], [2, 3], [1, 3]])
    assert not hs3.solve(g, 1).decision
    r = hs3.solve(g, 2)
    assert r.decision
    assert len(r.certificate) == 2
    assert hs3.verify_hitting(g, r.certificate)
    assert hs3.oracle_min(g) == 2
    assert hs3.solve_minimum(g)[0] == 2


def test_graph_operations():
    g = hs3.Hypergraph([[1, 2, 3], [3, 4]])
    assert g.plus(3).edges == []
    assert g.minus(3).edges == [[1, 2], [4]]
    assert g.components() == [[1, 2, 3, 4]]
    assert hs3.Hypergraph([[1, 2], [2, 3], [4, 5]]).stats(1) == {"d": 1, "d2": 1, "d3": 0, "D2": 2, "I": 0}
    assert hs3.Hypergraph([[1, 2], [2, 3], [4, 5]]).two_section() == (3, 2, 2)


def test_errors():
    with pytest.raises(ValueError):
        hs3.Hypergraph([[1, 1]])
    with pytest.raises(hs3.ParseError):
        hs3.parse_instance("p hs3 3 1 1\ne 1 2 2\n")
    with pytest.raises(hs3.InvariantError):
        hs3.Hypergraph([[1]]).minus(1)
    with pytest.raises(ValueError):
        hs3.branching_number([1.0, 0.0])


def test_round_trip_and_generator():
    g, k = hs3.generate(8, 12, p2=0.5, seed=4)
    assert k == 4
    text = hs3.serialize_instance(g, k)
    back, kb = hs3.parse_instance(text)
    assert back == g and kb == k
    k4, _ = hs3.generate(4, 6, p2=1.0, seed=1)
    assert k4.edges == [list(p) for p in itertools.combinations(range(1, 5), 2)]


def test_agrees_with_oracle():
    for seed in range(1, 40):
        g, _ = hs3.generate(9, 14, p2=0.5, seed=seed)
        opt = hs3.oracle_min(g)
        for k in range(opt + 2):
            assert hs3.solve(g, k).decision == (k >= opt)


def test_measure():
    t = hs3.PsiTable.bundled_psi4()
    assert t.psi(4, 3) == pytest.approx(0.9087)
    assert t.psi_star(2) == pytest.approx(0.4706)
    assert hs3.check_properties(t) == []
    assert hs3.branching_number([1.0, 1.0]) == pytest.approx(2.0, abs=1e-9)
    assert hs3.verify_rule(t, "B3")["max"] == pytest.approx(2.0409, abs=1e-3)
    assert hs3.verify_rule(t, "B2")["max"] == pytest.approx(2.0, abs=1e-6)
    assert not hs3.verify_rule(hs3.PsiTable(5), "B4")["applicable"]
    assert hs3.PsiTable.parse(t.serialize()).psi(7, 6) == pytest.approx(1.316)


def test_fuzz():
    s = hs3.run_fuzz(count=40, seed=3)
    assert s["ok"] and s["cases"] == 40
