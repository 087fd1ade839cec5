from fractions import Fraction

import ferrers_lab as fl


def c4():
    return fl.BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])


def test_partitions():
    assert fl.conjugate([3, 3, 2, 1]) == [4, 3, 2]
    assert fl.majorized_by([2, 2], [3, 1])
    assert not fl.majorized_by([3, 1], [2, 2])
    assert fl.is_bigraphic([2, 2], [2, 2])
    assert not fl.is_bigraphic([3], [1, 1])


def test_classify_c4():
    g = c4()
    assert fl.spanning_tree_count(g) == 4
    assert fl.ferrers_invariant(g) == Fraction(4)
    r = fl.classify(g)
    assert r["verdict"] == "Good"
    assert r["T"] == 4
    assert r["F"] == Fraction(4)


def test_ferrers_recognition():
    g = fl.ferrers_from_partition([3, 3, 2, 1])
    assert fl.is_ferrers(g)
    assert fl.spanning_tree_count(g) == 36
    assert fl.ferrers_invariant(g) == Fraction(36)


def test_conjecture2_counterexample():
    r = fl.check_conjecture2([2, 2], [2, 1, 1], [2, 2, 2, 2])
    assert r["status"] == "Violated"
    assert r["lhs"] == Fraction(16, 5)
    assert r["rhs"] == Fraction(4, 3)


def test_enumeration_counts():
    counts = [len(fl.enumerate_connected(n)) for n in range(2, 7)]
    assert counts == [1, 1, 3, 5, 17]


def test_spectral():
    assert abs(fl.spectral_tree_count(c4()) - 4.0) < 1e-6
    lam = fl.laplacian_spectrum(c4())
    assert abs(lam[0] - 4.0) < 1e-9 and abs(lam[-1]) < 1e-9


def test_verify_small():
    r = fl.verify_conjecture1(5, False)
    assert r["classes"] == 10
    assert r["bad_count"] == 0
