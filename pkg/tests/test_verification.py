import math

import numpy as np
import pytest

from ringfourier import Graph, make_ring, paraboloid, variety_points
from ringfourier.ncpoly import PointSet
from ringfourier.verification import (check_density, check_matrix_growth, check_hyperbola_ideal_bound, check_product_formula,
                                      difference_count, gauss_sum, intro_sum, nu_simplex, nu_simplex_sum,
                                      run_suite)


def test_difference_count_full_space():
    R = make_ring("zmod(3)")
    V = variety_points(Graph(paraboloid(2), 1), R, 2)
    E = PointSet(R, 2, np.arange(9), "all")
    rep = difference_count(E, V)
    assert rep.n == 27 == len(E) * len(V)
    assert rep.discrepancy == 0


def test_difference_count_brute_force():
    R = make_ring("zmod(4)")
    V = variety_points(Graph(paraboloid(2), 1), R, 2)
    rng = np.random.default_rng(2)
    E = np.unique(rng.integers(0, 16, size=7))
    pts = [(int(i) // 4, int(i) % 4) for i in E]
    vset = {(int(i) // 4, int(i) % 4) for i in V.indices}
    want = sum(((x[0] - y[0]) % 4, (x[1] - y[1]) % 4) in vset for x in pts for y in pts)
    assert difference_count(E, V).n == want


def test_density_vacuous_is_skipped():
    rec = check_density("zmod(4)", trials=5)
    assert rec.skipped and rec.passed


def test_density_runs_on_fields():
    rec = check_density("gf(7)", trials=20, seed=3)
    assert rec.passed and not rec.skipped


def test_product_formula_zmod6():
    rec = check_product_formula("gf(2)", "gf(3)", d=2, R="zmod(6)")
    assert rec.passed and rec.deviation < 1e-9


def test_hyperbola_witness():
    rec = check_hyperbola_ideal_bound("zmod(4)", 4)
    assert rec.passed


def test_plain_gauss_sum():
    for p in (5, 7, 13):
        g = gauss_sum(f"gf({p})", "plain")
        assert abs(g) == pytest.approx(math.sqrt(p))
    with pytest.raises(ValueError):
        gauss_sum("zmod(4)")


def test_intro_sum_domain():
    assert intro_sum(7, 2, 3).passed
    with pytest.raises(ValueError):
        intro_sum(2, 2, 3)
    with pytest.raises(ValueError):
        intro_sum(3, 2, 3)


def test_nu_simplex():
    assert [nu_simplex([2] * m) for m in range(1, 7)] == [1] * 6
    assert nu_simplex([3, 4, 5]) == 24
    assert nu_simplex_sum([1, 1]) == 0
    with pytest.raises(ValueError):
        nu_simplex([0, 2])


@pytest.mark.parametrize("name", ["gauss", "witnesses", "hamming", "counts", "intro", "product", "plancherel",
                                  "jacobson", "hyperbola", "nu", "contrast"])
def test_quick_suites_pass(name):
    recs = run_suite(name, seed=0)
    assert recs
    bad = [(r.name, r.rings, r.measured) for r in recs if not r.passed and not r.skipped]
    assert not bad


def test_matrix_growth_suite_monotone():
    rec = check_matrix_growth()
    assert rec.name == "matrix_growth" and rec.passed
    r = rec.measured["ratios"]
    assert r == pytest.approx([math.sqrt(q) for q in (3, 5, 7, 9, 11)], rel=1e-9)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_record_serialization():
    rec = run_suite("intro")[0]
    d = rec.to_dict()
    assert "runtime" not in d and d["passed"] is True
    assert "runtime" in rec.to_dict(timings=True)
