import io

import numpy as np
import pytest

from ringfourier import Explicit, Graph, Hamming, evaluate, make_ring, paraboloid, parse_poly, variety_points
from ringfourier.ncpoly import PolynomialSyntaxError, random_polynomial, read_points_csv
from ringfourier.verification import ROSTER


@pytest.mark.parametrize("text,words", [
    ("x1^2 + x2^2", {(1, (1, 1)), (1, (2, 2))}),
    ("x1*x2 - x2*x1", {(1, (1, 2)), (-1, (2, 1))}),
    ("3*x1*x2*x1 + x1", {(3, (1, 2, 1)), (1, (1,))}),
    ("x1 + x1", {(2, (1,))}),
])
def test_parse(text, words):
    f = parse_poly(text)
    assert set(f.words) == words


@pytest.mark.parametrize("bad", ["x1 +", "x0", "2", "x1 + 4", "x1^", "(x1"])
def test_parse_errors(bad):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(bad)


def test_string_round_trip():
    rng = np.random.default_rng(0)
    for _ in range(30):
        f = random_polynomial(rng, 3)
        assert parse_poly(str(f), f.nvars).words == f.words


def test_noncommutative_evaluation():
    R = make_ring("mat(2,gf(3))")
    E12, E21 = R.unit_matrix(1, 2), R.unit_matrix(2, 1)
    f = parse_poly("x1*x2")
    g = parse_poly("x2*x1")
    assert evaluate(f, R, (E12, E21)) == R.unit_matrix(1, 1)
    assert evaluate(g, R, (E12, E21)) == R.unit_matrix(2, 2)
    c = parse_poly("x1*x2 - x2*x1")
    assert evaluate(c, R, (E12, E21)) != R.zero()


def test_paraboloid_matches_direct_evaluation():
    R = make_ring("zmod(9)")
    V = variety_points(Graph(paraboloid(3), 2), R, 3)
    pts = V.elements()
    assert np.all(pts[:, 2] == (pts[:, 0] ** 2 + pts[:, 1] ** 2 + 2) % 9)


@pytest.mark.parametrize("spec", ROSTER)
def test_point_counts(spec):
    R = make_ring(spec)
    for d in (2, 3):
        assert len(variety_points(Graph(paraboloid(d), 1), R, d)) == R.size ** (d - 1)
        H = variety_points(Hamming(1), R, d)
        assert len(H) == R.unit_count() ** (d - 1)


def test_hamming_points_multiply_to_j():
    R = make_ring("zmod(9)")
    e = variety_points(Hamming(2), R, 3).elements()
    assert np.all(e[:, 0] * e[:, 1] * e[:, 2] % 9 == 2)
    assert len(variety_points(Hamming(1), "zmod(6)", 3)) == 4


def test_hamming_rejects_non_units():
    with pytest.raises(ValueError):
        variety_points(Hamming(2), make_ring("zmod(4)"), 2)


def test_csv_round_trip():
    R = make_ring("gf(5)")
    V = variety_points(Explicit([(1, 2), (0, 0), (4, 3)]), R, 2)
    buf = io.StringIO()
    V.to_csv(buf)
    buf.seek(0)
    W = read_points_csv(buf)
    assert W.d == 2 and str(W.ring.spec) == "gf(5)"
    assert np.array_equal(W.indices, V.indices)
    assert (1, 2) in W and (2, 1) not in W
