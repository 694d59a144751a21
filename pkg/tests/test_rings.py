import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringfourier import make_ring, parse_ring_spec, upper_triangular
from ringfourier.rings import RingSpecError, is_irreducible, smallest_irreducible
from ringfourier.verification import ROSTER


@pytest.mark.parametrize("text,size", [
    ("zmod(12)", 12), ("gf(9)", 9), ("gf(2,3)", 8), ("mat(2,gf(3))", 81),
    ("prod(gf(2),zmod(9))", 18), (" MAT( 2 , ZMOD(4) ) ", 4**4),
])
def test_parse_sizes(text, size):
    assert make_ring(text).size == size


def test_parse_round_trip():
    for spec in ROSTER:
        assert str(parse_ring_spec(spec)) == spec


@pytest.mark.parametrize("bad", ["gf(6)", "zmod(1)", "prod(gf(2))", "mat(2)", "foo(3)", "gf(4", "zmod(4) x"])
def test_parse_errors(bad):
    with pytest.raises(RingSpecError):
        parse_ring_spec(bad)


def test_smallest_irreducible_against_root_search():
    # degree 2 and 3 polynomials are irreducible iff rootless
    for p in (2, 3, 5):
        for k in (2, 3):
            m = smallest_irreducible(p, k)
            assert all(sum(c * x**i for i, c in enumerate(m)) % p for x in range(p))
            for tail in itertools.product(range(p), repeat=k):
                poly = tail + (1,)
                rootless = all(sum(c * x**i for i, c in enumerate(poly)) % p for x in range(p))
                assert is_irreducible(poly, p) == rootless


def test_gf4_multiplication():
    F = make_ring("gf(4)")
    t = F.element(2)  # coordinates (1, 0): the class of t
    assert (t * t).index == 3  # t^2 = t + 1
    assert (t * t * t).index == F.one_index


def test_zmod6_units():
    R = make_ring("zmod(6)")
    assert R.unit_indices().tolist() == [1, 5]
    assert not R.is_field()


def test_gl2_f2_order():
    R = make_ring("mat(2,gf(2))")
    dets = [(a * d - b * c) % 2 for a, b, c, d in itertools.product(range(2), repeat=4)]
    assert R.unit_count() == sum(dets) == 6
    assert not R.is_commutative()


@pytest.mark.parametrize("spec", ROSTER)
def test_axioms(spec):
    R = make_ring(spec)
    rng = np.random.default_rng(1)
    a, b, c = rng.integers(0, R.size, size=(3, 400))
    assert np.array_equal(R.add(a, b), R.add(b, a))
    assert np.array_equal(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)))
    assert np.array_equal(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)))
    assert np.array_equal(R.mul(R.add(a, b), c), R.add(R.mul(a, c), R.mul(b, c)))
    assert np.array_equal(R.mul(a, R.one_index), a)
    assert np.all(R.add(a, R.neg(a)) == R.zero_index)


@pytest.mark.parametrize("spec", ROSTER)
def test_coordinates_are_additive(spec):
    R = make_ring(spec)
    f = np.array(R.factors)
    x = np.arange(R.size)
    assert np.array_equal(R.from_coords(R.coords(x)), x)
    y = (x * 7 + 3) % R.size
    assert np.array_equal(R.coords(R.add(x, y)), (R.coords(x) + R.coords(y)) % f)


@pytest.mark.parametrize("spec", ROSTER)
def test_characteristic_and_exponent(spec):
    R = make_ring(spec)
    assert R.integer_image(R.characteristic).index == R.zero_index
    assert all(R.integer_image(k).index != R.zero_index for k in range(1, R.characteristic))
    assert R.exponent % R.characteristic == 0
    assert math.prod(R.factors) == R.size


def test_unit_count_multiplies_over_products():
    for a, b in [("gf(2)", "zmod(9)"), ("zmod(4)", "gf(3)"), ("gf(4)", "mat(2,gf(2))")]:
        assert make_ring(f"prod({a},{b})").unit_count() == make_ring(a).unit_count() * make_ring(b).unit_count()


def test_upper_triangular():
    T = upper_triangular(2, "gf(2)")
    assert T.size == 8
    assert T.unit_count() == 2


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(-50, 50))
def test_integer_image_periodic(k, j):
    R = make_ring("zmod(12)")
    assert R.integer_image(k).index == R.integer_image(k + 12 * j).index == k % 12


def test_mixed_ring_operands_rejected():
    a = make_ring("gf(5)").one()
    b = make_ring("zmod(5)").one()
    with pytest.raises(ValueError):
        a + b
