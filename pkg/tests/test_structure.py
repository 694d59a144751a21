import json

import numpy as np
import pytest

from ringfourier import all_ideals, jacobson_radical, make_ring, quotient_ring, upper_triangular
from ringfourier.structure import (ideal_lattice_json, ideal_product, is_homomorphism, max_proper_ideal_size,
                                   principal_ideal, ring_isomorphism, zero_column_ideal)
from ringfourier.verification import ROSTER


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
def test_zmod_ideals_are_divisor_subgroups(n):
    ideals = all_ideals(f"zmod({n})", "left")
    assert sorted(I.size for I in ideals) == sorted(n // k for k in divisors(n))


@pytest.mark.parametrize("q", [2, 3])
def test_matrix_ideal_lattice(q):
    R = make_ring(f"mat(2,gf({q}))")
    left = all_ideals(R, "left")
    # zero, R, and one column-space ideal per line of F_q^2
    assert sorted(I.size for I in left) == [1] + [q**2] * (q + 1) + [q**4]
    assert len(all_ideals(R, "two-sided")) == 2
    for I in left:
        assert I.is_closed("left")


def test_max_proper_left_ideal_mat2_gf3():
    assert max_proper_ideal_size("mat(2,gf(3))", "left") == 9


@pytest.mark.parametrize("spec,n", [("mat(2,gf(2))", 2), ("mat(2,gf(3))", 2), ("mat(3,gf(2))", 3)])
def test_zero_column_ideal(spec, n):
    R = make_ring(spec)
    I = zero_column_ideal(R)
    assert I.size == R.base.size ** (n * n - n)
    if R.size <= 4096:
        assert I.is_closed("left") and not I.is_closed("right") and I.proper


@pytest.mark.parametrize("spec,J", [
    ("zmod(4)", 2), ("zmod(8)", 4), ("zmod(9)", 3), ("zmod(12)", 2), ("gf(9)", 1), ("mat(2,gf(2))", 1),
    ("prod(gf(2),zmod(9))", 3), ("prod(gf(2),zmod(4))", 2),
])
def test_radical_sizes(spec, J):
    rad = jacobson_radical(spec)
    assert rad.size == J
    assert rad.quotient.size * J == make_ring(spec).size
    if J > 1:
        assert is_homomorphism(rad.ring, rad.quotient, rad.projection)


@pytest.mark.parametrize("spec", ROSTER)
def test_radical_is_nilpotent(spec):
    # Nakayama: a nonzero radical of a finite ring has J^2 strictly smaller than J
    J = jacobson_radical(spec).radical
    if J.size > 1:
        assert ideal_product(J, J).size < J.size
    P = J
    for _ in range(8):
        P = ideal_product(P, J)
    assert P.size == 1


def test_upper_triangular_quotient():
    T = upper_triangular(2, "gf(2)")
    rad = jacobson_radical(T)
    assert rad.size == 2
    assert ring_isomorphism(rad.quotient, make_ring("prod(gf(2),gf(2))")) is not None
    assert ring_isomorphism(rad.quotient, make_ring("zmod(4)")) is None


def test_quotient_of_zmod12():
    R = make_ring("zmod(12)")
    I = principal_ideal(R, 4, "two-sided")
    Q, proj = quotient_ring(R, I)
    assert Q.size == 4
    assert is_homomorphism(R, Q, proj)
    assert ring_isomorphism(Q, make_ring("zmod(4)")) is not None


def test_quotient_rejects_one_sided():
    R = make_ring("mat(2,gf(2))")
    with pytest.raises(ValueError):
        quotient_ring(R, zero_column_ideal(R))


def test_lattice_json():
    data = json.loads(ideal_lattice_json(make_ring("zmod(4)")))
    assert [(d["side"], d["size"], d["proper"]) for d in data] == [
        ("left", 1, True), ("left", 2, True), ("left", 4, False),
        ("right", 1, True), ("right", 2, True), ("right", 4, False)]


def test_principal_left_ideal_of_e11():
    R = make_ring("mat(2,gf(3))")
    I = principal_ideal(R, R.unit_matrix(1, 1), "left")
    # R E11 = matrices supported on the first column
    e = R.entries(I.elements)
    assert I.size == 9 and np.all(e[:, [1, 3]] == 0)
