import cmath
import math

import numpy as np
import pytest

from ringfourier import make_ring
from ringfourier.characters import (Frequency, character_value, enumerate_frequencies, pairing_matrix,
                                    trace_frequency, unit_roots)
from ringfourier.rings import NotTraceAdmissible, table_ring

SMALL = ["gf(2)", "gf(4)", "gf(5)", "zmod(4)", "zmod(6)", "prod(gf(2),zmod(4))", "mat(2,gf(2))"]


def char_matrix(R):
    W = pairing_matrix(R)
    return unit_roots(R.exponent)[W]


@pytest.mark.parametrize("spec", SMALL)
def test_orthogonality(spec):
    R = make_ring(spec)
    X = char_matrix(R)
    assert np.allclose(X @ X.conj().T, R.size * np.eye(R.size), atol=1e-9)


@pytest.mark.parametrize("spec", SMALL)
def test_characters_are_homomorphisms(spec):
    R = make_ring(spec)
    X = char_matrix(R)
    a = np.arange(R.size)
    for r in range(R.size):
        lhs = X[r][R.add_table]
        assert np.allclose(lhs, np.outer(X[r], X[r]), atol=1e-12)
    assert np.allclose(X[:, R.zero_index], 1)


def test_frequency_round_trip_and_string():
    R = make_ring("zmod(4)")
    seen = [str(f) for f in enumerate_frequencies(R, 2)]
    assert seen[0] == "0|0" and seen[-1] == "3|3" and len(set(seen)) == 16
    for i in range(16):
        f = Frequency.from_index(R, 2, i)
        assert f.index == i
        assert Frequency.parse(R, str(f)).index == i


def test_character_value_zmod():
    R = make_ring("zmod(5)")
    f = Frequency.parse(R, "2|3")
    for x in range(5):
        for y in range(5):
            want = cmath.exp(2j * math.pi * (2 * x + 3 * y) / 5)
            assert abs(character_value(f, (x, y)) - want) < 1e-12


def test_gf9_trace_is_y_plus_y_cubed():
    F = make_ring("gf(9)")
    y = np.arange(9)
    frob = F.add(y, F.mul(y, F.mul(y, y)))
    assert np.all(frob < 3)  # lands in the prime field
    assert np.array_equal(F.generating_functional(y), frob)


def test_trace_frequency_matrix_e11():
    R = make_ring("mat(2,gf(3))")
    E = R.unit_matrix(1, 1)
    f = trace_frequency(R, (E,))
    rng = np.random.default_rng(3)
    for x in rng.integers(0, R.size, size=40):
        m = R.matrix(int(x))
        want = cmath.exp(2j * math.pi * m[0][0] / 3)
        assert abs(character_value(f, (int(x),)) - want) < 1e-12


def test_trace_pairing_injective_on_roster_sample():
    for spec in ["gf(8)", "zmod(12)", "mat(2,gf(2))", "prod(gf(3),zmod(4))"]:
        R = make_ring(spec)
        blocks = {trace_frequency(R, (b,)).index for b in range(R.size)}
        assert len(blocks) == R.size


def test_table_rings_are_not_trace_admissible():
    R = make_ring("zmod(4)")
    T = table_ring("z4", R.add_table, R.mul_table, 0, 1)
    with pytest.raises(NotTraceAdmissible):
        trace_frequency(T, (1,))
