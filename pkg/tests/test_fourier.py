import cmath
import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringfourier import (BudgetExceeded, Explicit, Graph, Hamming, make_ring, paraboloid, parse_poly,
                         probe_frequency, salem, spectrum_direct, spectrum_fft, variety_points)
from ringfourier.characters import Frequency, trace_frequency
from ringfourier.fourier import graph_spectrum, salem_lower_bound, trivial_frequency_bound
from ringfourier._backend import set_threads

SQ2 = math.sqrt(2)


def parab(d):
    return Graph(paraboloid(d), 0)


def test_gf3_spectrum_against_definition():
    R = make_ring("gf(3)")
    V = variety_points(parab(2), R, 2)
    spec = spectrum_fft(V)
    for a in range(3):
        for b in range(3):
            want = sum(cmath.exp(2j * math.pi * (a * x + b * (x * x % 3)) / 3) for x in range(3)) / 9
            assert abs(spec.coeffs[a * 3 + b] - want) < 1e-12


@pytest.mark.parametrize("spec,d,C", [
    ("gf(3)", 2, 1.0), ("gf(7)", 3, 1.0), ("gf(2)", 2, SQ2), ("gf(4)", 2, 2.0), ("gf(8)", 2, 2 * SQ2),
    ("gf(16)", 2, 4.0), ("zmod(4)", 2, 2.0), ("zmod(6)", 2, math.sqrt(6)), ("zmod(9)", 2, math.sqrt(3)),
    ("mat(2,gf(2))", 2, 4.0), ("mat(2,gf(3))", 2, 3.0), ("zmod(4)", 3, 4.0),
])
def test_salem_constants(spec, d, C):
    assert salem(parab(d), spec, d).C == pytest.approx(C, abs=1e-9)


def test_argmax_tie_break():
    rep = salem(parab(2), "zmod(4)", 2)
    assert rep.argmax == "2|2"
    assert not rep.lower_bound


@pytest.mark.parametrize("spec,d,poly", [
    ("zmod(4)", 3, "x1*x2 + 3*x2^2"), ("mat(2,gf(2))", 2, "x1^3 + x1"), ("prod(gf(2),zmod(4))", 2, "2*x1^2"),
    ("gf(9)", 3, "x1*x2*x1 - x2"),
])
def test_methods_agree(spec, d, poly):
    f = parse_poly(poly)
    V = variety_points(Graph(f, 1), spec, d)
    a, b, g = spectrum_direct(V), spectrum_fft(V), graph_spectrum(f, 1, spec, d)
    assert np.abs(a.coeffs - b.coeffs).max() < 1e-9
    assert np.abs(a.coeffs - g.coeffs).max() < 1e-9
    for s in (a, b, g):
        assert s.parseval_error() < 1e-9


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["gf(5)", "zmod(4)", "zmod(6)", "gf(4)"]), st.integers(1, 2**31))
def test_parseval_and_plancherel_floor_random_sets(spec, seed):
    R = make_ring(spec)
    rng = np.random.default_rng(seed)
    total = R.size**2
    k = int(rng.integers(1, total))
    V = variety_points(Explicit([tuple(p) for p in rng.integers(0, R.size, size=(k, 2))]), R, 2)
    s = spectrum_fft(V)
    assert s.parseval_error() < 1e-9
    assert s.coeffs[0] == pytest.approx(len(V) / total)
    from ringfourier.fourier import salem_constant
    assert salem_constant(s).C >= trivial_frequency_bound(len(V), total) - 1e-9


@pytest.mark.parametrize("spec", ["gf(5)", "zmod(8)", "mat(2,gf(2))"])
def test_translation_preserves_moduli(spec):
    base = graph_spectrum(paraboloid(2), 0, spec, 2).moduli
    for c in (1, 2, 5):
        assert np.allclose(graph_spectrum(paraboloid(2), c, spec, 2).moduli, base, atol=1e-12)


def test_probe_matches_full_spectrum(backend):
    R = make_ring("mat(2,gf(3))")
    full = graph_spectrum(paraboloid(2), 1, R, 2)
    rng = np.random.default_rng(5)
    for idx in rng.integers(0, R.size**2, size=6):
        assert abs(probe_frequency(paraboloid(2), 1, R, 2, int(idx)) - full.coeffs[idx]) < 1e-12
    E = R.unit_matrix(1, 1)
    z = probe_frequency(paraboloid(2), 0, R, 2, trace_frequency(R, (E, E)))
    assert abs(z) * 81**2 / 9 == pytest.approx(math.sqrt(3), rel=1e-9)


def test_probe_on_non_matrix_ring(backend):
    R = make_ring("prod(gf(2),zmod(9))")
    f = parse_poly("x1^2 + 2*x1*x2")
    full = graph_spectrum(f, 0, R, 3)
    for idx in (1, 17, 500, 5000):
        assert abs(probe_frequency(f, 0, R, 3, idx) - full.coeffs[idx]) < 1e-12


def test_lower_bound_report():
    R = make_ring("mat(2,gf(3))")
    rep = salem_lower_bound(paraboloid(2), 0, R, 2, [trace_frequency(R, (R.unit_matrix(1, 1),) * 2)])
    assert rep.lower_bound and rep.method == "probe"
    assert rep.C <= salem(parab(2), R, 2).C + 1e-9


def test_hamming_spectrum_symmetric_under_coordinate_swaps():
    s = spectrum_fft(variety_points(Hamming(1), "gf(5)", 3)).coeffs.reshape(5, 5, 5)
    assert np.allclose(s, s.transpose(1, 0, 2), atol=1e-12)
    assert np.allclose(s, s.transpose(2, 1, 0), atol=1e-12)


def test_bit_identical_across_backends_and_threads():
    outs = []
    for backend in ("numba", "numpy"):
        from ringfourier import use_backend
        with use_backend(backend):
            for t in (1, 2):
                set_threads(t)
                outs.append(graph_spectrum(parse_poly("x1*x2 + x2^2"), 2, "zmod(6)", 3).coeffs.tobytes())
    set_threads(64)
    assert len(set(outs)) == 1


def test_budget(monkeypatch):
    monkeypatch.setenv("RINGFOURIER_BUDGET", "1000")
    with pytest.raises(BudgetExceeded):
        salem(parab(3), "gf(11)", 3)
    assert salem(parab(3), "gf(11)", 3, force=True).C == pytest.approx(1.0)


def test_spectrum_csv():
    s = spectrum_fft(variety_points(parab(2), "zmod(4)", 2))
    buf = io.StringIO()
    s.to_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "frequency_string,re,im,modulus"
    assert len(lines) == 17
    assert lines[1].startswith("0|0,0.25,")
    assert Frequency.parse(s.ring, lines[5].split(",")[0]).index == 4
