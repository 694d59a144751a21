import numpy as np
import pytest

from ringfourier import kernels, make_ring, use_backend
from ringfourier.characters import pairing_matrix
from ringfourier.fourier import frequency_ranks

pytest.importorskip("numba")


def both(fn):
    out = []
    for name in ("numba", "numpy"):
        with use_backend(name):
            out.append(fn())
    return out


@pytest.mark.parametrize("spec,d", [("zmod(6)", 2), ("gf(4)", 3), ("prod(gf(2),zmod(4))", 2)])
def test_direct_and_graph_histograms_agree(spec, d):
    R = make_ring(spec)
    rng = np.random.default_rng(0)
    elems = rng.integers(0, R.size, size=(37, d))
    W, ranks = pairing_matrix(R), frequency_ranks(R, d)
    a, b = both(lambda: kernels.direct_histograms(elems, ranks, W, R.exponent))
    assert np.array_equal(a, b)
    y = rng.integers(0, R.size, size=R.size ** (d - 1))
    a, b = both(lambda: kernels.graph_histograms(y, ranks, W, R.size, R.exponent))
    assert np.array_equal(a, b)
    assert np.all(a.sum(axis=1) == len(y))


def test_difference_pairs_agree():
    R = make_ring("zmod(5)")
    rng = np.random.default_rng(1)
    E = rng.integers(0, 5, size=(40, 2))
    V = np.unique(rng.integers(0, 25, size=6))
    sub = R.add_table[:, R.neg_table]
    a, b = both(lambda: kernels.difference_pairs(E, V, sub, 5, 25))
    assert a == b


def test_unknown_backend():
    from ringfourier import set_backend

    with pytest.raises(ValueError):
        set_backend("cuda")
