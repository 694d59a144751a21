"""Fourier spectra of point sets in R^d and Salem constants.

Normalization: ``S^(psi) = |R|^{-d} sum_{x in S} psi(x)``.  The Salem constant
of ``S`` is the maximum over nontrivial ``psi`` of
``|S^(psi)| * |R|^d / |S|^{1/2}``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._backend import check_budget, get_backend
from .characters import (Frequency, frequency_string, pairing, pairing_matrix, point_coordinate_index,
                         unit_roots)
from .ncpoly import Graph, evaluate, graph_values, split_points, variety_points
from .rings import make_ring

EXACT_TOLERANCE = 1e-9
ARGMAX_RTOL = 1e-9


@dataclass(eq=False)
class Spectrum:
    ring: object
    d: int
    size: int
    coeffs: np.ndarray  # complex, indexed by frequency index
    method: str
    variety: str = "explicit"

    @property
    def total(self):
        return self.ring.size**self.d

    @property
    def moduli(self):
        return np.abs(self.coeffs)

    def coefficient(self, freq):
        return complex(self.coeffs[freq.index if isinstance(freq, Frequency) else int(freq)])

    def parseval_error(self):
        """Relative deviation of ``|R|^d sum |c|^2`` from ``|S|`` (absolute when S is empty)."""
        lhs = self.total * float(np.sum(self.moduli**2))
        return abs(lhs - self.size) / max(self.size, 1)

    def to_csv(self, fh):
        fh.write("frequency_string,re,im,modulus\n")
        for i, z in enumerate(self.coeffs.tolist()):
            fh.write(f"{frequency_string(self.ring, self.d, i)},{z.real:.17g},{z.imag:.17g},{abs(z):.17g}\n")


@dataclass(frozen=True)
class SalemReport:
    ring: str
    d: int
    variety: str
    size: int
    C: float
    argmax: str
    lower_bound: bool
    method: str
    tolerance: float

    def to_json(self):
        return json.dumps({
            "ring": self.ring, "d": self.d, "variety": self.variety, "size": self.size,
            "C": self.C, "argmax": self.argmax, "lower_bound": self.lower_bound,
            "method": self.method, "tolerance": self.tolerance,
        }, sort_keys=True)


def frequency_ranks(ring, d):
    """``(|R|^d, d)`` block ranks of every frequency, in index order."""
    q = ring.size
    return np.indices((q,) * d, dtype=np.int64).reshape(d, -1).T


def _coefficients(hist, ring, d):
    return kernels.combine(hist, ring.exponent) / float(ring.size**d)


def spectrum_direct(points, budget=None, force=False):
    ring, d = points.ring, points.d
    q = ring.size
    check_budget(f"direct spectrum over {ring.spec}, d={d}", float(q**d) * len(points), budget, force)
    hist = kernels.direct_histograms(points.elements(), frequency_ranks(ring, d), pairing_matrix(ring),
                                     ring.exponent)
    return Spectrum(ring, d, len(points), _coefficients(hist, ring, d), "direct", points.label)


def _dft_matrix(n):
    k = np.arange(n)
    return unit_roots(n)[np.outer(k, k) % n]


def spectrum_fft(points, budget=None, force=False):
    """Separable DFT over the cyclic axes of (R^d, +)."""
    ring, d = points.ring, points.d
    q = ring.size
    axes = list(ring.factors) * d
    check_budget(f"fft spectrum over {ring.spec}, d={d}", float(q**d) * sum(axes), budget, force)
    A = np.zeros(q**d, dtype=np.complex128)
    if len(points):
        A[point_coordinate_index(ring, points.elements())] = 1.0
    A = A.reshape(axes)
    for ax, n in enumerate(axes):
        A = np.moveaxis(np.tensordot(_dft_matrix(n), A, axes=([1], [ax])), 0, ax)
    return Spectrum(ring, d, len(points), A.reshape(-1) / float(q**d), "fft", points.label)


def graph_spectrum(f, c, ring, d, budget=None, force=False):
    """Spectrum of the graph ``x_d = f(x) + c`` summed over R^{d-1}."""
    ring = make_ring(ring)
    q = ring.size
    check_budget(f"graph spectrum over {ring.spec}, d={d}", float(q) ** (2 * d - 1), budget, force)
    y = graph_values(f, c, ring, d)
    hist = kernels.graph_histograms(y, frequency_ranks(ring, d), pairing_matrix(ring), q, ring.exponent)
    return Spectrum(ring, d, q ** (d - 1), _coefficients(hist, ring, d), "graph", str(Graph(f, c)))


# --------------------------------------------------------------------------
# single-frequency probes


def _entry_weights(ring, base, n, block):
    """``w[e, x]``: pairing contribution of matrix entry ``e`` holding base element ``x``."""
    L = ring.exponent
    mb = len(base.factors)
    bc = base.coord_table  # (|base|, mb)
    scale = np.array([L // m for m in base.factors], dtype=np.int64)
    block = np.asarray(block, dtype=np.int64).reshape(n * n, mb)
    return ((block * scale) @ bc.T) % L


def _probe_numpy(f, c, ring, d, freq, chunk=1 << 18):
    q = ring.size
    total = q ** (d - 1)
    L = ring.exponent
    hist = np.zeros(L, dtype=np.int64)
    cidx = ring.integer_image(c).index
    g = f.with_nvars(max(f.nvars, d - 1))
    for lo in range(0, total, chunk):
        t = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        xs = split_points(ring, d - 1, t)
        cols = [xs[:, i] for i in range(d - 1)]
        y = ring.add(np.asarray(evaluate(g, ring, cols), dtype=np.int64), cidx)
        ph = pairing(ring, freq.blocks[d - 1], y)
        for i in range(d - 1):
            ph = ph + pairing(ring, freq.blocks[i], cols[i])
        hist += np.bincount(ph % L, minlength=L)
    return hist


def probe_frequency(f, c, ring, d, freq, budget=None, force=False):
    """One coefficient of the graph spectrum, without enumerating frequencies."""
    ring = make_ring(ring)
    if not isinstance(freq, Frequency):
        freq = Frequency.from_index(ring, d, int(freq))
    if freq.d != d:
        raise ValueError("frequency dimension mismatch")
    q = ring.size
    check_budget(f"probe over {ring.spec}, d={d}", float(q) ** (d - 1), budget, force)
    if get_backend() == "numba":
        n, base = ring.kernel_form()
        wvar = np.stack([_entry_weights(ring, base, n, freq.blocks[v]) for v in range(d - 1)]) \
            if d > 1 else np.zeros((0, n * n, base.size), dtype=np.int64)
        wlast = _entry_weights(ring, base, n, freq.blocks[d - 1])
        cimg = ring.integer_image(c).index
        cvec = ring.entries(cimg) if n > 1 else np.array([cimg])
        words = kernels.encode_words(f, base, d - 1)
        hist = kernels.probe_histogram_numba(n, d - 1, base, words, cvec, wvar, wlast, ring.exponent)
    else:
        hist = _probe_numpy(f, c, ring, d, freq)
    return complex(kernels.combine(hist, ring.exponent) / float(q) ** d)


# --------------------------------------------------------------------------
# Salem constants


def salem_constant(spectrum):
    """Salem report of a full spectrum; ties go to the lowest frequency index."""
    if spectrum.size == 0:
        raise ValueError("Salem constant of an empty set is undefined")
    ratios = spectrum.moduli * spectrum.total / math.sqrt(spectrum.size)
    ratios[0] = -1.0
    best = float(ratios.max())
    arg = int(np.flatnonzero(ratios >= best * (1 - ARGMAX_RTOL))[0])
    return SalemReport(str(spectrum.ring.spec), spectrum.d, spectrum.variety, spectrum.size, best,
                       frequency_string(spectrum.ring, spectrum.d, arg), False, spectrum.method,
                       EXACT_TOLERANCE)


def salem_lower_bound(f, c, ring, d, freqs, budget=None, force=False):
    """Lower bound on C from probes at the given nontrivial frequencies."""
    ring = make_ring(ring)
    freqs = [fr if isinstance(fr, Frequency) else Frequency.from_index(ring, d, int(fr)) for fr in freqs]
    freqs = [fr for fr in freqs if not fr.is_trivial()]
    if not freqs:
        raise ValueError("no nontrivial probe frequencies")
    size = ring.size ** (d - 1)
    scale = float(ring.size) ** d / math.sqrt(size)
    best, arg = -1.0, None
    for fr in freqs:
        r = abs(probe_frequency(f, c, ring, d, fr, budget, force)) * scale
        if r > best * (1 + ARGMAX_RTOL):
            best, arg = r, fr
    return SalemReport(str(ring.spec), d, str(Graph(f, c)), size, best, str(arg), True, "probe",
                       1e-6)


METHODS = ("auto", "direct", "fft", "graph")


def variety_spectrum(spec, ring, d, method="auto", budget=None, force=False):
    """Full spectrum of a variety by the chosen method (``auto`` prefers fft)."""
    ring = make_ring(ring)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "graph":
        if not isinstance(spec, Graph):
            raise ValueError("the graph method needs a graph variety")
        return graph_spectrum(spec.f, spec.c, ring, d, budget, force)
    q = ring.size
    if method == "direct":
        # |V| <= |R|^{d-1} for graph and Hamming varieties
        check_budget(f"direct spectrum over {ring.spec}, d={d}", float(q) ** (2 * d - 1), budget, force)
    else:
        check_budget(f"fft spectrum over {ring.spec}, d={d}", float(q) ** d * sum(ring.factors) * d,
                     budget, force)
    points = variety_points(spec, ring, d, budget, force)
    if method == "direct":
        return spectrum_direct(points, budget, force)
    return spectrum_fft(points, budget, force)


def salem(spec, ring, d, method="auto", budget=None, force=False):
    return salem_constant(variety_spectrum(spec, ring, d, method, budget, force))


def trivial_frequency_bound(size, total):
    """Plancherel floor ``sqrt(1 - |S| / |R|^d)`` on the Salem constant."""
    return math.sqrt(max(0.0, 1.0 - size / total))


__all__ = [
    "SalemReport",
    "Spectrum",
    "frequency_ranks",
    "graph_spectrum",
    "probe_frequency",
    "salem",
    "salem_constant",
    "salem_lower_bound",
    "spectrum_direct",
    "spectrum_fft",
    "variety_spectrum",
]

