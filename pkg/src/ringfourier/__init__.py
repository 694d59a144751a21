"""Finite rings, additive characters and Salem constants of polynomial graphs."""
from ._backend import BudgetExceeded, get_backend, set_backend, set_threads, use_backend
from .characters import Frequency, character_value, enumerate_frequencies, trace_frequency
from .fourier import (SalemReport, Spectrum, graph_spectrum, probe_frequency, salem, salem_constant,
                      salem_lower_bound, spectrum_direct, spectrum_fft)
from .ncpoly import (Explicit, Graph, Hamming, NcPolynomial, PointSet, evaluate, paraboloid, parse_poly,
                     variety_points)
from .rings import Element, Ring, make_ring, parse_ring_spec, upper_triangular
from .structure import IdealSet, RadicalReport, all_ideals, jacobson_radical, quotient_ring

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Element", "Explicit", "Frequency", "Graph", "Hamming", "IdealSet", "NcPolynomial",
    "PointSet", "RadicalReport", "Ring", "SalemReport", "Spectrum", "all_ideals", "character_value",
    "enumerate_frequencies", "evaluate", "get_backend", "graph_spectrum", "jacobson_radical", "make_ring",
    "paraboloid", "parse_poly", "parse_ring_spec", "probe_frequency", "quotient_ring", "salem",
    "salem_constant", "salem_lower_bound", "set_backend", "set_threads", "spectrum_direct", "spectrum_fft",
    "trace_frequency", "upper_triangular", "use_backend", "variety_points",
]
