"""Kernel backend selection and the work budget.

``RINGFOURIER_BACKEND`` picks the kernel implementation: ``numba`` (default
when numba imports) or ``numpy``.  ``RINGFOURIER_BUDGET`` overrides the work
budget, counted in character evaluations.
"""
from __future__ import annotations

import os
from contextlib import contextmanager

try:
    import numba

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the bundled TBB is often too old; prefer OpenMP when present
        numba.config.THREADING_LAYER_PRIORITY = ["omp", "tbb", "workqueue"]
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

BACKENDS = ("numba", "numpy")
DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Raised when a computation would exceed the configured work budget."""

    def __init__(self, what, cost, budget):
        super().__init__(
            f"{what}: estimated work {cost:.3g} exceeds budget {budget:.3g} "
            "(raise RINGFOURIER_BUDGET or pass force)"
        )
        self.what = what
        self.cost = cost
        self.budget = budget


def _initial_backend():
    name = os.environ.get("RINGFOURIER_BACKEND", "").strip().lower()
    if name in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if name not in BACKENDS:
        raise ValueError(f"RINGFOURIER_BACKEND must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("RINGFOURIER_BACKEND=numba but numba is not importable")
    return name


_backend = _initial_backend()


def get_backend():
    return _backend


def set_backend(name):
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not importable")
    _backend = name


@contextmanager
def use_backend(name):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def set_threads(n):
    """Cap kernel worker threads.  Results never depend on this value."""
    if HAVE_NUMBA and n:
        numba.set_num_threads(max(1, min(int(n), numba.config.NUMBA_NUM_THREADS)))


def get_budget():
    raw = os.environ.get("RINGFOURIER_BUDGET")
    if not raw:
        return DEFAULT_BUDGET
    return int(float(raw))


def check_budget(what, cost, budget=None, force=False):
    limit = get_budget() if budget is None else budget
    if not force and cost > limit:
        raise BudgetExceeded(what, cost, limit)
