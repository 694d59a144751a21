"""Additive characters of R^d.

A frequency is a tuple of ``d`` blocks, each a coordinate tuple over the
ring's cyclic factors ``d_1..d_m``.  The character it names is

    x  ->  exp(2 pi i * sum_blocks sum_j c_j x_j / d_j)

Exponents are reduced exactly: with ``L`` the exponent of (R, +), every
pairing is an integer modulo ``L`` and only the final lookup touches floats.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from ._backend import check_budget
from .rings import NotTraceAdmissible, _as_index

DEFAULT_ENUMERATION_BUDGET = 10**7


@functools.lru_cache(maxsize=64)
def unit_roots(L):
    """exp(2 pi i k / L) for k < L."""
    k = np.arange(L)
    return np.exp(2j * np.pi * k / L)


def root(k, L):
    return complex(unit_roots(L)[k % L])


@dataclass(frozen=True)
class Frequency:
    ring: object
    d: int
    blocks: tuple  # d tuples of coordinates

    def __post_init__(self):
        if len(self.blocks) != self.d:
            raise ValueError(f"expected {self.d} blocks, got {len(self.blocks)}")
        factors = self.ring.factors
        for block in self.blocks:
            if len(block) != len(factors):
                raise ValueError("block length does not match the additive factorization")
            for c, n in zip(block, factors):
                if not 0 <= c < n:
                    raise ValueError(f"frequency coordinate {c} out of range for order {n}")

    @classmethod
    def from_index(cls, ring, d, index):
        q = ring.size
        if not 0 <= index < q**d:
            raise ValueError("frequency index out of range")
        ranks = []
        for _ in range(d):
            index, r = divmod(index, q)
            ranks.append(r)
        ranks.reverse()
        blocks = tuple(tuple(int(c) for c in _unravel(r, ring.factors)) for r in ranks)
        return cls(ring, d, blocks)

    @classmethod
    def trivial(cls, ring, d):
        return cls(ring, d, tuple((0,) * len(ring.factors) for _ in range(d)))

    @classmethod
    def parse(cls, ring, text):
        blocks = tuple(tuple(int(c) for c in part.split(",")) for part in text.strip().split("|"))
        return cls(ring, len(blocks), blocks)

    @property
    def block_ranks(self):
        return tuple(_ravel(b, self.ring.factors) for b in self.blocks)

    @property
    def index(self):
        out = 0
        for r in self.block_ranks:
            out = out * self.ring.size + r
        return out

    def is_trivial(self):
        return all(c == 0 for b in self.blocks for c in b)

    def zero_blocks(self):
        return sum(all(c == 0 for c in b) for b in self.blocks)

    def __str__(self):
        return "|".join(",".join(str(c) for c in b) for b in self.blocks)


def _unravel(r, factors):
    out = []
    for n in reversed(factors):
        r, c = divmod(r, n)
        out.append(c)
    return tuple(reversed(out))


def _ravel(coords, factors):
    out = 0
    for c, n in zip(coords, factors):
        out = out * n + c
    return out


def frequency_string(ring, d, index):
    return str(Frequency.from_index(ring, d, int(index)))


def block_weights(ring, block):
    """Per-factor multipliers ``c_j * L / d_j`` of one frequency block."""
    L = ring.exponent
    return np.array([c * (L // n) for c, n in zip(block, ring.factors)], dtype=np.int64)


def pairing(ring, block, x):
    """Exact exponent numerator (mod ``L``) of one block against element(s) ``x``."""
    coords = ring.coords(np.asarray(_as_index(ring, x), dtype=np.int64))
    return (coords @ block_weights(ring, block)) % ring.exponent


@functools.lru_cache(maxsize=16)
def pairing_matrix(ring):
    """``W[r, e]``: pairing of the frequency block of rank ``r`` with element ``e``."""
    q = ring.size
    check_budget(f"pairing matrix of {ring.spec}", float(q) * q)
    L = ring.exponent
    scale = np.array([L // n for n in ring.factors], dtype=np.int64)
    freq = np.array([_unravel(r, ring.factors) for r in range(q)], dtype=np.int64) * scale
    elem = ring.coord_table
    return ((freq @ elem.T) % L).astype(np.int32)


def phase_exponent(freq, point):
    ring = freq.ring
    if len(point) != freq.d:
        raise ValueError(f"point has {len(point)} coordinates, frequency has {freq.d} blocks")
    return int(sum(pairing(ring, b, x) for b, x in zip(freq.blocks, point)) % ring.exponent)


def character_value(freq, point):
    """Value of the character named by ``freq`` at a d-tuple of elements."""
    return root(phase_exponent(freq, point), freq.ring.exponent)


def _unit_coordinate_elements(ring):
    m = len(ring.factors)
    return np.array([ring.from_coords(tuple(int(i == j) for j in range(m))) for i in range(m)],
                    dtype=np.int64)


def trace_block(ring, b):
    """Coordinates of the frequency ``x -> psi_gen(b x)`` on one copy of R."""
    b = _as_index(ring, b)
    L = ring.exponent
    basis = _unit_coordinate_elements(ring)
    values = ring.generating_functional(ring.mul(np.full_like(basis, b), basis))
    coords = []
    for v, n in zip(values.tolist(), ring.factors):
        step = L // n
        assert v % step == 0, "generating functional is not a character"
        coords.append((v // step) % n)
    return tuple(coords)


@functools.lru_cache(maxsize=None)
def _check_trace_injective(ring):
    blocks = {trace_block(ring, b) for b in range(ring.size)}
    if len(blocks) != ring.size:
        raise NotTraceAdmissible(f"{ring.spec}: trace pairing is degenerate")
    return True


def trace_frequency(ring, b):
    """Frequency of ``x -> psi_gen(sum_i b_i x_i)`` for a d-tuple ``b`` of elements."""
    if ring.size <= 256:
        _check_trace_injective(ring)
    blocks = tuple(trace_block(ring, bi) for bi in b)
    return Frequency(ring, len(blocks), blocks)


def enumerate_frequencies(ring, d, budget=DEFAULT_ENUMERATION_BUDGET, force=False):
    """All |R|^d frequencies in mixed-radix order, trivial first."""
    total = ring.size**d
    check_budget(f"enumerating {total} frequencies", total, budget, force)
    for index in range(total):
        yield Frequency.from_index(ring, d, index)


def point_coordinate_index(ring, elements):
    """Row-major rank over R^d coordinates for an ``(N, d)`` array of element indices."""
    elements = np.asarray(elements, dtype=np.int64)
    ranks = ring.coord_index(elements)
    out = np.zeros(elements.shape[0], dtype=np.int64)
    for b in range(elements.shape[1]):
        out = out * ring.size + ranks[:, b]
    return out


__all__ = [
    "Frequency",
    "character_value",
    "enumerate_frequencies",
    "frequency_string",
    "pairing",
    "pairing_matrix",
    "phase_exponent",
    "trace_block",
    "trace_frequency",
    "unit_roots",
]
