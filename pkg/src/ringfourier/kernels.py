"""Hot loops: phase histograms and difference counts.

Every character sum is reduced to an integer histogram ``hist[f, k]`` counting
terms with exact phase ``k / L``.  Histograms are integers, so the result is
independent of thread count and backend; :func:`combine` turns them into
complex coefficients in one fixed-order numpy step.

Two implementations exist for each kernel: numba ``@njit`` loops and plain
numpy.  The active one is chosen by :func:`ringfourier._backend.get_backend`.
"""
from __future__ import annotations

import numpy as np

from ._backend import HAVE_NUMBA, get_backend
from .characters import unit_roots

if HAVE_NUMBA:
    from numba import njit, prange
else:  # pragma: no cover
    njit = prange = None

PROBE_CHUNKS = 512


def combine(hist, L):
    """``sum_k hist[..., k] * exp(2 pi i k / L)``."""
    return np.asarray(hist, dtype=np.float64) @ unit_roots(L)


# --------------------------------------------------------------------------
# numpy versions


def _direct_numpy(elems, ranks, W, L):
    F, d = ranks.shape
    N = elems.shape[0]
    hist = np.zeros((F, L), dtype=np.int64)
    if N == 0 or F == 0:
        return hist
    step = max(1, (1 << 22) // max(N, 1))
    for lo in range(0, F, step):
        r = ranks[lo:lo + step]
        ph = np.zeros((len(r), N), dtype=np.int64)
        for b in range(d):
            ph += W[r[:, b][:, None], elems[None, :, b]]
        ph %= L
        ph += (np.arange(len(r), dtype=np.int64) * L)[:, None]
        hist[lo:lo + step] = np.bincount(ph.ravel(), minlength=len(r) * L).reshape(len(r), L)
    return hist


def _graph_numpy(yvals, ranks, W, q, L):
    F, d = ranks.shape
    hist = np.zeros((F, L), dtype=np.int64)
    T = yvals.shape[0]
    xs = np.indices((q,) * (d - 1)).reshape(d - 1, T) if d > 1 else np.zeros((0, T), dtype=np.int64)
    step = max(1, (1 << 22) // max(T, 1))
    for lo in range(0, F, step):
        r = ranks[lo:lo + step]
        ph = W[r[:, d - 1][:, None], yvals[None, :]].astype(np.int64)
        for b in range(d - 1):
            ph += W[r[:, b][:, None], xs[b][None, :]]
        ph %= L
        ph += (np.arange(len(r), dtype=np.int64) * L)[:, None]
        hist[lo:lo + step] = np.bincount(ph.ravel(), minlength=len(r) * L).reshape(len(r), L)
    return hist


def _diff_numpy(E, member, sub, q):
    N, d = E.shape
    total = 0
    step = max(1, (1 << 22) // max(N, 1))
    for lo in range(0, N, step):
        x = E[lo:lo + step]
        idx = np.zeros((len(x), N), dtype=np.int64)
        for b in range(d):
            idx = idx * q + sub[x[:, b][:, None], E[None, :, b]]
        total += int(np.count_nonzero(member[idx]))
    return total


# --------------------------------------------------------------------------
# numba versions

if HAVE_NUMBA:

    @njit(parallel=True, cache=True)
    def _direct_numba(elems, ranks, W, L):
        F, d = ranks.shape
        N = elems.shape[0]
        hist = np.zeros((F, L), dtype=np.int64)
        for f in prange(F):
            for t in range(N):
                ph = 0
                for b in range(d):
                    ph += W[ranks[f, b], elems[t, b]]
                hist[f, ph % L] += 1
        return hist

    @njit(parallel=True, cache=True)
    def _graph_numba(yvals, ranks, W, q, L):
        F, d = ranks.shape
        T = yvals.shape[0]
        hist = np.zeros((F, L), dtype=np.int64)
        for f in prange(F):
            digits = np.zeros(max(d - 1, 1), dtype=np.int64)
            base = 0
            for b in range(d - 1):
                base += W[ranks[f, b], 0]
            for t in range(T):
                ph = base + W[ranks[f, d - 1], yvals[t]]
                hist[f, ph % L] += 1
                # odometer over x in R^{d-1}, last coordinate fastest
                b = d - 2
                while b >= 0:
                    r = ranks[f, b]
                    base -= W[r, digits[b]]
                    digits[b] += 1
                    if digits[b] < q:
                        base += W[r, digits[b]]
                        break
                    digits[b] = 0
                    base += W[r, 0]
                    b -= 1
        return hist

    @njit(parallel=True, cache=True)
    def _diff_numba(E, member, sub, q):
        N, d = E.shape
        counts = np.zeros(N, dtype=np.int64)
        for i in prange(N):
            c = 0
            for j in range(N):
                idx = 0
                for b in range(d):
                    idx = idx * q + sub[E[i, b], E[j, b]]
                c += member[idx]
            counts[i] = c
        return counts.sum()

    @njit(cache=True)
    def _matmul(A, B, out, n, add, mul, zero):
        for i in range(n):
            for j in range(n):
                s = zero
                for k in range(n):
                    s = add[s, mul[A[i * n + k], B[k * n + j]]]
                out[i * n + j] = s

    @njit(parallel=True, cache=True)
    def _probe_numba(n, nv, add, mul, zero, offsets, letters, coeffs, cvec, wvar, wlast, L, nchunks):
        b = add.shape[0]
        n2 = n * n
        D = n2 * nv
        total = 1
        for _ in range(D):
            total *= b
        hist = np.zeros((nchunks, L), dtype=np.int64)
        nwords = offsets.shape[0] - 1
        for ch in prange(nchunks):
            lo = total * ch // nchunks
            hi = total * (ch + 1) // nchunks
            if lo >= hi:
                continue
            digits = np.zeros(D, dtype=np.int64)
            rest = lo
            for p in range(D - 1, -1, -1):
                digits[p] = rest % b
                rest //= b
            acc = np.empty(n2, dtype=np.int64)
            cur = np.empty(n2, dtype=np.int64)
            tmp = np.empty(n2, dtype=np.int64)
            xph = 0
            for v in range(nv):
                for e in range(n2):
                    xph += wvar[v, e, digits[v * n2 + e]]
            for t in range(lo, hi):
                for e in range(n2):
                    acc[e] = cvec[e]
                for w in range(nwords):
                    s = offsets[w]
                    v0 = letters[s]
                    for e in range(n2):
                        cur[e] = digits[v0 * n2 + e]
                    for p in range(s + 1, offsets[w + 1]):
                        v = letters[p]
                        _matmul(cur, digits[v * n2:(v + 1) * n2], tmp, n, add, mul, zero)
                        for e in range(n2):
                            cur[e] = tmp[e]
                    k = coeffs[w]
                    if k >= 0:
                        for e in range(n2):
                            cur[e] = mul[k, cur[e]]
                    for e in range(n2):
                        acc[e] = add[acc[e], cur[e]]
                ph = xph
                for e in range(n2):
                    ph += wlast[e, acc[e]]
                hist[ch, ph % L] += 1
                # odometer, last digit fastest
                p = D - 1
                while p >= 0:
                    v = p // n2
                    e = p - v * n2
                    xph -= wvar[v, e, digits[p]]
                    digits[p] += 1
                    if digits[p] < b:
                        xph += wvar[v, e, digits[p]]
                        break
                    digits[p] = 0
                    xph += wvar[v, e, 0]
                    p -= 1
        out = np.zeros(L, dtype=np.int64)
        for ch in range(nchunks):
            for k in range(L):
                out[k] += hist[ch, k]
        return out


# --------------------------------------------------------------------------
# dispatch


def direct_histograms(elems, ranks, W, L):
    """``hist[f, k]``: points of ``elems (N,d)`` whose phase at frequency ``ranks[f]`` is ``k``."""
    elems = np.ascontiguousarray(elems, dtype=np.int64)
    ranks = np.ascontiguousarray(ranks, dtype=np.int64)
    W = np.ascontiguousarray(W, dtype=np.int64)
    if get_backend() == "numba":
        return _direct_numba(elems, ranks, W, L)
    return _direct_numpy(elems, ranks, W, L)


def graph_histograms(yvals, ranks, W, q, L):
    """As :func:`direct_histograms` for the graph ``{(x, y[x])}``, x over R^{d-1} in index order."""
    yvals = np.ascontiguousarray(yvals, dtype=np.int64)
    ranks = np.ascontiguousarray(ranks, dtype=np.int64)
    W = np.ascontiguousarray(W, dtype=np.int64)
    if get_backend() == "numba":
        return _graph_numba(yvals, ranks, W, q, L)
    return _graph_numpy(yvals, ranks, W, q, L)


def difference_pairs(E, V, sub, q, total):
    """Ordered pairs ``(x, y)`` of rows of ``E`` with ``x - y`` in the index set ``V``.

    ``total`` is ``|R|^d``; membership uses a dense byte mask of that length.
    """
    E = np.ascontiguousarray(E, dtype=np.int64)
    if len(E) == 0 or len(V) == 0:
        return 0
    member = np.zeros(total, dtype=np.uint8)
    member[np.asarray(V, dtype=np.int64)] = 1
    sub = np.ascontiguousarray(sub, dtype=np.int64)
    if get_backend() == "numba":
        return int(_diff_numba(E, member, sub, q))
    return _diff_numpy(E, member, sub, q)


def encode_words(f, base, nvars):
    """Flatten ``f`` for the probe kernel; coefficient -1 marks a unit coefficient."""
    offsets = [0]
    letters = []
    coeffs = []
    for k, word in f.words:
        letters.extend(x - 1 for x in word)
        offsets.append(len(letters))
        coeffs.append(-1 if k == 1 else base.integer_image(k).index)
    return (np.array(offsets, dtype=np.int64), np.array(letters, dtype=np.int64),
            np.array(coeffs, dtype=np.int64))


def probe_histogram_numba(n, nv, base, words, cvec, wvar, wlast, L, nchunks=PROBE_CHUNKS):
    offsets, letters, coeffs = words
    add = np.ascontiguousarray(base.add_table, dtype=np.int64)
    mul = np.ascontiguousarray(base.mul_table, dtype=np.int64)
    return _probe_numba(n, nv, add, mul, base.zero_index, offsets, letters, coeffs,
                        np.ascontiguousarray(cvec, dtype=np.int64),
                        np.ascontiguousarray(wvar, dtype=np.int64),
                        np.ascontiguousarray(wlast, dtype=np.int64), L, nchunks)
