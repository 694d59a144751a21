"""Finite unital rings with a canonical element indexing.

Elements of a ring ``R`` are the integers ``0 .. |R|-1``.  For every
constructor except :class:`Table`, the index of an element is the row-major
mixed-radix number formed by its additive coordinates (first coordinate most
significant), so addition is digitwise modulo the cyclic orders:

* ``zmod(n)``: one coordinate, the residue itself.
* ``gf(p, k)``: ``k`` coordinates of order ``p``, the polynomial coefficients
  listed from ``t^(k-1)`` down to the constant term, so the index of
  ``c_0 + c_1 t + ...`` is ``sum c_j p^j``.
* ``mat(n, base)``: the ``n*n`` entries in row-major order, each contributing
  the coordinates of the base ring.
* ``prod(R1, R2, ...)``: concatenation, ``R1`` most significant.

Table rings keep the indexing of their tables and carry a coordinate table
found by decomposing the additive group into cyclic factors.
"""
from __future__ import annotations

import functools
import itertools
import json
import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from ._backend import check_budget

TABLE_LIMIT = 4096
AXIOM_CHECK_LIMIT = 256


class RingSpecError(ValueError):
    """Malformed or invalid ring spec string."""


class NotTraceAdmissible(ValueError):
    """The ring has no built-in generating character (e.g. table rings)."""


# --------------------------------------------------------------------------
# small integer helpers


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q):
    """Return ``(p, k)`` with ``q == p**k`` and ``p`` prime, else ``None``."""
    if q < 2:
        return None
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


# --------------------------------------------------------------------------
# polynomials over Z/p as coefficient lists, low degree first


def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _ptrim(a)
    m = _ptrim(m)
    inv = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _ptrim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(poly, p):
    """Ben-Or test: no irreducible factor of degree <= deg/2."""
    poly = _ptrim(poly)
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(k // 2):
        # power <- power^p mod poly
        result = [1]
        base = power
        e = p
        while e:
            if e & 1:
                result = _pmod(_pmul(result, base, p), poly, p)
            base = _pmod(_pmul(base, base, p), poly, p)
            e >>= 1
        power = result
        g = _pgcd(poly, _psub(power, x, p), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree ``k`` over Z/p.

    Coefficient tuples are compared low degree first; the leading 1 is
    included as the last entry of the returned tuple.
    """
    for low in itertools.product(range(p), repeat=k):
        poly = list(low) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("every degree has an irreducible polynomial")


# --------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class Zmod:
    n: int

    def __str__(self):
        return f"zmod({self.n})"


@dataclass(frozen=True)
class GF:
    p: int
    k: int
    modulus: tuple  # low degree first, monic

    def __str__(self):
        return f"gf({self.p ** self.k})"


@dataclass(frozen=True)
class Matrix:
    n: int
    base: "RingSpec"

    def __str__(self):
        return f"mat({self.n},{self.base})"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __str__(self):
        return "prod(" + ",".join(str(f) for f in self.factors) + ")"


@dataclass(frozen=True, eq=False)
class Table:
    """Explicit tables; equality is identity."""

    label: str
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int

    def __str__(self):
        return self.label


RingSpec = Union[Zmod, GF, Matrix, Product, Table]


def gf_spec(p, k=1):
    if not is_prime(p):
        raise RingSpecError(f"gf: {p} is not prime")
    if k < 1:
        raise RingSpecError("gf: degree must be >= 1")
    return GF(p, k, smallest_irreducible(p, k))


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z]+)|(.))")


def _tokenize(text):
    out = []
    for num, word, sym in _TOKEN.findall(text.lower()):
        if num:
            out.append(int(num))
        elif word:
            out.append(word)
        elif sym.strip():
            out.append(sym)
    return out


def parse_ring_spec(text):
    """Parse the ring DSL ``zmod(N) | gf(Q) | gf(P,K) | mat(N,spec) | prod(spec,...)``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None:
            raise RingSpecError(f"unexpected end of ring spec {text!r}")
        if expected is not None and tok != expected:
            raise RingSpecError(f"expected {expected!r} in {text!r}, got {tok!r}")
        pos += 1
        return tok

    def integer():
        tok = take()
        if not isinstance(tok, int):
            raise RingSpecError(f"expected an integer in {text!r}, got {tok!r}")
        return tok

    def spec():
        head = take()
        take("(")
        if head == "zmod":
            n = integer()
            take(")")
            if n < 2:
                raise RingSpecError("zmod(n) needs n >= 2")
            return Zmod(n)
        if head == "gf":
            a = integer()
            if peek() == ",":
                take(",")
                k = integer()
                take(")")
                return gf_spec(a, k)
            take(")")
            pk = prime_power(a)
            if pk is None:
                raise RingSpecError(f"gf({a}): not a prime power")
            return gf_spec(*pk)
        if head == "mat":
            n = integer()
            take(",")
            base = spec()
            take(")")
            if n < 1:
                raise RingSpecError("mat(n, ...) needs n >= 1")
            return Matrix(n, base)
        if head == "prod":
            factors = [spec()]
            while peek() == ",":
                take(",")
                factors.append(spec())
            take(")")
            if len(factors) < 2:
                raise RingSpecError("prod needs at least two factors")
            return Product(tuple(factors))
        raise RingSpecError(f"unknown ring constructor {head!r}")

    result = spec()
    if pos != len(tokens):
        raise RingSpecError(f"trailing input in ring spec {text!r}")
    return result


# --------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class Element:
    ring: "Ring"
    index: int

    def _other(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.ring is not self.ring:
            raise ValueError("mixed-ring operands")
        return other.index

    def __add__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self.ring.element(self.ring.add(self.index, b))

    def __sub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self.ring.element(self.ring.sub(self.index, b))

    def __mul__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self.ring.element(self.ring.mul(self.index, b))

    def __neg__(self):
        return self.ring.element(self.ring.neg(self.index))

    def __int__(self):
        return self.index

    __index__ = __int__

    def __repr__(self):
        return f"{self.ring.spec}[{self.index}]"


def _as_index(ring, x):
    if isinstance(x, Element):
        if x.ring is not ring:
            raise ValueError("mixed-ring operands")
        return x.index
    return x


def _vector(fn):
    """Accept ints, Elements or arrays; return ints for scalar input."""

    @functools.wraps(fn)
    def wrapper(self, *args):
        arrays = [np.asarray(_as_index(self, a), dtype=np.int64) for a in args]
        out = fn(self, *arrays)
        if all(a.ndim == 0 for a in arrays):
            return int(out)
        return out

    return wrapper


# --------------------------------------------------------------------------
# rings


class Ring:
    """Base class.  Subclasses implement the vectorized ``_add/_neg/_mul``."""

    spec: RingSpec
    size: int
    factors: tuple

    def _setup(self):
        self.exponent = _lcm(self.factors)
        self._add_t = None
        self._mul_t = None
        one = self.additive_coordinates(self.one_index)
        self.characteristic = _lcm(d // math.gcd(d, c) for c, d in zip(one, self.factors))

    # -- element access
    def element(self, i):
        i = int(i)
        if not 0 <= i < self.size:
            raise IndexError(f"element index {i} out of range for {self.spec}")
        return Element(self, i)

    __call__ = element

    def zero(self):
        return Element(self, self.zero_index)

    def one(self):
        return Element(self, self.one_index)

    def __repr__(self):
        return f"Ring({self.spec})"

    def __len__(self):
        return self.size

    # -- arithmetic
    @property
    def has_tables(self):
        return self.size <= TABLE_LIMIT

    @property
    def add_table(self):
        if self._add_t is None:
            self._build_tables()
        return self._add_t

    @property
    def mul_table(self):
        if self._mul_t is None:
            self._build_tables()
        return self._mul_t

    def _build_tables(self):
        if not self.has_tables:
            raise ValueError(f"{self.spec}: |R| = {self.size} exceeds the table limit")
        idx = np.arange(self.size, dtype=np.int64)
        a = np.repeat(idx, self.size)
        b = np.tile(idx, self.size)
        shape = (self.size, self.size)
        self._add_t = self._add(a, b).reshape(shape).astype(np.int32)
        self._mul_t = self._mul(a, b).reshape(shape).astype(np.int32)

    @functools.cached_property
    def neg_table(self):
        return np.argmax(self.add_table == self.zero_index, axis=1).astype(np.int64)

    @_vector
    def add(self, a, b):
        if self._add_t is not None:
            return self._add_t[a, b].astype(np.int64)
        return self._add(a, b)

    @_vector
    def neg(self, a):
        if self._add_t is not None:
            return self.neg_table[a]
        return self._neg(a)

    @_vector
    def sub(self, a, b):
        if self._add_t is not None:
            return self._add_t[a, self.neg_table[b]].astype(np.int64)
        return self._add(a, self._neg(b))

    @_vector
    def mul(self, a, b):
        if self.has_tables:
            return self.mul_table[a, b].astype(np.int64)
        return self._mul(a, b)

    def integer_image(self, k):
        """Image of the integer ``k`` under the unital map Z -> R."""
        one = np.array(self.additive_coordinates(self.one_index))
        coords = (one * int(k)) % np.array(self.factors)
        return self.coordinates_to_element(tuple(int(c) for c in coords))

    # -- additive coordinates (mixed radix by default)
    def _strides(self):
        strides = [1] * len(self.factors)
        for j in range(len(self.factors) - 2, -1, -1):
            strides[j] = strides[j + 1] * self.factors[j + 1]
        return np.array(strides, dtype=np.int64)

    def coords(self, a):
        """Vectorized coordinates: shape ``a.shape + (m,)``."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._strides()) % np.array(self.factors, dtype=np.int64)

    def from_coords(self, c):
        c = np.asarray(c, dtype=np.int64)
        return (c % np.array(self.factors, dtype=np.int64)) @ self._strides()

    def coord_index(self, a):
        """Row-major rank of the coordinate tuple of ``a`` (the index itself here)."""
        return np.asarray(a, dtype=np.int64)

    def additive_coordinates(self, a):
        return tuple(int(x) for x in self.coords(_as_index(self, a)))

    def coordinates_to_element(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} coordinates, got {len(coords)}")
        for c, d in zip(coords, self.factors):
            if not 0 <= c < d:
                raise ValueError(f"coordinate {c} out of range for cyclic order {d}")
        return Element(self, int(self.from_coords(coords)))

    @functools.cached_property
    def coord_table(self):
        return self.coords(np.arange(self.size, dtype=np.int64))

    def _add(self, a, b):
        return self.from_coords(self.coords(a) + self.coords(b))

    def _neg(self, a):
        return self.from_coords(-self.coords(a))

    # -- units
    def _right_inverse_search(self, a):
        """All ``b`` with ``a*b == 1`` (exhaustive)."""
        if self.has_tables:
            return np.flatnonzero(self.mul_table[a] == self.one_index)
        check_budget(f"unit search in {self.spec}", self.size)
        hits = []
        chunk = 1 << 18
        for start in range(0, self.size, chunk):
            b = np.arange(start, min(self.size, start + chunk), dtype=np.int64)
            prod = self._mul(np.full_like(b, a), b)
            hits.extend((b[prod == self.one_index]).tolist())
        return np.array(hits, dtype=np.int64)

    def inverse(self, a):
        a = _as_index(self, a)
        hits = self._right_inverse_search(a)
        if len(hits) == 0:
            raise ZeroDivisionError(f"{a} is not a unit of {self.spec}")
        b = int(hits[0])
        assert self.mul(b, a) == self.one_index, "one-sided inverse is not two-sided"
        return b

    def is_unit(self, a):
        a = _as_index(self, a)
        hits = self._right_inverse_search(a)
        if len(hits) == 0:
            return False
        assert self.mul(int(hits[0]), a) == self.one_index, "one-sided inverse is not two-sided"
        return True

    @functools.cached_property
    def unit_mask(self):
        if self.has_tables:
            t = self.mul_table
            mask = (t == self.one_index).any(axis=1)
            # two-sidedness: the right inverse found must also be a left inverse
            rows = np.flatnonzero(mask)
            inv = np.argmax(t[rows] == self.one_index, axis=1)
            assert np.all(t[inv, rows] == self.one_index), "one-sided inverse is not two-sided"
            return mask
        check_budget(f"unit enumeration in {self.spec}", float(self.size) ** 2)
        return np.array([self.is_unit(a) for a in range(self.size)])

    def unit_indices(self):
        return np.flatnonzero(self.unit_mask).astype(np.int64)

    def units(self):
        return [Element(self, int(i)) for i in self.unit_indices()]

    def unit_count(self):
        return int(self.unit_mask.sum())

    @functools.cached_property
    def inverse_table(self):
        """``inv[u]`` for units, -1 elsewhere (tabled rings only)."""
        t = self.mul_table
        mask = self.unit_mask
        inv = np.full(self.size, -1, dtype=np.int64)
        rows = np.flatnonzero(mask)
        inv[rows] = np.argmax(t[rows] == self.one_index, axis=1)
        return inv

    def is_field(self):
        if self.size > TABLE_LIMIT:
            return False
        if not self.is_commutative():
            return False
        return self.unit_count() == self.size - 1

    def is_commutative(self):
        t = self.mul_table
        return bool(np.array_equal(t, t.T))

    # -- the generating character, as a numerator modulo ``exponent``
    def generating_functional(self, a):
        raise NotTraceAdmissible(f"{self.spec} has no built-in generating character")

    def kernel_form(self):
        """``(n, base_ring)``: elements as n-by-n matrices over a tabled ring."""
        if self.has_tables:
            return 1, self
        raise ValueError(f"{self.spec}: no kernel representation (|R| = {self.size})")

    def to_json(self):
        return {
            "spec": str(self.spec),
            "size": self.size,
            "characteristic": self.characteristic,
            "additive_factors": list(self.factors),
            "unit_count": self.unit_count(),
        }


class ZmodRing(Ring):
    def __init__(self, spec):
        self.spec = spec
        self.size = spec.n
        self.factors = (spec.n,)
        self.zero_index = 0
        self.one_index = 1
        self._setup()

    def _add(self, a, b):
        return (a + b) % self.size

    def _neg(self, a):
        return (-a) % self.size

    def _mul(self, a, b):
        return (a * b) % self.size

    def generating_functional(self, a):
        return np.asarray(a, dtype=np.int64) % self.size


class GFRing(Ring):
    def __init__(self, spec):
        self.spec = spec
        self.p, self.k = spec.p, spec.k
        self.size = spec.p ** spec.k
        self.factors = (spec.p,) * spec.k
        self.modulus = spec.modulus
        self.zero_index = 0
        self.one_index = 1
        self._setup()

    def poly_coeffs(self, a):
        """Coefficients low degree first, shape ``a.shape + (k,)``."""
        a = np.asarray(a, dtype=np.int64)
        powers = self.p ** np.arange(self.k, dtype=np.int64)
        return (a[..., None] // powers) % self.p

    def from_poly_coeffs(self, c):
        powers = self.p ** np.arange(self.k, dtype=np.int64)
        return (np.asarray(c, dtype=np.int64) % self.p) @ powers

    def _mul(self, a, b):
        p, k = self.p, self.k
        ca, cb = self.poly_coeffs(a), self.poly_coeffs(b)
        prod = np.zeros(ca.shape[:-1] + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                prod[..., i + j] += ca[..., i] * cb[..., j]
        prod %= p
        m = self.modulus
        for deg in range(2 * k - 2, k - 1, -1):
            top = prod[..., deg].copy()
            for i in range(k):
                prod[..., deg - k + i] -= top * m[i]
            prod[..., deg] = 0
            prod %= p
        return self.from_poly_coeffs(prod[..., :k])

    def trace(self, a):
        """Absolute trace as the trace of multiplication by ``a`` over Z/p."""
        a = np.asarray(a, dtype=np.int64)
        total = np.zeros(a.shape, dtype=np.int64)
        for i in range(self.k):
            basis = np.full(a.shape, self.p ** i, dtype=np.int64)
            total += self.poly_coeffs(self.mul(a, basis))[..., i]
        return total % self.p

    def generating_functional(self, a):
        return self.trace(a)


class MatrixRing(Ring):
    def __init__(self, spec):
        self.spec = spec
        self.n = spec.n
        self.base = ring_from_spec(spec.base)
        self.size = self.base.size ** (self.n * self.n)
        self.factors = self.base.factors * (self.n * self.n)
        self.zero_index = int(self.from_entries(np.full(self.n * self.n, self.base.zero_index)))
        ident = np.full(self.n * self.n, self.base.zero_index)
        ident[:: self.n + 1] = self.base.one_index
        self.one_index = int(self.from_entries(ident))
        self._setup()

    def entries(self, a):
        """Base-ring entries in row-major order, shape ``a.shape + (n*n,)``."""
        a = np.asarray(a, dtype=np.int64)
        nn = self.n * self.n
        strides = self.base.size ** np.arange(nn - 1, -1, -1, dtype=np.int64)
        return (a[..., None] // strides) % self.base.size

    def from_entries(self, e):
        nn = self.n * self.n
        strides = self.base.size ** np.arange(nn - 1, -1, -1, dtype=np.int64)
        return np.asarray(e, dtype=np.int64) @ strides

    def matrix(self, a):
        """Scalar helper: the element as a nested list of base indices."""
        e = self.entries(_as_index(self, a)).tolist()
        return [e[i * self.n:(i + 1) * self.n] for i in range(self.n)]

    def from_matrix(self, rows):
        flat = [int(_as_index(self.base, x)) for row in rows for x in row]
        if len(flat) != self.n * self.n:
            raise ValueError("wrong matrix shape")
        return Element(self, int(self.from_entries(flat)))

    def unit_matrix(self, i, j):
        """The matrix unit E_ij (1-based), as an element."""
        e = np.full(self.n * self.n, self.base.zero_index)
        e[(i - 1) * self.n + (j - 1)] = self.base.one_index
        return Element(self, int(self.from_entries(e)))

    def coords(self, a):
        c = self.base.coords(self.entries(a))
        return c.reshape(c.shape[:-2] + (-1,))

    def from_coords(self, c):
        c = np.asarray(c, dtype=np.int64)
        c = c.reshape(c.shape[:-1] + (self.n * self.n, len(self.base.factors)))
        return self.from_entries(self.base.from_coords(c))

    def coord_index(self, a):
        return self.from_entries(self.base.coord_index(self.entries(a)))

    def _add(self, a, b):
        return self.from_entries(self.base.add(self.entries(a), self.entries(b)))

    def _neg(self, a):
        return self.from_entries(self.base.neg(self.entries(a)))

    def _mul(self, a, b):
        n = self.n
        base = self.base
        ea, eb = self.entries(a), self.entries(b)
        out = np.empty(np.broadcast(ea, eb).shape, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                s = np.full(out.shape[:-1], base.zero_index, dtype=np.int64)
                for k in range(n):
                    s = base.add(s, base.mul(ea[..., i * n + k], eb[..., k * n + j]))
                out[..., i * n + j] = s
        return self.from_entries(out)

    def generating_functional(self, a):
        e = self.entries(a)
        total = np.zeros(e.shape[:-1], dtype=np.int64)
        for i in range(self.n):
            total += self.base.generating_functional(e[..., i * self.n + i])
        return total % self.exponent

    def kernel_form(self):
        # base tables are tiny; full tables of R cost |R|^2 to build
        if self.base.has_tables:
            return self.n, self.base
        return super().kernel_form()


class ProductRing(Ring):
    def __init__(self, spec):
        self.spec = spec
        self.components = tuple(ring_from_spec(f) for f in spec.factors)
        self.sizes = tuple(c.size for c in self.components)
        self.size = math.prod(self.sizes)
        self.factors = tuple(f for c in self.components for f in c.factors)
        self.zero_index = int(self.from_components([c.zero_index for c in self.components]))
        self.one_index = int(self.from_components([c.one_index for c in self.components]))
        self._setup()

    def _cstrides(self):
        strides = [1] * len(self.sizes)
        for j in range(len(self.sizes) - 2, -1, -1):
            strides[j] = strides[j + 1] * self.sizes[j + 1]
        return strides

    def split(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // s) % n for s, n in zip(self._cstrides(), self.sizes)]

    def from_components(self, parts):
        return sum(np.asarray(x, dtype=np.int64) * s for x, s in zip(parts, self._cstrides()))

    def coords(self, a):
        return np.concatenate([c.coords(x) for c, x in zip(self.components, self.split(a))], axis=-1)

    def from_coords(self, c):
        c = np.asarray(c, dtype=np.int64)
        parts, start = [], 0
        for comp in self.components:
            m = len(comp.factors)
            parts.append(comp.from_coords(c[..., start:start + m]))
            start += m
        return self.from_components(parts)

    def coord_index(self, a):
        parts = [c.coord_index(x) for c, x in zip(self.components, self.split(a))]
        return self.from_components(parts)

    def _combine(self, op, *args):
        split = [self.split(a) for a in args]
        return self.from_components(
            [getattr(c, op)(*(s[i] for s in split)) for i, c in enumerate(self.components)]
        )

    def _add(self, a, b):
        return self._combine("add", a, b)

    def _neg(self, a):
        return self._combine("neg", a)

    def _mul(self, a, b):
        return self._combine("mul", a, b)

    def generating_functional(self, a):
        total = 0
        for c, x in zip(self.components, self.split(a)):
            total = total + c.generating_functional(x) * (self.exponent // c.exponent)
        return np.asarray(total, dtype=np.int64) % self.exponent


def _element_orders(add_t, zero):
    size = add_t.shape[0]
    idx = np.arange(size)
    order = np.zeros(size, dtype=np.int64)
    cur = idx.copy()
    k = 1
    while (order == 0).any():
        hit = (cur == zero) & (order == 0)
        order[hit] = k
        cur = add_t[cur, idx]
        k += 1
    return order


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _multiples(add_t, zero, g, count):
    out = np.empty(count, dtype=np.int64)
    cur = zero
    for k in range(count):
        out[k] = cur
        cur = add_t[cur, g]
    return out


def cyclic_decomposition(add_t, zero):
    """Decompose a finite abelian group (given by its table) into cyclic factors.

    Returns ``(orders, generators)`` with prime-power orders.  Per primary
    component, each new generator has maximal order in the quotient by the
    span so far and the same order in the group, which keeps the span a
    direct summand.
    """
    add_t = np.asarray(add_t, dtype=np.int64)
    size = add_t.shape[0]
    order = _element_orders(add_t, zero)
    orders, gens = [], []
    primes = sorted({p for p in range(2, size + 1) if size % p == 0 and is_prime(p)})
    for p in primes:
        comp = np.flatnonzero([_is_power_of(int(o), p) for o in order])
        span = np.zeros(size, dtype=bool)
        span[zero] = True
        span_elems = np.array([zero], dtype=np.int64)
        while len(span_elems) < len(comp):
            # order of each component element modulo the span
            qord = np.ones(len(comp), dtype=np.int64)
            cur = comp.copy()
            while True:
                todo = ~span[cur]
                if not todo.any():
                    break
                qord[todo] *= p
                nxt = cur.copy()
                for _ in range(p - 1):
                    nxt = add_t[nxt, cur]
                cur = np.where(todo, nxt, cur)
            top = qord.max()
            ok = np.flatnonzero((qord == top) & (order[comp] == top))
            g = int(comp[ok[0]])
            mult = _multiples(add_t, zero, g, int(top))
            span_elems = np.unique(add_t[span_elems[:, None], mult[None, :]].ravel())
            span[:] = False
            span[span_elems] = True
            orders.append(int(top))
            gens.append(g)
    return tuple(orders), tuple(gens)


class TableRing(Ring):
    def __init__(self, spec, check=True):
        self.spec = spec
        add = np.asarray(spec.add, dtype=np.int32)
        mul = np.asarray(spec.mul, dtype=np.int32)
        size = add.shape[0]
        if add.shape != (size, size) or mul.shape != (size, size):
            raise RingSpecError("table ring: tables must be square and equal-sized")
        if size < 2 or spec.zero == spec.one:
            raise RingSpecError("rings must satisfy 1 != 0")
        self.size = size
        self.zero_index = int(spec.zero)
        self.one_index = int(spec.one)
        self._add_t0, self._mul_t0 = add, mul
        orders, gens = cyclic_decomposition(add, self.zero_index)
        self.factors = orders
        # element at row-major coordinate rank r
        elems = np.array([self.zero_index], dtype=np.int64)
        for d, g in zip(orders, gens):
            mult = _multiples(add, self.zero_index, g, d)
            elems = add[elems[:, None], mult[None, :]].ravel().astype(np.int64)
        if len(np.unique(elems)) != size:
            raise RingSpecError("table ring: additive table is not an abelian group")
        self._elem_at_rank = elems
        self._rank_of = np.empty(size, dtype=np.int64)
        self._rank_of[elems] = np.arange(size)
        self._setup()
        self._add_t, self._mul_t = add, mul
        if check and size <= AXIOM_CHECK_LIMIT:
            check_ring_axioms(self)

    @property
    def has_tables(self):
        return True

    def _build_tables(self):
        self._add_t, self._mul_t = self._add_t0, self._mul_t0

    def coords(self, a):
        return super().coords(self._rank_of[np.asarray(a, dtype=np.int64)])

    def from_coords(self, c):
        return self._elem_at_rank[super().from_coords(c)]

    def coord_index(self, a):
        return self._rank_of[np.asarray(a, dtype=np.int64)]

    def _add(self, a, b):
        return self._add_t0[a, b].astype(np.int64)

    def _neg(self, a):
        return self.neg_table[a]

    def _mul(self, a, b):
        return self._mul_t0[a, b].astype(np.int64)

    def to_json(self):
        out = super().to_json()
        out["spec"] = self.spec.label
        return out


def check_ring_axioms(ring):
    """Exhaustive ring-axiom check on all triples; raises RingSpecError."""
    A, M = ring.add_table, ring.mul_table
    z, o = ring.zero_index, ring.one_index
    idx = np.arange(ring.size)
    if not np.array_equal(A, A.T):
        raise RingSpecError("addition is not commutative")
    if not (np.array_equal(A[z], idx) and np.array_equal(M[o], idx) and np.array_equal(M[:, o], idx)):
        raise RingSpecError("identity laws fail")
    if not (A == z).any(axis=1).all():
        raise RingSpecError("missing additive inverses")
    if not _assoc(A):
        raise RingSpecError("addition is not associative")
    if not _assoc(M):
        raise RingSpecError("multiplication is not associative")
    # a(b+c) = ab+ac and (a+b)c = ac+bc
    left = M[:, A]  # [a, b, c] -> a*(b+c)
    right = A[M[:, :, None], M[:, None, :]]  # [a, b, c] -> ab + ac
    if not np.array_equal(left, right):
        raise RingSpecError("left distributivity fails")
    left = M[A]  # [a, b, c] -> (a+b)*c
    right = A[M[:, None, :], M[None, :, :]]  # [a, b, c] -> ac + bc
    if not np.array_equal(left, right):
        raise RingSpecError("right distributivity fails")


def _assoc(T):
    # (ab)c == a(bc) on all triples
    return np.array_equal(T[T], T[:, T])


def sample_ring_axioms(ring, samples=10_000, seed=0):
    """Randomized axiom check on ``samples`` triples; returns True or raises."""
    rng = np.random.default_rng(seed)
    a, b, c = (rng.integers(0, ring.size, samples) for _ in range(3))
    add, mul = ring.add, ring.mul
    checks = {
        "additive associativity": (add(add(a, b), c), add(a, add(b, c))),
        "multiplicative associativity": (mul(mul(a, b), c), mul(a, mul(b, c))),
        "left distributivity": (mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        "right distributivity": (mul(add(a, b), c), add(mul(a, c), mul(b, c))),
        "left identity": (mul(np.full_like(a, ring.one_index), a), a),
        "right identity": (mul(a, np.full_like(a, ring.one_index)), a),
        "additive identity": (add(a, np.full_like(a, ring.zero_index)), a),
    }
    for name, (x, y) in checks.items():
        if not np.array_equal(x, y):
            raise RingSpecError(f"{ring.spec}: {name} fails")
    return True


@functools.lru_cache(maxsize=None)
def ring_from_spec(spec):
    if isinstance(spec, Zmod):
        return ZmodRing(spec)
    if isinstance(spec, GF):
        return GFRing(spec)
    if isinstance(spec, Matrix):
        return MatrixRing(spec)
    if isinstance(spec, Product):
        return ProductRing(spec)
    if isinstance(spec, Table):
        return TableRing(spec)
    raise TypeError(f"not a ring spec: {spec!r}")


def make_ring(spec):
    """Build (or fetch the cached) ring for a spec object or DSL string."""
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    return ring_from_spec(spec)


def table_ring(label, add, mul, zero=0, one=1, check=True):
    spec = Table(label, np.asarray(add), np.asarray(mul), int(zero), int(one))
    ring = TableRing(spec, check=check)
    return ring


def as_table_ring(ring, label=None):
    """Copy a tabled ring into a table ring with the same indexing."""
    return table_ring(label or f"table({ring.spec})", ring.add_table, ring.mul_table,
                      ring.zero_index, ring.one_index)


def upper_triangular(n, base):
    """Upper-triangular n-by-n matrices over ``base`` as a table ring."""
    base = make_ring(base)
    full = make_ring(Matrix(n, base.spec))
    positions = [i * n + j for i in range(n) for j in range(n) if j >= i]
    count = base.size ** len(positions)
    check_budget(f"upper-triangular table over {base.spec}", float(count) ** 2)
    digits = np.array(list(itertools.product(range(base.size), repeat=len(positions))), dtype=np.int64)
    entries = np.full((count, n * n), base.zero_index, dtype=np.int64)
    entries[:, positions] = digits
    elems = full.from_entries(entries)
    order = np.argsort(elems)

    def rank(x):
        return order[np.searchsorted(elems, x, sorter=order)]

    a = np.repeat(elems, count)
    b = np.tile(elems, count)
    add = rank(full.add(a, b)).reshape(count, count)
    mul = rank(full.mul(a, b)).reshape(count, count)
    return table_ring(f"ut({n},{base.spec})", add, mul, int(rank(full.zero_index)), int(rank(full.one_index)))


def ring_json(ring):
    return json.dumps(ring.to_json(), sort_keys=True)
