"""Integer noncommutative polynomials and the point sets they cut out.

A polynomial is a sum of words ``k * X_{i1} X_{i2} ... X_{ir}`` with nonzero
integer ``k`` written on the left.  There is no constant term; graph
varieties carry the translation ``c`` separately.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from ._backend import check_budget
from .rings import Element, _as_index, make_ring


class PolynomialSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class NcPolynomial:
    words: tuple  # ((coeff, (letter, ...)), ...), letters 1-based
    nvars: int

    def __post_init__(self):
        for coeff, letters in self.words:
            if coeff == 0:
                raise ValueError("zero coefficients are not stored")
            if not letters:
                raise ValueError("constant terms are not allowed")
            if min(letters) < 1 or max(letters) > self.nvars:
                raise ValueError(f"variable index out of range 1..{self.nvars}")

    @classmethod
    def from_words(cls, words, nvars=None):
        merged = {}
        for coeff, letters in words:
            letters = tuple(int(x) for x in letters)
            if not letters:
                raise ValueError("constant terms are not allowed")
            merged[letters] = merged.get(letters, 0) + int(coeff)
        items = sorted(((c, w) for w, c in merged.items() if c != 0), key=lambda t: (len(t[1]), t[1]))
        top = max((max(w) for _, w in items), default=0)
        if nvars is None:
            nvars = top
        elif nvars < top:
            raise ValueError(f"polynomial uses x{top} but nvars = {nvars}")
        return cls(tuple(items), nvars)

    @property
    def degree(self):
        return max((len(w) for _, w in self.words), default=0)

    def with_nvars(self, nvars):
        return NcPolynomial.from_words(self.words, nvars)

    def __str__(self):
        if not self.words:
            return "0"
        parts = []
        for coeff, letters in self.words:
            runs = []
            for x in letters:
                if runs and runs[-1][0] == x:
                    runs[-1][1] += 1
                else:
                    runs.append([x, 1])
            body = "*".join(f"x{x}" if n == 1 else f"x{x}^{n}" for x, n in runs)
            mag = abs(coeff)
            term = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + term)
        return " ".join(parts)


_POLY_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|([+\-*^]))")


def parse_poly(text, nvars=None):
    """Parse ``term (+ term)*`` with ``term = [int*] var (* var)*`` and ``xK^m`` sugar."""
    src = text.strip().lower()
    tokens = []
    pos = 0
    while pos < len(src):
        m = _POLY_TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at {pos} in {text!r}")
        num, var, sym = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif var is not None:
            tokens.append(("var", int(var)))
        else:
            tokens.append(("sym", sym))
        pos = m.end()
        while pos < len(src) and src[pos].isspace():
            pos += 1
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        tok = peek()
        if tok[0] is None:
            raise PolynomialSyntaxError(f"unexpected end of {text!r}")
        i += 1
        return tok

    def factor():
        kind, val = take()
        if kind != "var":
            raise PolynomialSyntaxError(f"expected a variable xK in {text!r}")
        if val < 1:
            raise PolynomialSyntaxError("variables are numbered from x1")
        reps = 1
        if peek() == ("sym", "^"):
            take()
            kind, reps = take()
            if kind != "int" or reps < 1:
                raise PolynomialSyntaxError(f"bad exponent in {text!r}")
        return [val] * reps

    def term(sign):
        coeff = sign
        letters = []
        if peek()[0] == "int":
            _, k = take()
            if peek() != ("sym", "*"):
                raise PolynomialSyntaxError(f"constant terms are not allowed: {text!r}")
            take()
            coeff *= k
        letters.extend(factor())
        while peek() == ("sym", "*"):
            take()
            letters.extend(factor())
        return coeff, letters

    words = []
    sign = 1
    if peek() == ("sym", "-"):
        take()
        sign = -1
    words.append(term(sign))
    while peek()[0] is not None:
        kind, val = take()
        if kind != "sym" or val not in "+-":
            raise PolynomialSyntaxError(f"expected '+' or '-' in {text!r}")
        words.append(term(1 if val == "+" else -1))
    return NcPolynomial.from_words(words, nvars)


def paraboloid(d):
    """x1^2 + ... + x_{d-1}^2."""
    if d < 2:
        raise ValueError("paraboloid needs d >= 2")
    return NcPolynomial.from_words([(1, (i, i)) for i in range(1, d)], d - 1)


def random_polynomial(rng, nvars, max_terms=3, max_degree=3, max_coeff=3):
    """A random nonzero constant-free polynomial (for property tests)."""
    while True:
        words = []
        for _ in range(int(rng.integers(1, max_terms + 1))):
            length = int(rng.integers(1, max_degree + 1))
            letters = tuple(int(x) for x in rng.integers(1, nvars + 1, size=length))
            coeff = int(rng.integers(1, max_coeff + 1)) * int(rng.choice([-1, 1]))
            words.append((coeff, letters))
        poly = NcPolynomial.from_words(words, nvars)
        if poly.words:
            return poly


def evaluate(f, ring, point):
    """Evaluate ``f`` at a tuple of ring elements (ints, Elements or index arrays)."""
    ring = make_ring(ring)
    scalar_elements = all(isinstance(x, Element) for x in point)
    xs = [np.asarray(_as_index(ring, x), dtype=np.int64) for x in point]
    if len(xs) < f.nvars:
        raise ValueError(f"polynomial needs {f.nvars} arguments, got {len(xs)}")
    shape = np.broadcast_shapes(*(x.shape for x in xs)) if xs else ()
    acc = np.full(shape, ring.zero_index, dtype=np.int64)
    for coeff, letters in f.words:
        val = np.broadcast_to(xs[letters[0] - 1], shape)
        for x in letters[1:]:
            val = ring.mul(val, xs[x - 1])
        if coeff != 1:
            k = ring.integer_image(coeff).index
            val = ring.mul(np.full(shape, k, dtype=np.int64), val)
        acc = ring.add(acc, val)
    acc = np.asarray(acc, dtype=np.int64)
    if acc.ndim == 0:
        return ring.element(int(acc)) if scalar_elements else int(acc)
    return acc


# --------------------------------------------------------------------------
# varieties


@dataclass(frozen=True)
class Graph:
    f: NcPolynomial
    c: int = 0

    def __str__(self):
        return f"graph({self.f};c={self.c})"


@dataclass(frozen=True)
class Hamming:
    j: int = 1

    def __str__(self):
        return f"hamming(j={self.j})"


@dataclass(frozen=True)
class Explicit:
    points: tuple  # point indices

    def __str__(self):
        return f"explicit({len(self.points)})"


@dataclass(frozen=True, eq=False)
class PointSet:
    """Sorted mixed-radix indices of points of R^d (first coordinate most significant)."""

    ring: object
    d: int
    indices: np.ndarray
    label: str = "explicit"
    _elements: list = field(default_factory=list, repr=False)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, point):
        idx = point_index(self.ring, point)
        pos = np.searchsorted(self.indices, idx)
        return bool(pos < len(self.indices) and self.indices[pos] == idx)

    def contains_indices(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        pos = np.searchsorted(self.indices, idx)
        pos = np.minimum(pos, max(len(self.indices) - 1, 0))
        if len(self.indices) == 0:
            return np.zeros(idx.shape, dtype=bool)
        return self.indices[pos] == idx

    def elements(self):
        """``(N, d)`` array of element indices."""
        if not self._elements:
            self._elements.append(split_points(self.ring, self.d, self.indices))
        return self._elements[0]

    def to_csv(self, fh):
        fh.write(f"# ring={self.ring.spec}\n# d={self.d}\n# variety={self.label}\n")
        fh.write("index\n")
        for i in self.indices.tolist():
            fh.write(f"{i}\n")


def point_index(ring, point):
    out = 0
    for x in point:
        out = out * ring.size + int(_as_index(ring, x))
    return out


def join_points(ring, elements):
    elements = np.asarray(elements, dtype=np.int64)
    out = np.zeros(elements.shape[:-1], dtype=np.int64)
    for b in range(elements.shape[-1]):
        out = out * ring.size + elements[..., b]
    return out


def split_points(ring, d, indices):
    indices = np.asarray(indices, dtype=np.int64)
    q = ring.size
    out = np.empty(indices.shape + (d,), dtype=np.int64)
    rest = indices.copy()
    for b in range(d - 1, -1, -1):
        out[..., b] = rest % q
        rest //= q
    return out


def read_points_csv(fh, ring=None):
    meta = {}
    rows = []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            meta[key.strip()] = val.strip()
        elif line != "index":
            rows.append(int(line))
    ring = make_ring(ring if ring is not None else meta["ring"])
    return PointSet(ring, int(meta["d"]), np.array(sorted(rows), dtype=np.int64), meta.get("variety", "explicit"))


def explicit_points(ring, d, points):
    """Point set from d-tuples of elements or from point indices."""
    ring = make_ring(ring)
    idx = []
    for p in points:
        idx.append(int(p) if np.isscalar(p) and not isinstance(p, Element) else point_index(ring, p))
    arr = np.unique(np.array(idx, dtype=np.int64))
    if len(arr) and (arr[0] < 0 or arr[-1] >= ring.size**d):
        raise ValueError("point index out of range")
    return PointSet(ring, d, arr, f"explicit({len(arr)})")


def graph_values(f, c, ring, d, start=0, stop=None):
    """f(x) + c*1 for x in R^{d-1}, x enumerated in index order."""
    q = ring.size
    total = q ** (d - 1)
    stop = total if stop is None else stop
    t = np.arange(start, stop, dtype=np.int64)
    xs = split_points(ring, d - 1, t)
    y = evaluate(f.with_nvars(max(f.nvars, d - 1)), ring, [xs[:, i] for i in range(d - 1)])
    return ring.add(np.asarray(y, dtype=np.int64), ring.integer_image(c).index)


def variety_points(spec, ring, d, budget=None, force=False):
    """Materialize a variety as a sorted PointSet."""
    ring = make_ring(ring)
    q = ring.size
    if isinstance(spec, Explicit):
        return explicit_points(ring, d, spec.points)
    if isinstance(spec, Graph):
        if spec.f.nvars > d - 1:
            raise ValueError(f"polynomial has {spec.f.nvars} variables but d - 1 = {d - 1}")
        total = q ** (d - 1)
        check_budget(f"graph points over {ring.spec}", total, budget, force)
        chunk = 1 << 20
        parts = []
        for start in range(0, total, chunk):
            stop = min(total, start + chunk)
            y = graph_values(spec.f, spec.c, ring, d, start, stop)
            parts.append(np.arange(start, stop, dtype=np.int64) * q + y)
        return PointSet(ring, d, np.concatenate(parts), str(spec))
    if isinstance(spec, Hamming):
        j = ring.integer_image(spec.j).index
        if not ring.is_unit(j):
            raise ValueError(f"hamming: {spec.j}*1 is not a unit of {ring.spec}")
        if d < 2:
            raise ValueError("hamming needs d >= 2")
        units = ring.unit_indices()
        total = len(units) ** (d - 1)
        check_budget(f"hamming points over {ring.spec}", total, budget, force)
        grids = np.meshgrid(*([units] * (d - 1)), indexing="ij")
        xs = [g.ravel() for g in grids]
        prod = xs[0]
        for x in xs[1:]:
            prod = ring.mul(prod, x)
        inv = ring.inverse_table[np.asarray(prod)]
        last = ring.mul(inv, np.full_like(inv, j))
        idx = join_points(ring, np.stack(xs + [np.asarray(last)], axis=-1))
        return PointSet(ring, d, np.sort(idx), str(spec))
    raise TypeError(f"unknown variety spec {spec!r}")
