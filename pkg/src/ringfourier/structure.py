"""One-sided ideals, the Jacobson radical and quotient rings (tabled rings only)."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from ._backend import check_budget
from .rings import AXIOM_CHECK_LIMIT, TABLE_LIMIT, _as_index, make_ring, table_ring

SIDES = ("left", "right", "two-sided")


def _require_tables(ring, what):
    if ring.size > TABLE_LIMIT:
        raise ValueError(f"{what}: |R| = {ring.size} exceeds {TABLE_LIMIT}")


@dataclass(eq=False)
class IdealSet:
    ring: object
    side: str
    elements: np.ndarray  # sorted element indices
    generators: tuple = field(default=())

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return self.size

    def __contains__(self, x):
        x = _as_index(self.ring, x)
        k = np.searchsorted(self.elements, x)
        return bool(k < len(self.elements) and self.elements[k] == x)

    @property
    def proper(self):
        return self.ring.one_index not in self

    @property
    def mask(self):
        m = np.zeros(self.ring.size, dtype=bool)
        m[self.elements] = True
        return m

    def key(self):
        return self.mask.tobytes()

    def is_closed(self, side=None):
        """Exhaustive closure check: additive subgroup, absorbs R on the given side."""
        side = side or self.side
        R = self.ring
        mask = self.mask
        I = self.elements
        if not mask[R.zero_index] or not mask[R.add_table[np.ix_(I, I)]].all():
            return False
        r = np.arange(R.size)
        if side in ("left", "two-sided") and not mask[R.mul_table[np.ix_(r, I)]].all():
            return False
        if side in ("right", "two-sided") and not mask[R.mul_table[np.ix_(I, r)]].all():
            return False
        return True

    def to_dict(self):
        return {"side": self.side, "size": self.size, "proper": self.proper,
                "generators": [int(g) for g in self.generators]}


def _from_mask(ring, side, mask, gens=()):
    return IdealSet(ring, side, np.flatnonzero(mask).astype(np.int64), tuple(gens))


def additive_closure(ring, elems):
    """Mask of the additive subgroup generated by ``elems``."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero_index] = True
    add = ring.add_table
    for g in np.unique(np.asarray(elems, dtype=np.int64)):
        if mask[g]:
            continue
        layer = np.flatnonzero(mask)
        while True:
            layer = add[layer, g]
            if mask[layer].all():
                break
            mask[layer] = True
    return mask


def principal_ideal(ring, x, side="left"):
    ring = make_ring(ring)
    _require_tables(ring, "principal_ideal")
    x = _as_index(ring, x)
    T = ring.mul_table
    if side == "left":
        mask = np.zeros(ring.size, dtype=bool)
        mask[T[:, x]] = True
    elif side == "right":
        mask = np.zeros(ring.size, dtype=bool)
        mask[T[x, :]] = True
    elif side == "two-sided":
        mask = additive_closure(ring, T[T[:, x], :].ravel())
    else:
        raise ValueError(f"side must be one of {SIDES}")
    return _from_mask(ring, side, mask, (x,))


def ideal_sum(I, J):
    R = I.ring
    mask = np.zeros(R.size, dtype=bool)
    mask[R.add_table[np.ix_(I.elements, J.elements)]] = True
    return _from_mask(R, I.side, mask, tuple(sorted(set(I.generators) | set(J.generators))))


def _minimize_generators(ideal):
    gens = list(ideal.generators)
    R, side = ideal.ring, ideal.side
    key = ideal.key()
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if rest and _generated(R, side, rest).key() == key:
            gens = rest
    ideal.generators = tuple(gens)
    return ideal


def _generated(ring, side, gens):
    out = principal_ideal(ring, gens[0], side)
    for g in gens[1:]:
        out = ideal_sum(out, principal_ideal(ring, g, side))
    return out


def all_ideals(ring, side="left", budget=None, force=False):
    """Every ideal of the given side, sorted by size then elements."""
    ring = make_ring(ring)
    _require_tables(ring, "all_ideals")
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    check_budget(f"ideal enumeration in {ring.spec}", float(ring.size) ** 2, budget, force)
    found = {}
    for x in range(ring.size):
        I = principal_ideal(ring, x, side)
        found.setdefault(I.key(), I)
    frontier = list(found.values())
    while frontier:
        fresh = []
        current = list(found.values())
        for A in frontier:
            for B in current:
                S = ideal_sum(A, B)
                k = S.key()
                if k not in found:
                    found[k] = S
                    fresh.append(S)
        frontier = fresh
    ideals = sorted(found.values(), key=lambda I: (I.size, I.elements.tolist()))
    return [_minimize_generators(I) for I in ideals]


def proper_ideals(ring, side="left"):
    return [I for I in all_ideals(ring, side) if I.proper]


def max_proper_ideal_size(ring, side="left"):
    return max(I.size for I in proper_ideals(ring, side))


def ideal_lattice_json(ring, sides=("left", "right")):
    return json.dumps([I.to_dict() for s in sides for I in all_ideals(ring, s)])


def zero_column_ideal(ring, col=None):
    """Matrices whose column ``col`` (1-based, default last) vanishes: a left ideal."""
    n = ring.n
    col = n if col is None else col
    e = ring.entries(np.arange(ring.size, dtype=np.int64))
    zero = ring.base.zero_index
    mask = np.all(e[:, [i * n + col - 1 for i in range(n)]] == zero, axis=1)
    return _from_mask(ring, "left", mask)


def ideal_product(I, J):
    """Additive closure of ``{i j}``."""
    R = I.ring
    prods = R.mul_table[np.ix_(I.elements, J.elements)].ravel()
    return _from_mask(R, "two-sided", additive_closure(R, prods))


# --------------------------------------------------------------------------
# quotients and the radical


def quotient_ring(ring, ideal, label=None):
    """``(R/I, projection)`` with cosets represented by their least element index."""
    R = make_ring(ring)
    _require_tables(R, "quotient_ring")
    if not ideal.is_closed("two-sided"):
        raise ValueError("quotient needs a two-sided ideal")
    if not ideal.proper:
        raise ValueError("quotient by an improper ideal")
    reps_of = R.add_table[:, ideal.elements].min(axis=1).astype(np.int64)
    reps = np.unique(reps_of)
    proj = np.searchsorted(reps, reps_of).astype(np.int64)
    add = proj[R.add_table[np.ix_(reps, reps)]]
    mul = proj[R.mul_table[np.ix_(reps, reps)]]
    name = label or f"{R.spec}/<{ideal.size}>"
    Q = table_ring(name, add, mul, int(proj[R.zero_index]), int(proj[R.one_index]),
                   check=len(reps) <= AXIOM_CHECK_LIMIT)
    return Q, proj


def radical_mask(ring):
    """``x`` with ``1 - y x`` invertible for every ``y``."""
    R = make_ring(ring)
    _require_tables(R, "jacobson_radical")
    check_budget(f"radical of {R.spec}", float(R.size) ** 2)
    units = R.unit_mask
    one_minus = R.sub(R.one_index, R.mul_table.astype(np.int64))  # [y, x] -> 1 - y x
    return units[one_minus].all(axis=0)


@dataclass(eq=False)
class RadicalReport:
    ring: object
    radical: IdealSet
    quotient: object
    projection: np.ndarray

    @property
    def size(self):
        return self.radical.size

    def to_dict(self):
        return {"ring": str(self.ring.spec), "radical_size": self.size,
                "quotient_size": self.quotient.size, "radical": self.radical.elements.tolist()}


def maximal_ideals(ideals):
    proper = [I for I in ideals if I.proper]
    out = []
    for I in proper:
        m = I.mask
        if not any(J.size > I.size and np.all(J.mask[m]) for J in proper):
            out.append(I)
    return out


def jacobson_radical(ring):
    R = make_ring(ring)
    mask = radical_mask(R)
    J = _from_mask(R, "two-sided", mask)
    assert J.is_closed("two-sided"), "radical is not a two-sided ideal"
    if R.size <= AXIOM_CHECK_LIMIT:
        inter = np.ones(R.size, dtype=bool)
        for M in maximal_ideals(all_ideals(R, "left")):
            inter &= M.mask
        assert np.array_equal(inter, mask), "radical differs from the intersection of maximal left ideals"
    if J.size == 1:
        Q, proj = R, np.arange(R.size, dtype=np.int64)
    else:
        Q, proj = quotient_ring(R, J, f"{R.spec}/J")
        if Q.size <= AXIOM_CHECK_LIMIT:
            assert radical_mask(Q).sum() == 1, "quotient by the radical is not semisimple"
    return RadicalReport(R, J, Q, proj)


def is_homomorphism(R, S, phi):
    """Exhaustive check that the index map ``phi: R -> S`` preserves +, * and 1."""
    phi = np.asarray(phi, dtype=np.int64)
    if phi[R.one_index] != S.one_index:
        return False
    A = phi[R.add_table]
    M = phi[R.mul_table]
    return bool(np.array_equal(A, S.add_table[np.ix_(phi, phi)])
                and np.array_equal(M, S.mul_table[np.ix_(phi, phi)]))


def ring_isomorphism(R, S, limit=10**6):
    """An index map ``R -> S`` that is a ring isomorphism, or ``None``."""
    R, S = make_ring(R), make_ring(S)
    if R.size != S.size:
        return None
    _require_tables(R, "ring_isomorphism")
    gens_coords = R.coord_table  # (|R|, m) in R's cyclic coordinates
    fS = np.array(S.factors, dtype=np.int64)
    S_coords = S.coord_table
    order_S = _additive_orders(S)
    choices = []
    for d in R.factors:
        choices.append([h for h in range(S.size) if d % order_S[h] == 0])
    count = 1
    for c in choices:
        count *= len(c)
    check_budget(f"isomorphism search {R.spec} -> {S.spec}", count, limit)
    for images in itertools.product(*choices):
        H = S_coords[list(images)]  # (m, mS)
        phi_coords = (gens_coords @ H) % fS
        phi = np.asarray(S.from_coords(phi_coords), dtype=np.int64)
        if len(np.unique(phi)) != S.size:
            continue
        if is_homomorphism(R, S, phi):
            return phi
    return None


def _additive_orders(R):
    orders = np.ones(R.size, dtype=np.int64)
    c = R.coord_table
    f = np.array(R.factors, dtype=np.int64)
    for i in range(R.size):
        o = 1
        for x, d in zip(c[i], f):
            o = np.lcm(o, d // np.gcd(x, d))
        orders[i] = o
    return orders


__all__ = [
    "IdealSet",
    "RadicalReport",
    "additive_closure",
    "all_ideals",
    "ideal_lattice_json",
    "ideal_product",
    "jacobson_radical",
    "max_proper_ideal_size",
    "principal_ideal",
    "quotient_ring",
    "ring_isomorphism",
    "zero_column_ideal",
]
