"""The Heisenberg group H = V x F_p, its function spaces and models.

Group elements are plain tuples (v, z) with v a tuple of length 2n and z an
int, all reduced mod p.  The group law twists the central coordinate by half
the symplectic form: (v, z)(v', z') = (v + v', z + z' + omega(v, v')/2).

Equivariant functions are stored as dense tables on all of H, which keeps
the central/left/right equivariance invariants directly assertable.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .cyclotomic import CycNum, psi
from .cyclinalg import sparse_nullity
from .fplinear import vec_add, vec_neg, vec_sub
from .symplectic import Lagrangian, OrientedLagrangian, SymplecticSpace

HElement = Tuple[tuple, int]


class Heisenberg:
    __slots__ = ("space",)

    def __init__(self, space: SymplecticSpace):
        self.space = space

    @property
    def identity(self) -> HElement:
        return (0,) * (2 * self.space.n), 0

    def mul(self, a: HElement, b: HElement) -> HElement:
        p = self.space.p
        (va, za), (vb, zb) = a, b
        z = (za + zb + self.space.half() * self.space.omega(va, vb)) % p
        return vec_add(p, va, vb), z

    def inv(self, a: HElement) -> HElement:
        p = self.space.p
        v, z = a
        return vec_neg(p, v), (-z) % p

    def elements(self) -> Iterator[HElement]:
        for v in self.space.vectors():
            for z in range(self.space.p):
                yield v, z

    def order(self) -> int:
        return self.space.p ** (2 * self.space.n + 1)


class Transversal:
    """Coset representatives for (Z*L)\\H: elements (t, 0) with t supported
    on the non-pivot coordinates of L's RREF basis, in lexicographic order.
    Every h decomposes uniquely as (0, z) * (l, 0) * rep."""

    __slots__ = ("lagrangian", "reps", "_index", "free")

    def __init__(self, lagrangian: Lagrangian):
        space = lagrangian.space
        p, n = space.p, space.n
        piv = lagrangian.pivots
        self.lagrangian = lagrangian
        self.free = tuple(c for c in range(2 * n) if c not in piv)
        reps = []
        for fill in itertools.product(range(p), repeat=n):
            v = [0] * (2 * n)
            for c, x in zip(self.free, fill):
                v[c] = x
            reps.append((tuple(v), 0))
        self.reps = tuple(reps)
        self._index = {tuple(r[0][c] for c in self.free): i
                       for i, r in enumerate(reps)}

    def __len__(self) -> int:
        return len(self.reps)

    def decompose(self, h: HElement) -> Tuple[int, int]:
        """h = (0, z) * (l, 0) * rep_k; returns (z, k)."""
        space = self.lagrangian.space
        p = space.p
        v, z = h
        piv = self.lagrangian.pivots
        coords = tuple(v[c] for c in piv)
        basis = self.lagrangian.basis
        l = tuple(sum(coords[i] * basis[i, c] for i in range(space.n)) % p
                  for c in range(2 * space.n))
        t = vec_sub(p, v, l)
        k = self._index[tuple(t[c] for c in self.free)]
        z0 = (z - space.half() * space.omega(l, t)) % p
        return z0, k


class EquivariantFunction:
    """A function H -> Q(zeta_p) with central equivariance
    f((0,z) h) = psi(z) f(h), optionally left-invariant under a Lagrangian M
    and right-invariant under a Lagrangian L."""

    __slots__ = ("space", "left", "right", "values")

    def __init__(self, space: SymplecticSpace, left: Optional[Lagrangian],
                 right: Optional[Lagrangian], values: Dict[HElement, CycNum]):
        self.space = space
        self.left = left
        self.right = right
        self.values = values

    def __call__(self, h: HElement) -> CycNum:
        return self.values[h]

    def validate(self) -> None:
        """Check all declared equivariances over the full table."""
        H = Heisenberg(self.space)
        p = self.space.p
        for h in H.elements():
            for z in range(p):
                expect = psi(p, z) * self.values[h]
                if self.values[H.mul(((0,) * 2 * self.space.n, z), h)] != expect:
                    raise AssertionError(f"central equivariance fails at {h}, z={z}")
        if self.left is not None:
            for h in H.elements():
                for row in range(self.space.n):
                    m = (self.left.basis.row(row), 0)
                    if self.values[H.mul(m, h)] != self.values[h]:
                        raise AssertionError(f"left invariance fails at {h}")
        if self.right is not None:
            for h in H.elements():
                for row in range(self.space.n):
                    l = (self.right.basis.row(row), 0)
                    if self.values[H.mul(h, l)] != self.values[h]:
                        raise AssertionError(f"right invariance fails at {h}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, EquivariantFunction)
                and self.space == other.space and self.values == other.values)

    def first_difference(self, other: "EquivariantFunction"):
        """First (v, z) in lexicographic order where the tables differ."""
        H = Heisenberg(self.space)
        for h in H.elements():
            if self.values[h] != other.values[h]:
                return h
        return None


def convolve(K2: EquivariantFunction, K1: EquivariantFunction) -> EquivariantFunction:
    """Descent-normalized convolution over Z*M, where M = K2.right = K1.left:
    (K2 * K1)(h) = sum over a transversal of H/(Z*M) of K2(h1) K1(h1^{-1} h)."""
    if K2.space != K1.space:
        raise ValueError("space mismatch")
    if K2.right is None or K2.right != K1.left:
        raise ValueError("incompatible equivariance subgroups for convolution")
    space = K2.space
    H = Heisenberg(space)
    reps = Transversal(K2.right).reps
    pairs = [(h1, H.inv(h1)) for h1 in reps]
    zero = CycNum.zero(space.p)
    values: Dict[HElement, CycNum] = {}
    v2, v1 = K2.values, K1.values
    for h in H.elements():
        acc = zero
        for h1, h1inv in pairs:
            a = v2[h1]
            if a.is_zero():
                continue
            b = v1[H.mul(h1inv, h)]
            if b.is_zero():
                continue
            acc = acc + a * b
        values[h] = acc
    return EquivariantFunction(space, K2.left, K1.right, values)


def convolve_fullsum(K2: EquivariantFunction, K1: EquivariantFunction) -> EquivariantFunction:
    """Redundant cross-check: the (1/p^(n+1))-normalized sum over all
    factorizations h1 h2 = h.  Must agree with convolve()."""
    if K2.right is None or K2.right != K1.left:
        raise ValueError("incompatible equivariance subgroups for convolution")
    space = K2.space
    H = Heisenberg(space)
    zero = CycNum.zero(space.p)
    values: Dict[HElement, CycNum] = {h: zero for h in H.elements()}
    for h1 in H.elements():
        a = K2.values[h1]
        if a.is_zero():
            continue
        for h2 in H.elements():
            b = K1.values[h2]
            if b.is_zero():
                continue
            h = H.mul(h1, h2)
            values[h] = values[h] + a * b
    norm = Fraction(1, space.p ** (space.n + 1))
    values = {h: v.scale(norm) for h, v in values.items()}
    return EquivariantFunction(space, K2.left, K1.right, values)


def model_basis(Lo: OrientedLagrangian) -> Transversal:
    """Deterministic transversal indexing the model H_{L}; size p^n."""
    return Transversal(Lo.lagrangian)


def pi_matrix(Lo: OrientedLagrangian, h: HElement) -> tuple:
    """Matrix of right translation pi(h)[f](h') = f(h' h) in the delta basis
    on the model transversal; p^n x p^n over Q(zeta_p)."""
    space = Lo.space
    H = Heisenberg(space)
    trans = model_basis(Lo)
    p = space.p
    d = len(trans)
    zero = CycNum.zero(p)
    rows = []
    for i in range(d):
        z0, k = trans.decompose(H.mul(trans.reps[i], h))
        row = [zero] * d
        row[k] = psi(p, z0)
        rows.append(tuple(row))
    return tuple(rows)


def commutant_dimension(Lo: OrientedLagrangian) -> int:
    """Dimension over Q(zeta_p) of {X : X pi(h) = pi(h) X for all h},
    via an exact sparse linear solve.  Generators of H suffice."""
    space = Lo.space
    p, n = space.p, space.n
    d = p ** n
    gens: List[HElement] = []
    for i in range(2 * n):
        v = [0] * (2 * n)
        v[i] = 1
        gens.append((tuple(v), 0))
    gens.append(((0,) * (2 * n), 1))
    rows: List[Dict[int, CycNum]] = []
    for h in gens:
        mat = pi_matrix(Lo, h)
        # pi is a psi-weighted permutation: row i has one entry at perm[i]
        perm = [next(j for j in range(d) if not mat[i][j].is_zero())
                for i in range(d)]
        coef = [mat[i][perm[i]] for i in range(d)]
        invperm = [0] * d
        for i, j in enumerate(perm):
            invperm[j] = i
        for i in range(d):
            for j in range(d):
                # (X pi)_{ij} - (pi X)_{ij} = 0
                row: Dict[int, CycNum] = {}
                a = i * d + invperm[j]
                b = perm[i] * d + j
                row[a] = coef[invperm[j]]
                row[b] = row.get(b, CycNum.zero(p)) - coef[i]
                rows.append(row)
    return sparse_nullity(rows, d * d)
