"""Symplectic geometry over F_p: the space (V, omega), Lagrangian and
oriented-Lagrangian enumeration, the symplectic group, and the Cayley
transform.

The symplectic form is fixed in the standard block shape
J = [[0, I_n], [-I_n, 0]], and subspaces are canonically represented by the
RREF of a basis matrix, so equality of subspaces is equality of matrices.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, List, Sequence

from .cyclotomic import is_odd_prime
from .fplinear import FpMatrix

# exhaustive-enumeration guards: keeps every suite at desk scale
SUPPORTED_PN = ((3, 1), (5, 1), (7, 1), (11, 1), (3, 2))
MAX_SP_ENUMERATE = 100_000
RANDOM_WALK_STEPS = 64  # length of seeded generator-product walks


class SymplecticSpace:
    __slots__ = ("p", "n")

    def __init__(self, p: int, n: int):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if n < 1:
            raise ValueError("n must be positive")
        self.p = p
        self.n = n

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def J(self) -> FpMatrix:
        return _standard_form(self.p, self.n)

    def omega(self, u: Sequence[int], v: Sequence[int]) -> int:
        """The symplectic form u^T J v."""
        p, n = self.p, self.n
        if len(u) != 2 * n or len(v) != 2 * n:
            raise ValueError("vectors must have length 2n")
        acc = 0
        for i in range(n):
            acc += u[i] * v[n + i] - u[n + i] * v[i]
        return acc % p

    def vectors(self) -> Iterator[tuple]:
        return itertools.product(range(self.p), repeat=2 * self.n)

    def half(self) -> int:
        return (self.p + 1) // 2

    def quarter(self) -> int:
        return pow(4, -1, self.p)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymplecticSpace)
                and (self.p, self.n) == (other.p, other.n))

    def __hash__(self) -> int:
        return hash((self.p, self.n))

    def __repr__(self) -> str:
        return f"SymplecticSpace(p={self.p}, n={self.n})"


@lru_cache(maxsize=None)
def _standard_form(p: int, n: int) -> FpMatrix:
    rows = []
    for i in range(n):
        row = [0] * 2 * n
        row[n + i] = 1
        rows.append(row)
    for i in range(n):
        row = [0] * 2 * n
        row[i] = -1 % p
        rows.append(row)
    return FpMatrix.from_rows(p, rows)


class Lagrangian:
    """A Lagrangian subspace, canonically stored as an RREF basis matrix."""

    __slots__ = ("space", "basis")

    def __init__(self, space: SymplecticSpace, basis: FpMatrix):
        red, rank, _ = basis.rref()
        if rank != space.n:
            raise ValueError(f"basis rank {rank}, expected {space.n}")
        basis = FpMatrix.from_rows(space.p, red.to_rows()[:space.n])
        gram = basis * space.J * basis.transpose()
        if any(e != 0 for e in gram.entries):
            raise ValueError("subspace is not isotropic")
        self.space = space
        self.basis = basis

    @property
    def pivots(self) -> tuple:
        return self.basis.rref()[2]

    def contains(self, v: Sequence[int]) -> bool:
        piv = self.pivots
        coords = tuple(v[c] for c in piv)
        lifted = tuple(
            sum(coords[i] * self.basis[i, j] for i in range(self.space.n))
            % self.space.p
            for j in range(2 * self.space.n))
        return lifted == tuple(x % self.space.p for x in v)

    def coordinates(self, v: Sequence[int]) -> tuple:
        """Coordinates of v in the RREF basis; v must lie in the subspace."""
        piv = self.pivots
        return tuple(v[c] % self.space.p for c in piv)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lagrangian) and self.space == other.space
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.space, self.basis))

    def __repr__(self) -> str:
        return f"Lagrangian({self.basis.to_rows()})"


class OrientedLagrangian:
    """A Lagrangian with an orientation scalar c in F_p^x: the top-wedge
    vector is c times the wedge of the RREF basis rows."""

    __slots__ = ("lagrangian", "orient")

    def __init__(self, lagrangian: Lagrangian, orient: int):
        p = lagrangian.space.p
        orient %= p
        if orient == 0:
            raise ValueError("orientation scalar must be nonzero")
        self.lagrangian = lagrangian
        self.orient = orient

    @property
    def space(self) -> SymplecticSpace:
        return self.lagrangian.space

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrientedLagrangian)
                and self.lagrangian == other.lagrangian
                and self.orient == other.orient)

    def __hash__(self) -> int:
        return hash((self.lagrangian, self.orient))

    def __repr__(self) -> str:
        return f"OLag({self.lagrangian.basis.to_rows()}, c={self.orient})"


def _guard(space: SymplecticSpace) -> None:
    if (space.p, space.n) not in SUPPORTED_PN:
        raise ValueError(
            f"(p, n) = ({space.p}, {space.n}) exceeds the enumeration guard; "
            f"supported: {SUPPORTED_PN}")


def _rref_subspaces(p: int, k: int, m: int) -> Iterator[FpMatrix]:
    """All k-dimensional subspaces of F_p^m as RREF basis matrices."""
    for pivots in itertools.combinations(range(m), k):
        free_slots = []
        for r in range(k):
            for c in range(pivots[r] + 1, m):
                if c not in pivots:
                    free_slots.append((r, c))
        for fill in itertools.product(range(p), repeat=len(free_slots)):
            rows = [[0] * m for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), v in zip(free_slots, fill):
                rows[r][c] = v
            yield FpMatrix.from_rows(p, rows)


def enumerate_lagrangians(space: SymplecticSpace) -> List[Lagrangian]:
    """All Lagrangians in lexicographic order of their RREF entries;
    the count is prod_{i=1..n} (p^i + 1)."""
    _guard(space)
    p, n = space.p, space.n
    J = space.J
    out = []
    for basis in _rref_subspaces(p, n, 2 * n):
        gram = basis * J * basis.transpose()
        if all(e == 0 for e in gram.entries):
            out.append(Lagrangian(space, basis))
    out.sort(key=lambda L: L.basis.entries)
    return out


def lagrangian_count(p: int, n: int) -> int:
    total = 1
    for i in range(1, n + 1):
        total *= p ** i + 1
    return total


def enumerate_oriented(space: SymplecticSpace) -> List[OrientedLagrangian]:
    """All oriented Lagrangians: each Lagrangian paired with each c in F_p^x."""
    return [OrientedLagrangian(L, c)
            for L in enumerate_lagrangians(space)
            for c in range(1, space.p)]


def wedge_pairing(Lo: OrientedLagrangian, Mo: OrientedLagrangian) -> int:
    """omega_wedge(o_L, o_M): the pairing on top wedges induced by the
    symplectic form, normalized against the symplectic volume omega^n / n!.
    Equals (-1)^(n(n-1)/2) times the Gram determinant det[omega(b_i, b'_j)]
    over the RREF bases; the sign is forced by evaluating omega^n / n! on
    e_1 ^ ... ^ e_n ^ e_{n+1} ^ ... ^ e_{2n}.  Nonzero iff L + M = V."""
    if Lo.space != Mo.space:
        raise ValueError("space mismatch")
    space = Lo.space
    p, n = space.p, space.n
    gram = FpMatrix.from_rows(p, [
        [space.omega(Lo.lagrangian.basis.row(i), Mo.lagrangian.basis.row(j))
         for j in range(n)]
        for i in range(n)])
    return (-1) ** (n * (n - 1) // 2) * Lo.orient * Mo.orient * gram.det() % p


def transverse(Lo: OrientedLagrangian, Mo: OrientedLagrangian) -> bool:
    return wedge_pairing(Lo, Mo) != 0


class SpElement:
    """An element of Sp(V), validated against g^T J g = J."""

    __slots__ = ("space", "matrix")

    def __init__(self, space: SymplecticSpace, matrix: FpMatrix):
        if (matrix.rows, matrix.cols) != (2 * space.n, 2 * space.n):
            raise ValueError("matrix must be 2n x 2n")
        J = space.J
        check = matrix.transpose() * J * matrix
        for i in range(2 * space.n):
            for j in range(2 * space.n):
                if check[i, j] != J[i, j]:
                    raise ValueError(
                        f"not symplectic: (g^T J g)[{i},{j}] = {check[i, j]}, "
                        f"expected {J[i, j]}")
        self.space = space
        self.matrix = matrix

    @staticmethod
    def identity(space: SymplecticSpace) -> "SpElement":
        return SpElement(space, FpMatrix.identity(space.p, 2 * space.n))

    def __mul__(self, other: "SpElement") -> "SpElement":
        if self.space != other.space:
            raise ValueError("space mismatch")
        return SpElement(self.space, self.matrix * other.matrix)

    def inverse(self) -> "SpElement":
        return SpElement(self.space, self.matrix.inverse())

    def apply(self, v: Sequence[int]) -> tuple:
        return self.matrix.apply(v)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SpElement) and self.space == other.space
                and self.matrix == other.matrix)

    def __hash__(self) -> int:
        return hash((self.space, self.matrix))

    def __repr__(self) -> str:
        return f"SpElement({self.matrix.to_rows()})"


def transvection(space: SymplecticSpace, u: Sequence[int], a: int) -> SpElement:
    """The symplectic transvection x -> x + a*omega(x, u)*u."""
    p, d = space.p, 2 * space.n
    # omega(x, u) = s^T x with s = J u
    s = space.J.apply(u)
    rows = [[(1 if i == j else 0) + a * u[i] * s[j] for j in range(d)]
            for i in range(d)]
    return SpElement(space, FpMatrix.from_rows(p, rows))


def _projective_reps(space: SymplecticSpace) -> List[tuple]:
    """One representative per projective point of V (first nonzero coord 1)."""
    reps = []
    for v in space.vectors():
        nz = next((x for x in v if x != 0), None)
        if nz == 1:
            reps.append(v)
    return reps


def sp_generators(space: SymplecticSpace) -> List[SpElement]:
    """A generating set: transvections t_{u,a} over projective points u and
    all nonzero multipliers a."""
    return [transvection(space, u, a)
            for u in _projective_reps(space)
            for a in range(1, space.p)]


def sp_order(p: int, n: int) -> int:
    total = p ** (n * n)
    for i in range(1, n + 1):
        total *= p ** (2 * i) - 1
    return total


def sp_enumerate(space: SymplecticSpace) -> List[SpElement]:
    """The full group by closure under multiplication; guarded by size."""
    order = sp_order(space.p, space.n)
    if order > MAX_SP_ENUMERATE:
        raise ValueError(
            f"|Sp| = {order} exceeds the enumeration guard {MAX_SP_ENUMERATE}")
    gens = sp_generators(space)
    seen = {SpElement.identity(space)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = g * h
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
        frontier = nxt
    if len(seen) != order:
        raise AssertionError(f"enumerated {len(seen)} elements, expected {order}")
    return sorted(seen, key=lambda g: g.matrix.entries)


def sp_random(space: SymplecticSpace, rng) -> SpElement:
    """Deterministic seeded element: a product of RANDOM_WALK_STEPS random
    transvections t_{u,a}, u uniform in V \\ 0, a uniform in F_p^x."""
    g = SpElement.identity(space)
    p, d = space.p, 2 * space.n
    for _ in range(RANDOM_WALK_STEPS):
        while True:
            u = tuple(rng.randrange(p) for _ in range(d))
            if any(u):
                break
        a = rng.randrange(1, p)
        g = g * transvection(space, u, a)
    return g


def act_on_lagrangian(g: SpElement, L: Lagrangian) -> Lagrangian:
    return Lagrangian(L.space, L.basis * g.matrix.transpose())


def act_on_olag(g: SpElement, Lo: OrientedLagrangian) -> OrientedLagrangian:
    """Image oriented Lagrangian: the basis is re-canonicalized to RREF and
    the orientation picks up det of the change of basis, i.e. the top wedge
    of g restricted to L in canonical coordinates."""
    if g.space != Lo.space:
        raise ValueError("space mismatch")
    space = Lo.space
    image_rows = Lo.lagrangian.basis * g.matrix.transpose()
    new_lag = Lagrangian(space, image_rows)
    piv = new_lag.pivots
    # image_rows = C * rref_basis, and rref restricted to pivot cols is I
    change = FpMatrix.from_rows(
        space.p,
        [[image_rows[i, c] for c in piv] for i in range(space.n)])
    return OrientedLagrangian(new_lag, Lo.orient * change.det())


def cayley(g: SpElement) -> FpMatrix:
    """kappa(g) = (g + I)(g - I)^{-1}; defined off the det(g - I) = 0 locus.
    The form (u, v) -> omega(kappa(g)u, v) is symmetric."""
    ident = FpMatrix.identity(g.space.p, 2 * g.space.n)
    gm = g.matrix - ident
    if gm.det() == 0:
        raise ValueError("g - I is singular: Cayley transform undefined")
    return (g.matrix + ident) * gm.inverse()
