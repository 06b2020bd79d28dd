"""Small helpers for matrices and linear systems over Q(zeta_p).

Matrices over CycNum are tuples of tuples (row major).  The sparse
elimination here is what the commutant and horizontality computations use:
systems are huge but each equation touches very few unknowns.
"""

from __future__ import annotations

from typing import Dict, List, Sequence

from .cyclotomic import CycNum


def cmat_identity(p: int, d: int) -> tuple:
    one, zero = CycNum.one(p), CycNum.zero(p)
    return tuple(tuple(one if i == j else zero for j in range(d))
                 for i in range(d))


def cmat_mul(a: Sequence, b: Sequence) -> tuple:
    bt = list(zip(*b))
    out = []
    for row in a:
        new_row = []
        for col in bt:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            if acc is None:
                acc = CycNum.zero(row[0].p)
            new_row.append(acc)
        out.append(tuple(new_row))
    return tuple(out)


def cmat_scale(c: CycNum, a: Sequence) -> tuple:
    return tuple(tuple(c * x for x in row) for row in a)


def cmat_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cmat_eq(a: Sequence, b: Sequence) -> bool:
    return all(ra == rb for ra, rb in zip(a, b)) and len(a) == len(b)

def cmat_trace(a: Sequence) -> CycNum:
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def cmat_is_scalar(a: Sequence) -> bool:
    d = len(a)
    s = a[0][0]
    for i in range(d):
        for j in range(d):
            if i == j:
                if a[i][j] != s:
                    return False
            elif not a[i][j].is_zero():
                return False
    return True


def sparse_rank(rows: List[Dict[int, CycNum]]) -> int:
    """Rank of a sparse system over Q(zeta_p); rows are {column: value}."""
    pivots: Dict[int, Dict[int, CycNum]] = {}  # pivot column -> reduced row
    for row in rows:
        row = dict(row)
        while row:
            row = {c: v for c, v in row.items() if not v.is_zero()}
            if not row:
                break
            col = min(row)
            if col not in pivots:
                inv = row[col].inverse()
                pivots[col] = {c: v * inv for c, v in row.items()}
                break
            factor = row[col]
            for c, v in pivots[col].items():
                if c in row:
                    row[c] = row[c] - factor * v
                else:
                    row[c] = -(factor * v)
            row.pop(col, None)
    return len(pivots)


def sparse_nullity(rows: List[Dict[int, CycNum]], ncols: int) -> int:
    return ncols - sparse_rank(rows)
