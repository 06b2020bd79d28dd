"""Exact linear algebra over the prime field F_p.

Matrices are immutable, entries stored row-major as a flat tuple of ints in
0..p-1.  Vectors are plain tuples of ints.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .cyclotomic import is_odd_prime


class FpMatrix:
    __slots__ = ("p", "rows", "cols", "entries")

    def __init__(self, p: int, rows: int, cols: int, entries: Sequence[int]):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        self.p = p
        self.rows = rows
        self.cols = cols
        self.entries = tuple(e % p for e in entries)

    @staticmethod
    def from_rows(p: int, rows: Sequence[Sequence[int]]) -> "FpMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = [e for row in rows for e in row]
        return FpMatrix(p, nr, nc, flat)

    @staticmethod
    def identity(p: int, n: int) -> "FpMatrix":
        return FpMatrix(p, n, n, [1 if i == j else 0
                                  for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(p: int, rows: int, cols: int) -> "FpMatrix":
        return FpMatrix(p, rows, cols, [0] * (rows * cols))

    def __getitem__(self, idx) -> int:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def _check_same_shape(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise ValueError("prime mismatch")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_shape(other)
        return FpMatrix(self.p, self.rows, self.cols,
                        [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_shape(other)
        return FpMatrix(self.p, self.rows, self.cols,
                        [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(self.p, self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("prime mismatch")
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} * "
                f"{other.rows}x{other.cols}")
        p = self.p
        out = []
        ocols = [other.col(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum(a * b for a, b in zip(r, c)) % p)
        return FpMatrix(p, self.rows, other.cols, out)

    def scale(self, s: int) -> "FpMatrix":
        return FpMatrix(self.p, self.rows, self.cols,
                        [s * a for a in self.entries])

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.cols, self.rows,
                        [self[i, j] for j in range(self.cols)
                         for i in range(self.rows)])

    def apply(self, v: Sequence[int]) -> tuple:
        """Matrix times column vector, returned as a tuple."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        p = self.p
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) % p
                     for i in range(self.rows))

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        p = self.p
        m = self.to_rows()
        n = self.rows
        d = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = -d
            d = d * m[col][col] % p
            inv = pow(m[col][col], -1, p)
            for r in range(col + 1, n):
                if m[r][col]:
                    f = m[r][col] * inv % p
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[col])]
        return d % p

    def inverse(self) -> "FpMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        p, n = self.p, self.rows
        aug = [list(self.row(i)) + [1 if i == j else 0 for j in range(n)]
               for i in range(n)]
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, n) if aug[r][col]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[row], aug[piv] = aug[piv], aug[row]
            inv = pow(aug[row][col], -1, p)
            aug[row] = [v * inv % p for v in aug[row]]
            for r in range(n):
                if r != row and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[row])]
            row += 1
        return FpMatrix.from_rows(p, [r[n:] for r in aug])

    def rref(self) -> tuple:
        """Reduced row echelon form; returns (matrix, rank, pivot columns)."""
        p = self.p
        m = self.to_rows()
        nr, nc = self.rows, self.cols
        pivots = []
        row = 0
        for col in range(nc):
            piv = next((r for r in range(row, nr) if m[r][col]), None)
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            inv = pow(m[row][col], -1, p)
            m[row] = [v * inv % p for v in m[row]]
            for r in range(nr):
                if r != row and m[r][col]:
                    f = m[r][col]
                    m[r] = [(v - f * w) % p for v, w in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
            if row == nr:
                break
        return FpMatrix.from_rows(p, m) if nr else self, row, tuple(pivots)

    def solve(self, b: "FpMatrix") -> Optional["FpMatrix"]:
        """Any x with self * x = b, or None if the system is inconsistent."""
        if self.p != b.p:
            raise ValueError("prime mismatch")
        if self.rows != b.rows:
            raise ValueError("dimension mismatch")
        p = self.p
        nc = self.cols
        aug = FpMatrix(p, self.rows, nc + b.cols,
                       [e for i in range(self.rows)
                        for e in self.row(i) + b.row(i)])
        red, rank, pivots = aug.rref()
        if any(c >= nc for c in pivots):
            return None
        x = [[0] * b.cols for _ in range(nc)]
        for r, c in enumerate(pivots):
            for j in range(b.cols):
                x[c][j] = red[r, nc + j]
        return FpMatrix.from_rows(p, x) if nc else FpMatrix(p, 0, b.cols, [])

    def kernel_basis(self) -> list:
        """Basis (list of tuples) of the right kernel."""
        p = self.p
        red, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [0] * self.cols
            v[f] = 1
            for r, c in enumerate(pivots):
                v[c] = (-red[r, f]) % p
            basis.append(tuple(v))
        return basis

    def __eq__(self, other) -> bool:
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.p, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.to_rows()})"

    def to_json(self) -> dict:
        return {"p": self.p, "rows": self.rows, "cols": self.cols,
                "entries": list(self.entries)}

    @staticmethod
    def from_json(data: dict) -> "FpMatrix":
        return FpMatrix(data["p"], data["rows"], data["cols"], data["entries"])


def vec_add(p: int, u: Sequence[int], v: Sequence[int]) -> tuple:
    return tuple((a + b) % p for a, b in zip(u, v))

def vec_sub(p: int, u: Sequence[int], v: Sequence[int]) -> tuple:
    return tuple((a - b) % p for a, b in zip(u, v))

def vec_neg(p: int, u: Sequence[int]) -> tuple:
    return tuple((-a) % p for a in u)

def vec_scale(p: int, s: int, u: Sequence[int]) -> tuple:
    return tuple(s * a % p for a in u)
