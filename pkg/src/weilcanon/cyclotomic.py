"""Exact arithmetic in the cyclotomic field Q(zeta_p) for an odd prime p.

Values are stored on the power basis 1, zeta, ..., zeta^(p-2) with rational
coefficients, reduced by zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  All
operations are pure and every value is immutable, so equality of coefficient
tuples is equality in the field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class CycNum:
    """An element of Q(zeta_p), canonical coefficient vector of length p-1."""

    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p: int, coeffs: Sequence[Fraction]):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._hash = None

    @staticmethod
    def rational(p: int, value) -> "CycNum":
        coeffs = [Fraction(0)] * (p - 1)
        coeffs[0] = Fraction(value)
        return CycNum(p, coeffs)

    @staticmethod
    def zero(p: int) -> "CycNum":
        return CycNum.rational(p, 0)

    @staticmethod
    def one(p: int) -> "CycNum":
        return CycNum.rational(p, 1)

    @staticmethod
    def zeta_pow(p: int, k: int) -> "CycNum":
        """zeta^k in canonical form, any integer k."""
        k %= p
        coeffs = [Fraction(0)] * (p - 1)
        if k < p - 1:
            coeffs[k] = Fraction(1)
        else:
            # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
            coeffs = [Fraction(-1)] * (p - 1)
        return CycNum(p, coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational value: {self!r}")
        return self.coeffs[0]

    def _check(self, other: "CycNum") -> None:
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycNum":
        return CycNum(self.p, [-a for a in self.coeffs])

    def __mul__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        p = self.p
        a, b = self.coeffs, other.coeffs
        # convolution with exponents folded mod p, then Phi_p reduction
        acc = [Fraction(0)] * p
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                k = i + j
                if k >= p:
                    k -= p
                acc[k] += ai * bj
        top = acc[p - 1]
        if top == 0:
            return CycNum(p, acc[: p - 1])
        return CycNum(p, [c - top for c in acc[: p - 1]])

    def scale(self, r) -> "CycNum":
        r = Fraction(r)
        return CycNum(self.p, [c * r for c in self.coeffs])

    def inverse(self) -> "CycNum":
        """Field inverse, via a linear solve over Q in the power basis."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_p)")
        p, d = self.p, self.p - 1
        # columns: coefficient vectors of self * zeta^j
        cols = []
        cur = self
        zeta = CycNum.zeta_pow(p, 1)
        for _ in range(d):
            cols.append(cur.coeffs)
            cur = cur * zeta
        # solve M x = e_0 where M[i][j] = cols[j][i]
        aug = [[cols[j][i] for j in range(d)] + [Fraction(1 if i == 0 else 0)]
               for i in range(d)]
        row = 0
        for col in range(d):
            piv = next((r for r in range(row, d) if aug[r][col] != 0), None)
            if piv is None:
                continue
            aug[row], aug[piv] = aug[piv], aug[row]
            inv = 1 / aug[row][col]
            aug[row] = [v * inv for v in aug[row]]
            for r in range(d):
                if r != row and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
            row += 1
        if row < d:
            raise ZeroDivisionError("non-invertible element (zero divisor?)")
        return CycNum(p, [aug[i][d] for i in range(d)])

    def __truediv__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return self * other.inverse()

    def conjugate(self) -> "CycNum":
        """The automorphism zeta -> zeta^(p-1) (complex conjugation)."""
        p = self.p
        out = CycNum.zero(p)
        for i, c in enumerate(self.coeffs):
            if c != 0:
                out = out + CycNum.zeta_pow(p, (p - i) % p).scale(c)
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, CycNum) and self.p == other.p
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            base = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
            terms.append(f"{c}*{base}" if i else str(c))
        return "CycNum(p=%d: %s)" % (self.p, " + ".join(terms) or "0")

    def to_json(self) -> dict:
        return {"p": self.p,
                "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "CycNum":
        return CycNum(data["p"], [Fraction(n, d) for n, d in data["coeffs"]])


@lru_cache(maxsize=None)
def psi(p: int, z: int) -> CycNum:
    """The fixed additive character z -> zeta^z of Z/p."""
    return CycNum.zeta_pow(p, z % p)


@lru_cache(maxsize=None)
def sigma(p: int, a: int) -> int:
    """Legendre character of F_p^x: +1 on squares, -1 on non-squares."""
    a %= p
    if a == 0:
        raise ValueError("sigma is only defined on the multiplicative group")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def gauss_sum(p: int) -> CycNum:
    """G(psi) = sum over z in F_p of psi(z^2 / 2), with 1/2 = (p+1)/2 mod p."""
    half = (p + 1) // 2
    total = CycNum.zero(p)
    for z in range(p):
        total = total + psi(p, half * z * z)
    return total
