"""Exact dense linear algebra over the rationals and prime fields.

Matrices are plain sequences of rows; entries are ints or ``Fraction``s
when working over the rationals, and canonical residues ``0..p-1`` over
GF(p).  All routines are pure and deterministic: the pivot is always the
first nonzero entry in column order, never chosen by magnitude (the
arithmetic is exact, so only reproducibility matters).

Rank over the rationals is computed by fraction-free integer elimination
(rows are scaled to integers first, and the working rows are kept
primitive by dividing out their gcd), which keeps the very sparse
boundary matrices produced elsewhere in this package fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "FieldSpec",
    "QQ",
    "GF2",
    "LinalgGuardError",
    "is_prime",
    "rank",
    "nullspace_basis",
    "in_column_space",
]

# Elimination refuses matrices with more cells than this (see set_max_cells).
DEFAULT_MAX_CELLS = 1 << 24
_max_cells = DEFAULT_MAX_CELLS


class LinalgGuardError(RuntimeError):
    """Raised when a matrix exceeds the configured size guard."""


def set_max_cells(n: int) -> None:
    global _max_cells
    _max_cells = int(n)


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < 2**31):
                raise ValueError(f"field characteristic out of range: {self.p}")
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse a field selector: "q" for the rationals, "gf:p" for GF(p)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "rationals"):
            return cls()
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        if t.startswith("gf") and t[2:].isdigit():
            return cls(int(t[2:]))
        raise ValueError(f"unknown field selector: {text!r}")

    def __str__(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"


QQ = FieldSpec()
GF2 = FieldSpec(2)


def _shape(matrix) -> tuple[int, int]:
    nrows = len(matrix)
    if nrows == 0:
        return 0, 0
    ncols = len(matrix[0])
    for row in matrix:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    if nrows * ncols > _max_cells:
        raise LinalgGuardError(
            f"matrix has {nrows}x{ncols} cells, above the guard of {_max_cells}"
        )
    return nrows, ncols


def _int_rows(matrix) -> list[list[int]]:
    """Copy rows, clearing denominators row by row (rank-preserving)."""
    out = []
    for row in matrix:
        if any(isinstance(x, Fraction) for x in row):
            scale = 1
            for x in row:
                if isinstance(x, Fraction):
                    scale = scale * x.denominator // gcd(scale, x.denominator)
            out.append([int(x * scale) for x in row])
        else:
            out.append([int(x) for x in row])
    return out


def _rank_int(rows: list[list[int]]) -> int:
    """Fraction-free elimination over the integers, rows kept primitive."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, m):
            q = rows[i][col]
            if not q:
                continue
            g = gcd(p, q)
            pp, qq = p // g, q // g
            row = rows[i]
            new = [pp * row[j] - qq * prow[j] for j in range(col + 1, n)]
            content = 0
            for x in new:
                content = gcd(content, x)
                if content == 1:
                    break
            if content > 1:
                new = [x // content for x in new]
            rows[i] = [0] * (col + 1) + new
        r += 1
        if r == m:
            break
    return r


def _rank_gf2(matrix) -> int:
    masks = []
    for row in matrix:
        acc = 0
        for j, x in enumerate(row):
            if int(x) & 1:
                acc |= 1 << j
        if acc:
            masks.append(acc)
    r = 0
    while masks:
        piv = masks.pop()
        low = piv & -piv
        r += 1
        masks = [m ^ piv if m & low else m for m in masks]
        masks = [m for m in masks if m]
    return r


def _rank_mod(matrix, p: int) -> int:
    rows = [[int(x) % p for x in row] for row in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[col], p - 2, p)
        for i in range(r + 1, m):
            q = rows[i][col]
            if not q:
                continue
            factor = q * inv % p
            row = rows[i]
            for j in range(col, n):
                row[j] = (row[j] - factor * prow[j]) % p
        r += 1
        if r == m:
            break
    return r


def rank(matrix, field: FieldSpec) -> int:
    """Exact rank of `matrix` over `field`."""
    nrows, ncols = _shape(matrix)
    if nrows == 0 or ncols == 0:
        return 0
    if field.is_rational:
        return _rank_int(_int_rows(matrix))
    if field.p == 2:
        return _rank_gf2(matrix)
    return _rank_mod(matrix, field.p)


def _rref(matrix, field: FieldSpec):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    nrows, ncols = _shape(matrix)
    p = field.p
    if field.is_rational:
        rows = [[Fraction(x) for x in row] for row in matrix]
    else:
        rows = [[int(x) % p for x in row] for row in matrix]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = Fraction(1) / prow[col] if p is None else pow(prow[col], p - 2, p)
        if p is None:
            rows[r] = prow = [x * inv for x in prow]
        else:
            rows[r] = prow = [x * inv % p for x in prow]
        for i in range(nrows):
            if i == r or not rows[i][col]:
                continue
            q = rows[i][col]
            row = rows[i]
            if p is None:
                rows[i] = [row[j] - q * prow[j] for j in range(ncols)]
            else:
                rows[i] = [(row[j] - q * prow[j]) % p for j in range(ncols)]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def nullspace_basis(matrix, field: FieldSpec) -> list[list]:
    """Basis of the right kernel of `matrix` over `field`.

    Each returned vector is checked to satisfy matrix @ v = 0.
    """
    nrows, ncols = _shape(matrix)
    if ncols == 0:
        return []
    if nrows == 0:
        rows, pivots = [], []
    else:
        rows, pivots = _rref(matrix, field)
    pivot_of_col = {c: r for r, c in enumerate(pivots)}
    zero = Fraction(0) if field.is_rational else 0
    one = Fraction(1) if field.is_rational else 1
    basis = []
    for free in range(ncols):
        if free in pivot_of_col:
            continue
        v = [zero] * ncols
        v[free] = one
        for col, r in pivot_of_col.items():
            entry = rows[r][free]
            v[col] = -entry if field.is_rational else (-entry) % field.p
        basis.append(v)
    for v in basis:
        for row in matrix:
            s = sum(a * b for a, b in zip(row, v))
            if (s if field.is_rational else s % field.p) != 0:
                raise AssertionError("nullspace vector fails verification")
    return basis


def in_column_space(matrix, vector, field: FieldSpec) -> bool:
    """True iff `vector` is a linear combination of the columns of `matrix`."""
    nrows, ncols = _shape(matrix)
    if nrows == 0:
        return True
    if len(vector) != nrows:
        raise ValueError("vector length does not match row count")
    if ncols == 0:
        if field.is_rational:
            return all(x == 0 for x in vector)
        return all(int(x) % field.p == 0 for x in vector)
    augmented = [list(row) + [vector[i]] for i, row in enumerate(matrix)]
    return rank(matrix, field) == rank(augmented, field)
