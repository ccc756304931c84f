"""Exact linear algebra over the rationals and prime fields.

Every rank, solve and dimension computation in the package goes through
this module.  Rationals are `fractions.Fraction` (always reduced, positive
denominator), matrices are dense and immutable, and all results are exact:
there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadPrime, NonIntegral, NonUnique, NoSolution

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]  # dense, row-major

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(_as_fraction(x) for x in r)
        return cls(nrows, ncols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        flat = [Fraction(1) if i == j else Fraction(0) for i in range(n) for j in range(n)]
        return cls(n, n, tuple(flat))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        flat = [self[i, j] for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(self.cols, self.rows, tuple(flat))

    def mul_vector(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise ValueError("vector length mismatch")
        xs = [_as_fraction(v) for v in x]
        return [
            sum((self[i, j] * xs[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        ]


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    # Row-wise denominator clearing preserves the row space over Q.
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = 1
        for x in row:
            d = x.denominator
            g = _gcd(scale, d)
            scale = scale // g * d
        out.append([int(x * scale) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def rank_rational(m: ExactMatrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Denominators are cleared per row first, so all intermediate values are
    integers; the Bareiss pivot rule keeps them as large as a minor of the
    input, bounding coefficient blowup on the big path-basis matrices.
    """
    rows = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
        pval = rows[rank][col]
        for i in range(rank + 1, nrows):
            ival = rows[i][col]
            ri, rp = rows[i], rows[rank]
            for j in range(col + 1, ncols):
                ri[j] = (pval * ri[j] - ival * rp[j]) // prev
            ri[col] = 0
        prev = pval
        rank += 1
        if rank == nrows:
            break
    return rank


def det_rational(m: ExactMatrix) -> Fraction:
    """Determinant via Bareiss; exact and fraction-free after row clearing."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows = []
    scale = Fraction(1)
    for i in range(n):
        row = m.row(i)
        s = 1
        for x in row:
            d = x.denominator
            g = _gcd(s, d)
            s = s // g * d
        scale *= s
        rows.append([int(x * s) for x in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = None
        for i in range(col, n):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[piv], rows[col] = rows[col], rows[piv]
            sign = -sign
        pval = rows[col][col]
        for i in range(col + 1, n):
            ival = rows[i][col]
            ri, rp = rows[i], rows[col]
            for j in range(col + 1, n):
                ri[j] = (pval * ri[j] - ival * rp[j]) // prev
            ri[col] = 0
        prev = pval
    return Fraction(sign * rows[n - 1][n - 1], 1) / scale


def solve_unique_integer(m: ExactMatrix, rhs: Sequence) -> list[int]:
    """Solve m*x = rhs expecting a unique, integral solution.

    Raises NoSolution for an inconsistent system, NonUnique when the columns
    are dependent, and NonIntegral when the unique rational solution is not
    an integer vector.  Each of these signals a malformed or non-generic
    foundation upstream.
    """
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    b = [_as_fraction(x) for x in rhs]
    nrows, ncols = m.rows, m.cols
    aug = [list(m.row(i)) + [b[i]] for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            continue
        aug[piv], aug[r] = aug[r], aug[piv]
        pval = aug[r][col]
        aug[r] = [x / pval for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols]:
            raise NoSolution("inconsistent linear system")
    if len(pivots) < ncols:
        raise NonUnique("column-rank deficiency: solution not unique")
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = aug[i][ncols]
    if any(v.denominator != 1 for v in x):
        raise NonIntegral(f"solution is rational but not integral: {x}")
    return [int(v) for v in x]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def rank_modp(m: ExactMatrix, p: int) -> int:
    """Rank of the reduction of m mod p; always <= rank_rational(m).

    Opt-in fast path only: unlucky primes may undercount, so nothing
    acceptance-critical may rely on this.
    """
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    rows = []
    for i in range(m.rows):
        row = []
        for x in m.row(i):
            if x.denominator % p == 0:
                raise BadPrime(f"denominator of {x} vanishes mod {p}")
            row.append(x.numerator * pow(x.denominator, -1, p) % p)
        rows.append(row)
    rank = 0
    for col in range(m.cols):
        piv = None
        for i in range(rank, m.rows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[piv], rows[rank] = rows[rank], rows[piv]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(rank + 1, m.rows):
            f = rows[i][col]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == m.rows:
            break
    return rank


class RowSpace:
    """Incremental echelon form of a subspace of k^n, over Q or F_p.

    Used by the graded-dimension machinery, where many small quotients are
    built up one generator at a time.  `add` reduces the vector against the
    current basis and absorbs any nonzero residue; `reduce` only reduces.
    Vectors are dense lists; entries are Fraction (p is None) or ints mod p.
    """

    def __init__(self, n: int, p: int | None = None):
        self.n = n
        self.p = p
        self.pivots: dict[int, list] = {}  # pivot column -> normalized row

    def dim(self) -> int:
        return len(self.pivots)

    def _normalize(self, vec: list, col: int) -> list:
        if self.p is None:
            lead = vec[col]
            return [x / lead for x in vec]
        inv = pow(vec[col], -1, self.p)
        return [x * inv % self.p for x in vec]

    def reduce(self, vec: Sequence) -> list:
        # Rows are kept in reduced row-echelon form, so one pass suffices.
        if self.p is None:
            out = [_as_fraction(x) for x in vec]
        else:
            out = [x % self.p for x in vec]
        for col, row in self.pivots.items():
            c = out[col]
            if c:
                if self.p is None:
                    out = [a - c * b for a, b in zip(out, row)]
                else:
                    out = [(a - c * b) % self.p for a, b in zip(out, row)]
        return out

    def add(self, vec: Sequence) -> bool:
        """Add a generator; returns True if it enlarged the space."""
        res = self.reduce(vec)
        for col, x in enumerate(res):
            if x:
                row = self._normalize(res, col)
                for c2, r2 in self.pivots.items():
                    f = r2[col]
                    if f:
                        if self.p is None:
                            self.pivots[c2] = [a - f * b for a, b in zip(r2, row)]
                        else:
                            self.pivots[c2] = [(a - f * b) % self.p for a, b in zip(r2, row)]
                self.pivots[col] = row
                return True
        return False
