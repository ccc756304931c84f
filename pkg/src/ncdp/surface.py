"""Picard lattices and numerical K-theory of del Pezzo surfaces.

Supported lattices: the blowup of the plane in 0 <= n <= 8 points, with
form diag(+1, -1, ..., -1) and basis (h, e_1, ..., e_n), and the smooth
quadric with hyperbolic form in the basis (f_1, f_2).  K-theory classes
are triples (rank, c_1, 2*ch_2) with integral 2*ch_2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ContextMismatch, InternalNonIntegral, NonTermination

BLOWUP = "blowup"
QUADRIC = "quadric"


@dataclass(frozen=True)
class SurfaceContext:
    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind == BLOWUP:
            if not 0 <= self.n <= 8:
                raise ValueError("blowup count must be between 0 and 8")
        elif self.kind == QUADRIC:
            if self.n:
                raise ValueError("quadric context takes no point count")
        else:
            raise ValueError(f"unknown surface kind {self.kind!r}")

    @classmethod
    def blowup(cls, n: int) -> "SurfaceContext":
        return cls(BLOWUP, n)

    @classmethod
    def quadric(cls) -> "SurfaceContext":
        return cls(QUADRIC)

    @property
    def lattice_rank(self) -> int:
        return 2 if self.kind == QUADRIC else 1 + self.n

    def __str__(self) -> str:
        return "quadric" if self.kind == QUADRIC else f"blowup({self.n})"


@dataclass(frozen=True)
class DivisorClass:
    ctx: SurfaceContext
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.lattice_rank:
            raise ValueError("coefficient vector does not match lattice rank")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("divisor coefficients must be integers")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_ctx(self, other)
        return DivisorClass(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _same_ctx(self, other)
        return DivisorClass(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.ctx, tuple(-a for a in self.coeffs))

    def scale(self, m: int) -> "DivisorClass":
        return DivisorClass(self.ctx, tuple(m * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class KClass:
    rank: int
    c1: DivisorClass
    twice_ch2: int

    @property
    def ctx(self) -> SurfaceContext:
        return self.c1.ctx

    def __neg__(self) -> "KClass":
        return KClass(-self.rank, -self.c1, -self.twice_ch2)

    def sub_multiple(self, m: int, other: "KClass") -> "KClass":
        """self - m*other, the only K-class combination mutations need."""
        _same_ctx(self.c1, other.c1)
        return KClass(
            self.rank - m * other.rank,
            self.c1 - other.c1.scale(m),
            self.twice_ch2 - m * other.twice_ch2,
        )

    def is_line_bundle(self) -> bool:
        return self.rank == 1 and self.twice_ch2 == intersection(self.c1, self.c1)


def _same_ctx(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx} vs {b.ctx}")


def divisor(ctx: SurfaceContext, coeffs) -> DivisorClass:
    return DivisorClass(ctx, tuple(int(c) for c in coeffs))


def zero_divisor(ctx: SurfaceContext) -> DivisorClass:
    return DivisorClass(ctx, (0,) * ctx.lattice_rank)


def intersection(a: DivisorClass, b: DivisorClass) -> int:
    """Value of the lattice form on a pair of divisor classes."""
    _same_ctx(a, b)
    if a.ctx.kind == QUADRIC:
        return a.coeffs[0] * b.coeffs[1] + a.coeffs[1] * b.coeffs[0]
    return a.coeffs[0] * b.coeffs[0] - sum(x * y for x, y in zip(a.coeffs[1:], b.coeffs[1:]))


def canonical_class(ctx: SurfaceContext) -> DivisorClass:
    if ctx.kind == QUADRIC:
        return DivisorClass(ctx, (-2, -2))
    return DivisorClass(ctx, (-3,) + (1,) * ctx.n)


def surface_degree(ctx: SurfaceContext) -> int:
    k = canonical_class(ctx)
    return intersection(k, k)


def helix_period(ctx: SurfaceContext) -> int:
    return 12 - surface_degree(ctx)


def line_bundle_class(d: DivisorClass) -> KClass:
    return KClass(1, d, intersection(d, d))


def structure_sheaf_class(ctx: SurfaceContext) -> KClass:
    return line_bundle_class(zero_divisor(ctx))


def euler_pairing(a: KClass, b: KClass) -> int:
    """Euler form chi(a, b) by Riemann-Roch on a rational surface.

    chi = r_a r_b + (r_a c1(b) - r_b c1(a)).(-K)/2
        + (r_a t_b + r_b t_a)/2 - c1(a).c1(b)
    with t = 2*ch_2.  The half-integer terms must add up to an integer;
    a violation means the 2*ch_2 parity invariant was broken upstream.
    """
    _same_ctx(a.c1, b.c1)
    minus_k = -canonical_class(a.ctx)
    mixed = a.rank * intersection(b.c1, minus_k) - b.rank * intersection(a.c1, minus_k)
    chi = (
        Fraction(a.rank * b.rank)
        + Fraction(mixed, 2)
        + Fraction(a.rank * b.twice_ch2 + b.rank * a.twice_ch2, 2)
        - intersection(a.c1, b.c1)
    )
    if chi.denominator != 1:
        raise InternalNonIntegral(f"non-integral Euler pairing {chi}")
    return int(chi)


def canonical_twist(a: KClass) -> KClass:
    """Class of a (x) omega: (r, c1 + rK, t + 2 c1.K + r K.K)."""
    k = canonical_class(a.ctx)
    return KClass(
        a.rank,
        a.c1 + k.scale(a.rank),
        a.twice_ch2 + 2 * intersection(a.c1, k) + a.rank * intersection(k, k),
    )


def canonical_untwist(a: KClass) -> KClass:
    """Inverse of canonical_twist: tensoring by the anticanonical bundle."""
    k = canonical_class(a.ctx)
    return KClass(
        a.rank,
        a.c1 - k.scale(a.rank),
        a.twice_ch2 - 2 * intersection(a.c1, k) + a.rank * intersection(k, k),
    )


@lru_cache(maxsize=None)
def minus_one_classes(ctx: SurfaceContext, bound_scale: int = 1) -> tuple[DivisorClass, ...]:
    """All classes C with C.C = -1 and C.K = -1, in lexicographic order.

    Empty for the plane and the quadric.  The search box comes from
    Cauchy-Schwarz against the form; `bound_scale` widens the box so that
    stability of the count under doubling can be checked.
    """
    if ctx.kind == QUADRIC or ctx.n == 0:
        return ()
    n = ctx.n
    # a-range: (9-n) a^2 - 6 a + (1-n) <= 0, then widened by bound_scale.
    disc = 36 - 4 * (9 - n) * (1 - n)
    root = math.isqrt(disc) + 1
    lo = -((root - 6) // (2 * (9 - n)) + 1) * bound_scale
    hi = ((6 + root) // (2 * (9 - n)) + 1) * bound_scale
    found: list[tuple[int, ...]] = []

    def search(prefix: list[int], rem_sum: int, rem_sq: int, slots: int):
        if slots == 0:
            if rem_sum == 0 and rem_sq == 0:
                found.append(tuple(prefix))
            return
        bmax = math.isqrt(rem_sq) * bound_scale
        for b in range(-bmax, bmax + 1):
            sq = rem_sq - b * b
            if sq < 0:
                continue
            s = rem_sum - b
            # Cauchy-Schwarz on the remaining slots prunes hard.
            if s * s > (slots - 1) * sq:
                continue
            prefix.append(b)
            search(prefix, s, sq, slots - 1)
            prefix.pop()

    for a in range(lo, hi + 1):
        search([a], 1 - 3 * a, a * a + 1, n)
    found.sort()
    return tuple(DivisorClass(ctx, c) for c in found)


def _h0_blowup(d: DivisorClass) -> int:
    ctx = d.ctx
    minus_k = -canonical_class(ctx)
    k = canonical_class(ctx)
    curves = minus_one_classes(ctx)
    # Each reduction step lowers d.(-K) by exactly 1, so this cap is generous.
    cap = max(1000, intersection(d, minus_k) + 10)
    steps = 0
    while True:
        steps += 1
        if steps > cap:
            raise NonTermination("section-count reduction exceeded its iteration cap")
        if d.is_zero():
            return 1
        if intersection(d, minus_k) < 0:
            return 0
        if ctx.n == 0:
            a = d.coeffs[0]
            return (a + 1) * (a + 2) // 2
        neg = next((c for c in curves if intersection(d, c) < 0), None)
        if neg is None:
            # nef: higher cohomology vanishes, h0 = chi
            return 1 + (intersection(d, d) - intersection(d, k)) // 2
        d = d - neg


def _h0(d: DivisorClass) -> int:
    ctx = d.ctx
    if ctx.kind == QUADRIC:
        x, y = d.coeffs
        return (x + 1) * (y + 1) if x >= 0 and y >= 0 else 0
    return _h0_blowup(d)


def cohomology_line_bundle(d: DivisorClass) -> tuple[int, int, int]:
    """Exact (h0, h1, h2) of the line bundle O(d).

    h0 by base-locus reduction along (-1)-classes, h2 by Serre duality,
    h1 from the Euler characteristic.
    """
    k = canonical_class(d.ctx)
    h0 = _h0(d)
    h2 = _h0(k - d)
    chi = euler_pairing(structure_sheaf_class(d.ctx), line_bundle_class(d))
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise InternalNonIntegral(f"negative h1 for {d.coeffs}: h0={h0} h2={h2} chi={chi}")
    return (h0, h1, h2)
