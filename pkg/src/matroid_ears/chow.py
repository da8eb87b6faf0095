"""Hilbert series of Chow rings and augmented Chow rings of matroids.

The Chow series counts Feichtner-Yuzvinsky monomials for the maximal
building set: chains of flats F_1 < ... < F_k above cl(∅) with exponents
1 <= m_i <= rk F_i - rk F_{i-1} - 1.  The augmented series is assembled from
Chow series of contractions, and checked against a direct count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .enumeration import _alpha, h_augmented, h_bergman_uniform_descents
from .matroid import FlatLattice, Matroid, flat_lattice
from .poly import Poly, binom


@dataclass(frozen=True)
class ChowSeries:
    poly: Poly
    rank: int
    n: int
    tag: str

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.poly.coeffs


def _gap(m: int) -> Poly:
    """x + x^2 + ... + x^(m-1)."""
    return Poly([0] + [1] * (m - 1)) if m > 1 else Poly()


def _strict_below(L: FlatLattice):
    flats = list(L.flats())
    sets = {F: set(F.elements) for F in flats}
    return flats, lambda G, F: G.rank < F.rank and sets[G] < sets[F]


def _chow_poly(M: Matroid, lattice: FlatLattice | None = None) -> Poly:
    if M.loops():
        return Poly()
    if M.is_uniform:
        return _chow_uniform(M.rank, M.n)
    L = lattice or flat_lattice(M)
    flats, below = _strict_below(L)
    P = {}
    for F in flats:
        if F.rank == 0:
            P[F] = Poly([1])
            continue
        acc = Poly()
        for G in flats:
            if G.rank >= F.rank:
                break
            if below(G, F):
                acc = acc + P[G] * _gap(F.rank - G.rank)
        P[F] = acc
    total = Poly()
    for p in P.values():
        total = total + p
    return total


@lru_cache(maxsize=None)
def _chow_uniform(d: int, n: int) -> Poly:
    """Sum over size sequences of proper flats, with E optionally on top."""
    if d == 0:
        return Poly([1])
    total = Poly()
    for k in range(d):
        for T in combinations(range(1, d), k):
            w, prev = Poly([1]), 0
            for t in T:
                w = w * _gap(t - prev)
                prev = t
            total = total + (w + w * _gap(d - prev)) * _alpha(n, T)
    return total


def chow_hilbert(M: Matroid) -> ChowSeries:
    """Chow series; the zero polynomial when M has a loop."""
    return ChowSeries(_chow_poly(M), M.rank, M.n, repr(M))


def _augmented_poly(M: Matroid) -> Poly:
    if M.is_uniform:
        return _augmented_uniform(M.rank, M.n)
    total = Poly()
    for F in flat_lattice(M).flats():
        total = total + _chow_poly(M.contraction(F.elements)).shift(F.rank)
    return total


@lru_cache(maxsize=None)
def _augmented_uniform(d: int, n: int) -> Poly:
    total = Poly.monomial(d)
    for k in range(d):
        total = total + (_chow_uniform(d - k, n - k) * comb(n, k)).shift(k)
    return total


def augmented_chow_hilbert(M: Matroid) -> ChowSeries:
    """sum over flats F of x^rk(F) times the Chow series of M/F."""
    return ChowSeries(_augmented_poly(M), M.rank, M.n, repr(M))


def augmented_chow_bruteforce(M: Matroid) -> Poly:
    """Direct count of augmented FY monomials: chains cl(∅) < F_1 < ... < F_k
    with 1 <= m_1 <= rk F_1 and 1 <= m_i <= rk F_i - rk F_{i-1} - 1 after.

    Walks every chain explicitly; only for small matroids.
    """
    L = flat_lattice(M)
    flats, below = _strict_below(L)
    bottom = L.bottom
    out = [0] * (M.rank + 1)

    def walk(last, deg):
        out[deg] += 1
        for F in flats:
            if F.rank == 0 or not below(last, F):
                continue
            top = F.rank if last is bottom else F.rank - last.rank - 1
            for m in range(1, top + 1):
                walk(F, deg + m)
    walk(bottom, 0)
    return Poly(out)


# -- identities for uniform matroids ---------------------------------------------------

@dataclass(frozen=True)
class IdentityVerdict:
    holds: bool
    d: int
    n: int
    lhs: Poly
    rhs: Poly


def verify_bergman_chow_identity(d: int, n: int) -> IdentityVerdict:
    """x^(d-1) h(Bergman(U_{d,n}), 1/x) against
    sum_{i=1}^d C(n-i-1, d-i) Chow(U_{i,n})."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    lhs = h_bergman_uniform_descents(d, n).reversed(d - 1)
    rhs = Poly()
    for i in range(1, d + 1):
        rhs = rhs + _chow_uniform(i, n) * binom(n - i - 1, d - i)
    return IdentityVerdict(lhs == rhs, d, n, lhs, rhs)


def verify_augmented_chow_identity(d: int, n: int) -> IdentityVerdict:
    """x^d h(Delta_{U_{d,n}}, 1/x) against
    sum_{i=0}^d C(n-i-1, d-i) augmented Chow(U_{i,n})."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    lhs = h_augmented(Matroid.uniform(d, n)).reversed(d)
    rhs = Poly()
    for i in range(d + 1):
        rhs = rhs + _augmented_uniform(i, n) * binom(n - i - 1, d - i)
    return IdentityVerdict(lhs == rhs, d, n, lhs, rhs)
