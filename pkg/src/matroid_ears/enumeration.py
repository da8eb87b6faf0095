"""f- and h-polynomials of augmented Bergman complexes without building them.

General matroids go through independent sets (for f) or flats (for h);
uniform matroids use binomial fast paths that never touch the lattice, so
U_{4,189} or U_{5,83} take milliseconds.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from . import caps
from .matroid import FlatLattice, Matroid, flat_lattice
from .poly import Poly, binom, h_from_f


# -- Bergman complexes ---------------------------------------------------------------

def f_bergman(M: Matroid, lattice: FlatLattice | None = None) -> Poly:
    """f-polynomial of the order complex of the proper part of L(M)."""
    d = M.rank
    if d <= 1:
        return Poly([1])
    if M.is_uniform:
        return _f_bergman_uniform(d, M.n)
    L = lattice or flat_lattice(M)
    proper = [F for F in L.flats() if 0 < F.rank < d]
    # ending[F]: chains of proper flats whose top is F
    ending: dict = {}
    total = Poly([1])
    for F in proper:                      # rank-sorted, so smaller flats come first
        fs = set(F.elements)
        below = Poly([1])
        for G in proper:
            if G.rank >= F.rank:
                break
            if set(G.elements) < fs:
                below = below + ending[G]
        ending[F] = below.shift(1)
        total = total + ending[F]
    return total


def h_bergman(M: Matroid, lattice: FlatLattice | None = None) -> Poly:
    return h_from_f(f_bergman(M, lattice), max(M.rank - 1, 0))


def _multinomial(n: int, parts) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def _alpha(n: int, T: tuple[int, ...]) -> int:
    """Chains of subsets of [n] with sizes exactly T (T increasing)."""
    steps, prev = [], 0
    for t in T:
        steps.append(t - prev)
        prev = t
    steps.append(n - prev)
    return _multinomial(n, steps)


@lru_cache(maxsize=None)
def _f_bergman_uniform(d: int, n: int) -> Poly:
    if d <= 1:
        return Poly([1])
    coeffs = [0] * d
    for k in range(d):
        for T in combinations(range(1, d), k):
            coeffs[k] += _alpha(n, T)
    return Poly(coeffs)


@lru_cache(maxsize=None)
def h_bergman_uniform_descents(d: int, n: int) -> Poly:
    """h_j = #{w in S_n : Des(w) ⊆ [d-1], des(w) = j}, by inclusion-exclusion
    over chain counts.  No permutation is ever listed."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    coeffs = [0] * d
    for k in range(d):
        for T in combinations(range(1, d), k):
            beta = 0
            for j in range(k + 1):
                for U in combinations(T, j):
                    beta += (-1) ** (k - j) * _alpha(n, U)
            coeffs[k] += beta
    return Poly(coeffs)


# -- independence complexes ----------------------------------------------------------

def h_independence(M: Matroid, max_sets: int | None = None) -> Poly:
    if M.is_uniform:
        return h_independence_uniform(M.rank, M.n)
    counts = [0] * (M.rank + 1)
    for S in M.independent_sets(max_sets):
        counts[len(S)] += 1
    return h_from_f(Poly(counts), M.rank)


def h_independence_uniform(d: int, n: int) -> Poly:
    """h_k = C(n-d+k-1, k) for 0 <= k <= d."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    return Poly(binom(n - d + k - 1, k) for k in range(d + 1))


# -- augmented Bergman complexes -----------------------------------------------------

def f_augmented_by_independent_sets(M: Matroid, max_sets: int | None = None) -> Poly:
    """|B(M)| x^d + (x+1) * sum over non-basis independent S of
    x^|S| f(Bergman(M/S))."""
    d = M.rank
    if M.is_uniform:
        return _f_augmented_uniform(d, M.n)
    acc = Poly()
    for S in M.independent_sets(caps.max_subsets(max_sets)):
        if len(S) < d:
            acc = acc + f_bergman(M.contraction(S)).shift(len(S))
    return Poly.monomial(d, M.num_bases()) + Poly([1, 1]) * acc


@lru_cache(maxsize=None)
def _f_augmented_uniform(d: int, n: int) -> Poly:
    acc = Poly()
    for j in range(d):
        acc = acc + (_f_bergman_uniform(d - j, n - j) * comb(n, j)).shift(j)
    return Poly.monomial(d, comb(n, d)) + Poly([1, 1]) * acc


def h_augmented_by_flats(M: Matroid, max_flats: int | None = None) -> Poly:
    """h(I_M) + x * sum over proper flats F of h(I_{M|F}) h(Bergman(M/F))."""
    d = M.rank
    if M.is_uniform:
        return _h_augmented_uniform(d, M.n)
    L = flat_lattice(M, max_flats)
    acc = Poly()
    for F in L.flats():
        if F.rank < d:
            acc = acc + h_independence(M.restriction(F.elements)) * h_bergman(M.contraction(F.elements))
    out = h_independence(M) + acc.shift(1)
    out.padded(d)                         # raises if the degree overshoots
    return out


@lru_cache(maxsize=None)
def _h_augmented_uniform(d: int, n: int) -> Poly:
    acc = Poly()
    for k in range(d):
        acc = acc + h_bergman_uniform_descents(d - k, n - k) * comb(n, k)
    return h_independence_uniform(d, n) + acc.shift(1)


def f_augmented(M: Matroid) -> Poly:
    return f_augmented_by_independent_sets(M)


def h_augmented(M: Matroid) -> Poly:
    return h_augmented_by_flats(M)


# -- binomial Eulerian polynomials ---------------------------------------------------

@lru_cache(maxsize=None)
def eulerian(n: int) -> Poly:
    """A_n(x) = sum over w in S_n of x^des(w); A_0 = 1."""
    row = [1]
    for m in range(1, n + 1):
        new = [0] * m
        for k in range(m):
            a = (k + 1) * row[k] if k < len(row) else 0
            b = (m - k) * row[k - 1] if 0 < k <= len(row) else 0
            new[k] = a + b
        row = new
    return Poly(row)


def binomial_eulerian(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = Poly()
    for j in range(1, n + 1):
        acc = acc + eulerian(j) * comb(n, j)
    return Poly([1]) + acc.shift(1)
