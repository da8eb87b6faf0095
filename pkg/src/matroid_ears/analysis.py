"""Exact checks on integer polynomials: unimodality, log-concavity,
real roots, and the top-heavy and 2-CM inequalities for h-vectors."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .enumeration import _f_augmented_uniform, _h_augmented_uniform
from .poly import Poly, _coerce


def _nonneg(p) -> tuple[int, ...]:
    c = _coerce(p).coeffs
    if any(a < 0 for a in c):
        raise ValueError("coefficients must be nonnegative")
    return c


def is_unimodal(p) -> bool:
    c = _nonneg(p)
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def is_log_concave(p) -> bool:
    c = _nonneg(p)
    return all(c[i] ** 2 >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def log_concavity_failures(p) -> list[tuple[int, int, int]]:
    """(i, a_i^2, a_{i-1} a_{i+1}) for each failing i."""
    c = _nonneg(p)
    return [(i, c[i] ** 2, c[i - 1] * c[i + 1]) for i in range(1, len(c) - 1)
            if c[i] ** 2 < c[i - 1] * c[i + 1]]


def has_internal_zeros(p) -> bool:
    c = _nonneg(p)
    nz = [i for i, a in enumerate(c) if a]
    return bool(nz) and any(c[i] == 0 for i in range(nz[0], nz[-1] + 1))


def is_ultra_log_concave(p, m: int) -> bool:
    c = _nonneg(p)
    if m < len(c) - 1:
        raise ValueError(f"order m={m} is below the degree {len(c) - 1}")
    return all(c[i] ** 2 * comb(m, i - 1) * comb(m, i + 1) >= c[i - 1] * c[i + 1] * comb(m, i) ** 2
               for i in range(1, len(c) - 1))


# -- real roots ------------------------------------------------------------------------

def _frac(p) -> list[Fraction]:
    return [Fraction(a) for a in _coerce(p).coeffs]


def _trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        s = len(a) - len(b)
        for i, x in enumerate(b):
            a[s + i] -= q * x
        a.pop()
        _trim(a)
    return a


def _deriv(c: list[Fraction]) -> list[Fraction]:
    return [i * a for i, a in enumerate(c)][1:]


def _gcd(a, b):
    while b:
        a, b = b, _rem(a, b)
    return [x / a[-1] for x in a]


def _quot(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        s = len(a) - len(b)
        out[s] = q
        for i, x in enumerate(b):
            a[s + i] -= q * x
        a.pop()
    return out


def _sign_changes(vals) -> int:
    s = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))


def _sturm_count(c: list[Fraction]) -> int:
    if len(c) <= 1:
        return 0
    seq = [c, _deriv(c)]
    while True:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    # signs at -inf and +inf come from leading terms
    at_neg = [p[-1] * (-1) ** (len(p) - 1) for p in seq]
    at_pos = [p[-1] for p in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def real_root_count(p) -> int:
    """Number of distinct real roots (Sturm, exact rationals)."""
    return _sturm_count(_trim(_frac(p)))


def real_root_count_with_multiplicity(p) -> int:
    c = _trim(_frac(p))
    total = 0
    while len(c) > 1:
        total += _sturm_count(c)
        c = _gcd(c, _deriv(c))
    return total


def is_real_rooted(p) -> bool:
    """Every root real; the zero polynomial counts as real-rooted."""
    q = _coerce(p)
    if q.is_zero():
        return True
    return real_root_count_with_multiplicity(q) == q.degree


# -- h-vector inequalities -------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    holds: bool
    applicable: bool = True
    failures: tuple = ()


def check_top_heavy(h, d: int) -> Verdict:
    """h_0 <= ... <= h_{d//2} and h_i <= h_{d-i} for i <= d/2."""
    c = _coerce(h).padded(d)
    fails = [("monotone", i) for i in range(d // 2) if c[i] > c[i + 1]]
    fails += [("top-heavy", i) for i in range(d // 2 + 1) if c[i] > c[d - i]]
    return Verdict(not fails, True, tuple(fails))


def check_2cm_chain(h, d: int) -> Verdict:
    """h_i h_{d-i-1} <= h_{i+1} h_{d-i} for 0 <= i < d.

    The ratio chain is undefined when an entry vanishes; then the verdict is
    marked not applicable.
    """
    c = _coerce(h).padded(d)
    if any(a == 0 for a in c):
        return Verdict(False, False)
    fails = [i for i in range(d) if c[i] * c[d - i - 1] > c[i + 1] * c[d - i]]
    return Verdict(not fails, True, tuple(fails))


# -- scanning uniform matroids -------------------------------------------------------

PREDICATES = {
    "log-concave-f": lambda f, h, d: is_log_concave(f),
    "log-concave-h": lambda f, h, d: is_log_concave(h),
    "unimodal-f": lambda f, h, d: is_unimodal(f),
    "unimodal-h": lambda f, h, d: is_unimodal(h),
    "real-rooted-h": lambda f, h, d: is_real_rooted(h),
    "top-heavy": lambda f, h, d: check_top_heavy(h, d).holds,
    "2cm-chain": lambda f, h, d: check_2cm_chain(h, d).holds,
}


@dataclass(frozen=True)
class ScanRow:
    d: int
    n: int
    predicate: str
    f: Poly = field(compare=False)
    h: Poly = field(compare=False)


def _scan_point(args) -> list[ScanRow]:
    d, n, properties = args
    f = _f_augmented_uniform(d, n)
    h = _h_augmented_uniform(d, n)
    return [ScanRow(d, n, name, f, h) for name in properties if not PREDICATES[name](f, h, d)]


def scan_uniform(d_range: Iterable[int], n_range: Iterable[int],
                 properties: Sequence[str], workers: int = 1) -> list[ScanRow]:
    """Every (d, n, predicate) failure, sorted by (d, n, predicate order)."""
    unknown = [p for p in properties if p not in PREDICATES]
    if unknown:
        raise ValueError(f"unknown predicate(s): {', '.join(unknown)}")
    n_values = list(n_range)
    points = [(d, n, tuple(properties)) for d in d_range for n in n_values if 0 <= d <= n]
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_scan_point, points))
    else:
        chunks = [_scan_point(p) for p in points]
    rows = [r for c in chunks for r in c]
    order = {p: i for i, p in enumerate(properties)}
    return sorted(rows, key=lambda r: (r.d, r.n, order[r.predicate]))
