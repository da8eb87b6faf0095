"""Exact integer polynomials indexed by degree."""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence


class Poly:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are
    trimmed, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "Poly":
        return cls([0] * k + [a])

    @classmethod
    def one_plus_x_pow(cls, k: int) -> "Poly":
        return cls(comb(k, i) for i in range(k + 1))

    @classmethod
    def one_minus_x_pow(cls, k: int) -> "Poly":
        return cls((-1) ** i * comb(k, i) for i in range(k + 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == Poly(other).coeffs
        if isinstance(other, int):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if a == 1 else f"{a}{mono}")
        return " + ".join(terms)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(a * other for a in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def padded(self, d: int) -> tuple[int, ...]:
        """Coefficients of degrees 0..d (raises if degree exceeds d)."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds {d}")
        return tuple(self[i] for i in range(d + 1))

    def reversed(self, d: int) -> "Poly":
        """``x**d * p(1/x)``."""
        return Poly(reversed(self.padded(d)))

    def derivative(self) -> "Poly":
        return Poly(i * a for i, a in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def is_palindromic(self, d: int) -> bool:
        c = self.padded(d)
        return c == c[::-1]


def _coerce(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, int):
        return Poly([p])
    if isinstance(p, Sequence):
        return Poly(p)
    raise TypeError(f"cannot make a polynomial from {type(p).__name__}")


def binom(a: int, b: int) -> int:
    """Binomial coefficient with ``binom(a, 0) == 1`` for every integer ``a``.

    Negative upper arguments only arise here as ``binom(-1, 0)``; any other
    negative case is treated as zero.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0:
        return 0
    return comb(a, b)


def h_from_f(f: Poly, d: int) -> Poly:
    """h(x) = sum_i f_{i-1} x^i (1-x)^(d-i)."""
    if f.degree > d:
        raise ValueError(f"f has degree {f.degree} > d = {d}")
    out = Poly()
    for i, a in enumerate(f.coeffs):
        if a:
            out = out + (Poly.one_minus_x_pow(d - i) * a).shift(i)
    return out


def f_from_h(h: Poly, d: int) -> Poly:
    """f(x) = sum_i h_i x^i (1+x)^(d-i)."""
    if h.degree > d:
        raise ValueError(f"h has degree {h.degree} > d = {d}")
    out = Poly()
    for i, a in enumerate(h.coeffs):
        if a:
            out = out + (Poly.one_plus_x_pow(d - i) * a).shift(i)
    return out
