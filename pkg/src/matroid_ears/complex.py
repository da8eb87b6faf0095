"""Simplicial complexes given by facets, with f/h-vectors, links, shellings
and ball/sphere certificates.

Vertices are tuples ordered so that element vertices ``(0, i)`` precede flat
vertices ``(1, rank, elements)``; faces are increasing vertex tuples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import caps
from .caps import CapExceeded
from .poly import Poly, f_from_h, h_from_f  # noqa: F401  (re-exported)

Vertex = tuple
Face = tuple


class ComplexError(ValueError):
    pass


def elem_vertex(i: int) -> Vertex:
    return (0, i)


def flat_vertex(elements: Iterable[int], rank: int | None = None) -> Vertex:
    elements = tuple(sorted(elements))
    return (1, len(elements) if rank is None else rank, elements)


def vertex_label(v: Vertex) -> str:
    if v[0] == 0:
        return f"u{v[1]}"
    return "v{" + ",".join(map(str, v[2])) + "}"


def face_label(face: Face) -> list[str]:
    return [vertex_label(v) for v in face]


def _normalize(face: Iterable[Vertex]) -> Face:
    return tuple(sorted(set(face)))


class SimplicialComplex:
    """A simplicial complex stored by its facets in canonical sorted order.

    ``SimplicialComplex([()])`` is the complex {∅}.  A complex with no facets
    at all is the void complex; it is only produced as a boundary of a
    sphere or an empty intersection.
    """

    __slots__ = ("facets", "_faces")

    def __init__(self, facets: Iterable[Iterable[Vertex]]):
        fs = {_normalize(f) for f in facets}
        sizes = {len(f) for f in fs}
        if len(sizes) > 1:
            fs = {f for f in fs if not any(len(g) > len(f) and set(f) <= set(g) for g in fs)}
        self.facets: tuple[Face, ...] = tuple(sorted(fs))
        self._faces = None

    @classmethod
    def from_faces(cls, faces: Iterable[Face]) -> "SimplicialComplex":
        """The complex whose faces are ``faces`` (assumed closed under subsets)."""
        faces = set(faces)
        covered = set()
        for f in faces:
            covered.update(combinations(f, len(f) - 1) if f else ())
        return cls(faces - covered)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.facets)} facets, dim={self.dim})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces(self, max_faces: int | None = None) -> frozenset[Face]:
        """All faces, deduplicated across facets."""
        if self._faces is None:
            limit = caps.max_faces(max_faces)
            out: set[Face] = set()
            for f in self.facets:
                for k in range(len(f) + 1):
                    out.update(combinations(f, k))
                if len(out) > limit:
                    raise CapExceeded("max-faces", limit)
            self._faces = frozenset(out)
        return self._faces

    def __contains__(self, face) -> bool:
        face = set(face)
        return any(face <= set(f) for f in self.facets)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(f in other for f in self.facets)


def f_polynomial(cx: SimplicialComplex, max_faces: int | None = None) -> Poly:
    counts = Counter(len(f) for f in cx.faces(max_faces))
    if not counts:
        return Poly()
    return Poly(counts[i] for i in range(max(counts) + 1))


def h_polynomial(cx: SimplicialComplex, d: int | None = None) -> Poly:
    """h-polynomial with respect to ``d`` (default: dimension + 1)."""
    if d is None:
        d = cx.dim + 1
    return h_from_f(f_polynomial(cx), d)


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Non-reduced Euler characteristic, sum over nonempty faces of (-1)^dim."""
    f = f_polynomial(cx)
    return sum((-1) ** (k - 1) * a for k, a in enumerate(f.coeffs) if k >= 1)


def link(cx: SimplicialComplex, face: Iterable[Vertex]) -> SimplicialComplex:
    face = set(face)
    containing = [f for f in cx.facets if face <= set(f)]
    if not containing:
        raise ComplexError(f"{sorted(face)} is not a face")
    return SimplicialComplex(tuple(v for v in f if v not in face) for f in containing)


def star_facets(cx: SimplicialComplex, face: Iterable[Vertex]) -> list[Face]:
    face = set(face)
    return [f for f in cx.facets if face <= set(f)]


@dataclass(frozen=True)
class ShellingVerdict:
    valid: bool
    index: int | None = None   # 0-based position of the first failing facet
    restriction: tuple = ()    # minimal new faces, one per facet, when valid

    def __bool__(self) -> bool:
        return self.valid


def verify_shelling(cx: SimplicialComplex, order: Sequence[Iterable[Vertex]]) -> ShellingVerdict:
    """Check that ``order`` is a shelling of the pure complex ``cx``.

    For each facet G the set R(G) of vertices x with G - x inside an earlier
    facet is computed; the order is a shelling exactly when no R(G) (for G
    after the first) lies in an earlier facet.
    """
    if not cx.is_pure:
        raise ComplexError("shellability is checked for pure complexes only")
    order = [_normalize(f) for f in order]
    if sorted(order) != list(cx.facets):
        raise ComplexError("order is not a permutation of the facets")
    seen: set[Face] = set()
    restrictions = []
    for j, g in enumerate(order):
        r = tuple(x for x in g if tuple(y for y in g if y != x) in seen)
        if j > 0 and r in seen:
            return ShellingVerdict(False, j)
        restrictions.append(r)
        for k in range(len(g) + 1):
            seen.update(combinations(g, k))
    return ShellingVerdict(True, None, tuple(restrictions))


def ridge_degrees(cx: SimplicialComplex) -> Counter:
    deg: Counter = Counter()
    for f in cx.facets:
        if f:
            for r in combinations(f, len(f) - 1):
                deg[r] += 1
    return deg


@dataclass(frozen=True)
class PseudomanifoldCertificate:
    ridge_degrees_ok: bool
    boundary_ridges: tuple[Face, ...]


def pseudomanifold_certificate(cx: SimplicialComplex) -> PseudomanifoldCertificate:
    if not cx.is_pure:
        raise ComplexError("pseudomanifold check needs a pure complex")
    deg = ridge_degrees(cx)
    ok = all(c <= 2 for c in deg.values())
    return PseudomanifoldCertificate(ok, tuple(sorted(r for r, c in deg.items() if c == 1)))


@dataclass(frozen=True)
class BallSphere:
    kind: str                # "ball" or "sphere"
    dim: int
    euler: int
    euler_ok: bool
    boundary_ridges: tuple[Face, ...]


class CertificateError(ComplexError):
    pass


def ball_or_sphere(cx: SimplicialComplex, shelling: Sequence[Iterable[Vertex]]) -> BallSphere:
    """Classify a shellable pseudomanifold as a ball or a sphere.

    A shellable complex whose ridges lie in at most two facets is a ball when
    some ridge lies in one facet and a sphere otherwise.
    """
    cert = pseudomanifold_certificate(cx)
    if not cert.ridge_degrees_ok:
        raise CertificateError("some ridge lies in three or more facets")
    verdict = verify_shelling(cx, shelling)
    if not verdict:
        raise CertificateError(f"shelling fails at position {verdict.index}")
    kind = "ball" if cert.boundary_ridges else "sphere"
    chi = euler_characteristic(cx)
    expected = 1 if kind == "ball" else (0 if cx.dim % 2 else 2)
    return BallSphere(kind, cx.dim, chi, chi == expected, cert.boundary_ridges)


def boundary_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the ridges lying in exactly one facet."""
    deg = ridge_degrees(cx)
    if any(c > 2 for c in deg.values()):
        raise ComplexError("some ridge lies in three or more facets")
    return SimplicialComplex(r for r, c in deg.items() if c == 1)
