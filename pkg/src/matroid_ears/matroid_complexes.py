"""Independence, Bergman and augmented Bergman complexes, and the
stellohedral complexes Omega_V, Omega_V(Gamma), sd_B, Omega_B.

Abstract stellohedra live on [d]: element vertices ``(0, i)`` and subset
vertices ``(1, |S|, S)``.  Inside a matroid the subset vertex of S ⊆ B is
replaced by the flat vertex of cl(S).
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Callable, Iterable

from . import caps
from .caps import CapExceeded
from .complex import ComplexError, SimplicialComplex, elem_vertex, flat_vertex
from .matroid import Flat, FlatLattice, Matroid, MatroidError, flat_lattice


def independence_complex(M: Matroid, max_bases: int | None = None) -> SimplicialComplex:
    limit = caps.max_faces(max_bases)
    if M.num_bases() > limit:
        raise CapExceeded("max-faces", limit)
    return SimplicialComplex(tuple(elem_vertex(i) for i in b) for b in M.bases())


def _chains_up(L: FlatLattice, start: Flat, stop_rank: int):
    """Saturated chains start = F_0 ⊂ ... ⊂ F_m with rank(F_m) = stop_rank."""
    if start.rank == stop_rank:
        yield (start,)
        return
    for up in L.covers[start]:
        for rest in _chains_up(L, up, stop_rank):
            yield (start,) + rest


def bergman_complex(M: Matroid, lattice: FlatLattice | None = None,
                    max_faces: int | None = None) -> SimplicialComplex:
    """Order complex of the proper part of the lattice of flats."""
    d = M.rank
    if d <= 1:
        return SimplicialComplex([()])
    L = lattice or flat_lattice(M)
    limit = caps.max_faces(max_faces)
    facets = []
    for chain in _chains_up(L, L.bottom, d - 1):
        facets.append(tuple(f.vertex for f in chain[1:]))
        if len(facets) > limit:
            raise CapExceeded("max-faces", limit)
    return SimplicialComplex(facets)


def augmented_bergman_complex(M: Matroid, lattice: FlatLattice | None = None,
                              max_faces: int | None = None) -> SimplicialComplex:
    """Faces u_S ∪ {v_F1, ..., v_Fk}: S independent and S ⊆ F1 ⊂ ... ⊂ Fk
    proper flats (k >= 1), or k = 0."""
    d = M.rank
    limit = caps.max_faces(max_faces)
    L = lattice or flat_lattice(M)
    facets = [tuple(elem_vertex(i) for i in b) for b in M.bases()]
    for S in M.independent_sets():
        if len(S) == d:
            continue
        us = tuple(elem_vertex(i) for i in S)
        for chain in _chains_up(L, M.closure(S), d - 1):
            facets.append(us + tuple(f.vertex for f in chain))
        if len(facets) > limit:
            raise CapExceeded("max-faces", limit)
    cx = SimplicialComplex(facets)
    if cx.facets and not all(len(f) == d for f in cx.facets):
        raise AssertionError("augmented Bergman complex is not pure")
    return cx


# -- stellohedral complexes on an abstract d-set ---------------------------------

def _subset_vertex(S) -> tuple:
    S = tuple(sorted(S))
    return (1, len(S), S)


def _omega_facets(ground: tuple[int, ...], vert: Callable[[tuple[int, ...]], tuple]) -> set:
    """Facets of the stellohedral sphere over ``ground``.

    One facet u_ground, and for each proper S the facets u_S ∪ {v_S0, ...}
    over saturated chains S = S0 ⊂ S1 ⊂ ... of proper subsets.
    """
    d = len(ground)
    out = {tuple(elem_vertex(i) for i in ground)}
    for k in range(d):
        for S in combinations(ground, k):
            rest = [e for e in ground if e not in S]
            us = tuple(elem_vertex(i) for i in S)
            for w in permutations(rest, len(rest) - 1):
                cur = list(S)
                chain = [vert(S)]
                for e in w:
                    cur.append(e)
                    chain.append(vert(tuple(sorted(cur))))
                out.add(tuple(sorted(us + tuple(chain))))
    return out


def _sd_facets(ground: tuple[int, ...], vert: Callable[[tuple[int, ...]], tuple]) -> set:
    d = len(ground)
    if d <= 1:
        return {()}
    out = set()
    for w in permutations(ground):
        out.add(tuple(sorted(vert(tuple(sorted(w[:j]))) for j in range(1, d))))
    return out


def sd_V(d: int) -> SimplicialComplex:
    """Barycentric subdivision of the boundary of the simplex on [d]."""
    return SimplicialComplex(_sd_facets(tuple(range(1, d + 1)), _subset_vertex))


def stellohedron_boundary(d: int) -> SimplicialComplex:
    if d < 1:
        raise ComplexError("the stellohedron needs d >= 1")
    return SimplicialComplex(_omega_facets(tuple(range(1, d + 1)), _subset_vertex))


def _chain_part(facet, empty_vertex) -> tuple:
    return tuple(v for v in facet if v[0] == 1 and v != empty_vertex)


def omega_gamma(d: int, gamma: SimplicialComplex) -> SimplicialComplex:
    """Omega_V(Gamma): facets F of Omega_V with F minus (U ∪ {v_∅}) a nonempty
    face of Gamma.

    For d = 1 the only admissible Gamma is {∅}; the result is then {{v_∅}}.
    """
    if d < 1:
        raise ComplexError("d must be positive")
    if gamma.facets and not (gamma.is_pure and gamma.dim == d - 2):
        raise ComplexError(f"Gamma must be pure of dimension {d - 2}")
    ambient = sd_V(d)
    if not gamma.is_subcomplex_of(ambient):
        raise ComplexError("Gamma is not a subcomplex of sd_V")
    v_empty = _subset_vertex(())
    if d == 1:
        return SimplicialComplex([(v_empty,)] if gamma.facets else [])
    facets = []
    for F in stellohedron_boundary(d).facets:
        part = _chain_part(F, v_empty)
        if part and part in gamma:
            facets.append(F)
    return SimplicialComplex(facets)


# -- the same complexes inside a matroid, one per basis --------------------------

def _basis_vertex(M: Matroid, B: tuple[int, ...]):
    if not (len(B) == M.rank and M.is_independent(B)):
        raise MatroidError(f"{B} is not a basis")
    cache: dict[tuple[int, ...], tuple] = {}

    def vert(S: tuple[int, ...]) -> tuple:
        v = cache.get(S)
        if v is None:
            v = M.closure(S).vertex
            cache[S] = v
        return v
    return vert


def sd_B(M: Matroid, B: Iterable[int]) -> SimplicialComplex:
    """Chains of flats cl(S1) ⊂ ... ⊂ cl(Sk) for ∅ ⊂ S1 ⊂ ... ⊂ Sk ⊂ B."""
    B = tuple(sorted(B))
    return SimplicialComplex(_sd_facets(B, _basis_vertex(M, B)))


def omega_B(M: Matroid, B: Iterable[int]) -> SimplicialComplex:
    B = tuple(sorted(B))
    if not B:
        _basis_vertex(M, B)
        return SimplicialComplex([()])
    return SimplicialComplex(_omega_facets(B, _basis_vertex(M, B)))


def basis_relabeling(M: Matroid, B: Iterable[int]) -> Callable[[tuple], tuple]:
    """Vertex map from the abstract stellohedron on [d] onto Omega_B.

    Position i of B (in increasing order) goes to B[i-1]; the subset vertex
    of S goes to the flat vertex of cl({B[i-1] : i in S}).
    """
    B = tuple(sorted(B))
    vert = _basis_vertex(M, B)
    seen: dict[tuple, tuple] = {}

    def relabel(v: tuple) -> tuple:
        if v[0] == 0:
            return elem_vertex(B[v[1] - 1])
        out = vert(tuple(B[i - 1] for i in v[2]))
        prev = seen.setdefault(out, v)
        if prev != v:
            raise AssertionError(f"closure collision in basis {B}: {prev} and {v}")
        return out
    return relabel


def relabel(cx: SimplicialComplex, vmap: Callable[[tuple], tuple]) -> SimplicialComplex:
    return SimplicialComplex(tuple(vmap(v) for v in f) for f in cx.facets)


def flat_of_vertex(v: tuple) -> Flat:
    return Flat(v[2], v[1])


__all__ = [
    "independence_complex", "bergman_complex", "augmented_bergman_complex",
    "sd_V", "stellohedron_boundary", "omega_gamma", "sd_B", "omega_B",
    "basis_relabeling", "relabel", "flat_vertex", "flat_of_vertex",
]
