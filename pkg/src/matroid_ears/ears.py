"""Convex ear decomposition of the augmented Bergman complex.

Bases are taken in lexicographic order B_1, ..., B_m.  Every Omega_{B_k} is a
copy of the stellohedral sphere; the k-th ear is Omega_{B_k} with the interior
of Omega_{B_k} ∩ (Omega_{B_1} ∪ ... ∪ Omega_{B_{k-1}}) removed.  Each step is
checked by explicit face-set comparisons and by shelling certificates, so a
returned decomposition is machine-verified.

Shellings are built on the abstract stellohedron over positions 1..d of the
basis and transported to the matroid by :func:`basis_relabeling`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import caps
from .caps import CapExceeded
from .complex import (BallSphere, SimplicialComplex, ball_or_sphere, boundary_complex,
                      link, verify_shelling)
from .matroid import Flat, Matroid, MatroidError
from .matroid_complexes import (augmented_bergman_complex, basis_relabeling, omega_B,
                                omega_gamma, relabel, sd_B, sd_V, stellohedron_boundary)

DEFAULT_MAX_RANK = 5


class CEDError(AssertionError):
    """A certificate that must hold by the theory failed to verify."""


# -- permutations and chains -----------------------------------------------------

def inversions(w: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def weak_order_key(w: Sequence[int]):
    return (inversions(w), tuple(w))


def perm_to_chain(w: Sequence[int]) -> tuple:
    """Facet of sd_V for the permutation w of [d] (proper prefix sets)."""
    return tuple(sorted((1, j, tuple(sorted(w[:j]))) for j in range(1, len(w))))


def chain_to_perm(chain: Iterable[tuple], d: int) -> tuple[int, ...]:
    sets = sorted((v[2] for v in chain), key=len)
    w, prev = [], set()
    for s in sets + [tuple(range(1, d + 1))]:
        (new,) = set(s) - prev
        w.append(new)
        prev = set(s)
    return tuple(w)


def is_weak_order_ideal(perms: set[tuple[int, ...]]) -> bool:
    """Closed under undoing a single adjacent inversion."""
    for w in perms:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                u = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if u not in perms:
                    return False
    return True


# -- minimal labelings ---------------------------------------------------------------

@dataclass(frozen=True)
class LabeledChain:
    chain: tuple[Flat, ...]
    label: tuple[int, ...]


def lex_bases(M: Matroid, max_bases: int | None = None) -> list[tuple[int, ...]]:
    return M.bases(max_bases)


def _as_flat(M: Matroid, F) -> Flat:
    if isinstance(F, Flat):
        return F
    F = tuple(sorted(F))
    if not M.is_flat(F):
        raise MatroidError(f"{F} is not a flat")
    return M.closure(F)


def minimal_labeling(M: Matroid, chain: Sequence) -> LabeledChain:
    """Label a_i = min{e : cl(F_{i-1} ∪ e) = F_i} of a maximal flag F_0 ⊂ ... ⊂ F_d."""
    flats = tuple(_as_flat(M, F) for F in chain)
    d = M.rank
    if (len(flats) != d + 1 or flats[0] != M.closure(())
            or flats[-1].elements != tuple(range(1, M.n + 1))
            or any(f.rank != i for i, f in enumerate(flats))
            or any(not set(a.elements) < set(b.elements) for a, b in zip(flats, flats[1:]))):
        raise MatroidError("not a maximal chain of flats")
    label = []
    for lo, hi in zip(flats, flats[1:]):
        label.append(min(e for e in hi.elements
                         if e not in lo.elements and M.closure(lo.elements + (e,)) == hi))
    if not (len(set(label)) == d and M.is_independent(label)):
        raise CEDError(f"minimal labeling {label} is not a basis")
    return LabeledChain(flats, tuple(label))


def _sd_facet_perm(M: Matroid, B: tuple[int, ...], facet: tuple) -> tuple[int, ...]:
    """Permutation of B producing a facet of sd_B (B ∩ cl(S_i) = S_i)."""
    Bset = set(B)
    sets = sorted((v[2] for v in facet), key=len) + [tuple(range(1, M.n + 1))]
    w, prev = [], set()
    for s in sets:
        cur = Bset & set(s)
        (new,) = cur - prev
        w.append(new)
        prev = cur
    return tuple(w)


def _chain_of_facet(M: Matroid, facet: tuple) -> tuple[Flat, ...]:
    flats = [M.closure(())] + [Flat(v[2], v[1]) for v in sorted(facet, key=lambda v: v[1])]
    flats.append(M.closure(range(1, M.n + 1)))
    return tuple(flats)


def _lambda_facets(M: Matroid, B: tuple[int, ...], sd: SimplicialComplex) -> list[tuple]:
    if M.rank == 0:
        return list(sd.facets)
    out = []
    for f in sd.facets:
        if minimal_labeling(M, _chain_of_facet(M, f)).label == _sd_facet_perm(M, B, f):
            out.append(f)
    return out


def lambda_k(M: Matroid, k: int) -> SimplicialComplex:
    """Subcomplex of sd_{B_k} generated by chains whose minimal labeling is the
    permutation of B_k producing them (k is 1-based)."""
    B = lex_bases(M)[k - 1]
    return SimplicialComplex(_lambda_facets(M, B, sd_B(M, B)))


def _nbc_set(M: Matroid) -> set[tuple[int, ...]]:
    # loops sit in every flat and never label a chain; nbc is read in M minus its loops
    L = M.delete_loops()
    return {tuple(sorted(L.labels[e - 1] for e in b)) for b in L.nbc_bases()}


@dataclass(frozen=True)
class GammaResult:
    complex: SimplicialComplex
    kind: str                                  # "proper-ball" or "whole-sphere"
    nbc: bool
    shelling: tuple = ()
    certificate: BallSphere | None = None


def _classify_gamma(M: Matroid, B, sd: SimplicialComplex, gamma: SimplicialComplex,
                    nbc: bool) -> GammaResult:
    d = M.rank
    if gamma == sd:
        kind = "whole-sphere"
    else:
        kind = "proper-ball"
    if (kind == "proper-ball") != nbc:
        raise CEDError(f"Gamma for basis {B} is a {kind} but nbc={nbc}")
    if kind == "whole-sphere":
        return GammaResult(gamma, kind, nbc)
    if not (gamma.is_pure and gamma.dim == d - 2):
        raise CEDError(f"Gamma for basis {B} is not pure of dimension {d - 2}")
    perms = {_sd_facet_perm(M, B, f) for f in gamma.facets}
    if not is_weak_order_ideal(perms):
        raise CEDError(f"Gamma for basis {B} is not a weak-order ideal")
    order = [f for _, f in sorted((weak_order_key(_sd_facet_perm(M, B, f)), f)
                                  for f in gamma.facets)]
    cert = ball_or_sphere(gamma, order)
    if cert.kind != "ball" or not cert.euler_ok:
        raise CEDError(f"Gamma for basis {B} failed its ball certificate")
    return GammaResult(gamma, kind, nbc, tuple(order), cert)


def gamma_k(M: Matroid, k: int) -> GammaResult:
    """Gamma_k = sd_{B_k} ∩ (sd_{B_1} ∪ ... ∪ sd_{B_{k-1}}), classified."""
    bases = lex_bases(M)
    if not 2 <= k <= len(bases):
        raise ValueError(f"k must lie in [2, {len(bases)}]")
    prev: set = set()
    for B in bases[:k - 1]:
        prev |= sd_B(M, B).faces()
    B = bases[k - 1]
    sd = sd_B(M, B)
    gamma = SimplicialComplex.from_faces(sd.faces() & prev)
    return _classify_gamma(M, B, sd, gamma, B in _nbc_set(M))


# -- shellings of stellohedral balls -------------------------------------------------

def _u_part(facet) -> tuple[int, ...]:
    return tuple(v[1] for v in facet if v[0] == 0)


def _facet_perm(facet, d: int) -> tuple[int, ...]:
    """Permutation sorted(S) + (chain growth) + (missing element) of a facet of
    Omega_V with u-part S."""
    S = _u_part(facet)
    if len(S) == d:
        return S
    sets = sorted((v[2] for v in facet if v[0] == 1), key=len)
    w = list(S)
    prev = set(S)
    for s in sets[1:] + [tuple(range(1, d + 1))]:
        (new,) = set(s) - prev
        w.append(new)
        prev = set(s)
    return tuple(w)


def omega_gamma_shelling(d: int, gamma: SimplicialComplex, gamma_order: Sequence) -> list[tuple]:
    """Shelling of Omega_V(Gamma) from a shelling of Gamma ⊆ sd_V.

    Facets are grouped by their u-part S, groups ordered by |S| and then
    lexicographically; inside a group, facets follow the given shelling of
    Gamma restricted to link_Gamma(C_S), where C_S is the chain of prefixes of
    S in increasing order.
    """
    gamma_order = [tuple(sorted(f)) for f in gamma_order]
    if not verify_shelling(gamma, gamma_order):
        raise CEDError("the supplied order is not a shelling of Gamma")
    ball = omega_gamma(d, gamma)
    if d == 1:
        return list(ball.facets)
    pos = {f: i for i, f in enumerate(gamma_order)}
    groups: dict[tuple[int, ...], list] = {}
    for F in ball.facets:
        groups.setdefault(_u_part(F), []).append(F)
    order = []
    for S in sorted(groups, key=lambda s: (len(s), s)):
        cs = tuple((1, j, S[:j]) for j in range(1, len(S) + 1))
        keyed = []
        for F in groups[S]:
            upper = tuple(v for v in F if v[0] == 1 and len(v[2]) > len(S))
            gf = tuple(sorted(cs + upper))
            if gf not in pos:
                raise CEDError(f"facet {F} has no partner in link_Gamma(C_{S})")
            keyed.append((pos[gf], F, upper))
        keyed.sort()
        if S:
            lk = link(gamma, cs)
            if len(lk.facets) != len(keyed):
                raise CEDError(f"group {S} does not match link_Gamma(C_{S})")
            if not verify_shelling(lk, [u for _, _, u in keyed]):
                raise CEDError(f"induced order on link_Gamma(C_{S}) is not a shelling")
        order.extend(F for _, F, _ in keyed)
    if not verify_shelling(ball, order):
        raise CEDError("grouped order on Omega_V(Gamma) is not a shelling")
    return order


def sphere_shelling(d: int) -> list[tuple]:
    """Shelling of the stellohedral sphere: the grouped order for Gamma = sd_V
    (weak order on permutations), followed by the facet U."""
    full = sd_V(d)
    if d == 1:
        gamma_order = list(full.facets)
    else:
        gamma_order = [perm_to_chain(w) for w in
                       sorted(_all_perms(d), key=weak_order_key)]
    order = omega_gamma_shelling(d, full, gamma_order)
    order.append(tuple((0, i) for i in range(1, d + 1)))
    return order


def _all_perms(d: int):
    from itertools import permutations
    return permutations(range(1, d + 1))


def intersection_shelling(d: int, facets: Iterable[tuple]) -> list[tuple]:
    """Grouped order with weak order inside each group.

    Used on the actual intersection of Omega_{B_k} with the earlier spheres.
    """
    def key(F):
        S = _u_part(F)
        w = _facet_perm(F, d)
        return (len(S), S, inversions(w), w)
    return sorted(facets, key=key)


def ear_shelling(d: int, ear_facets: Iterable[tuple]) -> list[tuple]:
    """Shelling order for an ear: the complement of Omega_V(Gamma) in Omega_V.

    Same grouping as :func:`omega_gamma_shelling`, with groups ordered internally
    by reverse weak order of their permutations, so the complementary
    weak-order filter is shelled from the top.
    """
    def key(F):
        S = _u_part(F)
        w = _facet_perm(F, d)
        return (len(S), S, -inversions(w), w)
    return sorted(ear_facets, key=key)


# -- the decomposition ---------------------------------------------------------------

@dataclass
class Ear:
    index: int                           # 1-based position k
    basis: tuple[int, ...]
    nbc: bool
    source: SimplicialComplex            # Omega_{B_k}
    complex: SimplicialComplex           # the ear Delta_k
    shelling: tuple
    certificate: BallSphere
    gamma: GammaResult | None = None
    lam: SimplicialComplex | None = None
    ball: SimplicialComplex | None = None    # Omega_{B_k}(Gamma_k)
    ball_shelling: tuple = ()                # empty when the grouped order fails
    intersection: SimplicialComplex | None = None
    intersection_shelling: tuple = ()
    checks: dict = field(default_factory=dict)   # must all hold
    notes: dict = field(default_factory=dict)    # informational


@dataclass
class EarDecomposition:
    matroid: Matroid
    complex: SimplicialComplex           # Delta_M
    ears: list[Ear]

    @property
    def bases(self) -> list[tuple[int, ...]]:
        return [e.basis for e in self.ears]

    def facet_counts(self) -> list[int]:
        return [len(e.complex) for e in self.ears]

    def verify(self) -> "CEDReport":
        return verify_ced(self.complex, self.ears)


def build_ced(M: Matroid, max_bases: int | None = None,
              max_rank: int = DEFAULT_MAX_RANK) -> EarDecomposition:
    d = M.rank
    if d > max_rank:
        raise CapExceeded("max-rank", max_rank)
    bases = lex_bases(M, caps.max_bases(max_bases))
    nbc = _nbc_set(M)
    delta = augmented_bergman_complex(M)
    abstract_sphere = stellohedron_boundary(d) if d else SimplicialComplex([()])
    abstract_sd = sd_V(d) if d else SimplicialComplex([()])
    sd_prev: set = set()
    lam_prev: set = set()
    omega_prev: set = set()
    ears: list[Ear] = []

    for k, B in enumerate(bases, start=1):
        source = omega_B(M, B)
        sd = sd_B(M, B)
        checks: dict[str, bool] = {}
        notes: dict = {}
        if d:
            rl = basis_relabeling(M, B)
            checks["omega_isomorphic"] = relabel(abstract_sphere, rl) == source
            checks["sd_isomorphic"] = relabel(abstract_sd, rl) == sd
        lam = SimplicialComplex(_lambda_facets(M, B, sd))
        sd_faces = sd.faces()
        lam_faces = lam.faces() if lam.facets else frozenset()
        omega_faces = source.faces()

        if k == 1:
            order = tuple(relabel_facet(f, rl) for f in sphere_shelling(d)) if d else ((),)
            cert = ball_or_sphere(source, order)
            if cert.kind != "sphere" or not cert.euler_ok:
                raise CEDError("first ear is not a certified sphere")
            ear = Ear(k, B, B in nbc, source, source, order, cert, lam=lam, checks=checks)
        else:
            gamma = SimplicialComplex.from_faces(sd_faces & sd_prev)
            g = _classify_gamma(M, B, sd, gamma, B in nbc)
            inverse = {rl(v): v for f in abstract_sd.facets for v in f}
            abstract_gamma = SimplicialComplex(tuple(inverse[v] for v in f) for f in gamma.facets)
            if g.kind == "proper-ball":
                gamma_order = [tuple(sorted(inverse[v] for v in f)) for f in g.shelling]
            else:
                gamma_order = [perm_to_chain(w) for w in sorted(_all_perms(d), key=weak_order_key)] \
                    if d > 1 else list(abstract_gamma.facets)
            ball = relabel(omega_gamma(d, abstract_gamma), rl)
            omega_gamma_order: tuple = ()
            try:
                omega_gamma_order = tuple(relabel_facet(f, rl) for f in
                                          omega_gamma_shelling(d, abstract_gamma, gamma_order))
            except CEDError as exc:
                notes["omega_gamma_shelling_error"] = str(exc)
            notes["omega_gamma_shellable"] = bool(omega_gamma_order)

            # the ball actually glued along: Omega_{B_k} ∩ (earlier spheres)
            intersection = SimplicialComplex.from_faces(omega_faces & omega_prev)
            notes["intersection_equals_omega_gamma"] = intersection == ball
            inv_all = {rl(v): v for f in abstract_sphere.facets for v in f}
            int_abstract = [tuple(sorted(inv_all[v] for v in f)) for f in intersection.facets]
            int_order = tuple(relabel_facet(f, rl) for f in intersection_shelling(d, int_abstract))
            int_cert = ball_or_sphere(intersection, int_order)
            checks["intersection_is_ball"] = int_cert.kind == "ball" and int_cert.euler_ok

            int_set = set(intersection.facets)
            ear_cx = SimplicialComplex(f for f in source.facets if f not in int_set)
            interior = intersection.faces() - boundary_complex(intersection).faces()
            checks["ear_is_sphere_minus_ball_interior"] = \
                ear_cx.faces() == omega_faces - interior
            ear_abstract = [tuple(sorted(inv_all[v] for v in f)) for f in ear_cx.facets]
            order = tuple(relabel_facet(f, rl) for f in ear_shelling(d, ear_abstract))
            cert = ball_or_sphere(ear_cx, order)
            if cert.kind != "ball" or not cert.euler_ok:
                raise CEDError(f"ear {k} is not a certified ball")
            if g.nbc:
                checks["lambda_boundary_gluing"] = \
                    lam_faces & lam_prev == boundary_complex(lam).faces()
            ear = Ear(k, B, B in nbc, source, ear_cx, order, cert, gamma=g, lam=lam,
                      ball=ball, ball_shelling=omega_gamma_order,
                      intersection=intersection, intersection_shelling=int_order,
                      checks=checks, notes=notes)

        sd_prev |= sd_faces
        lam_prev |= lam_faces
        omega_prev |= omega_faces
        checks["sd_union_equals_lambda_union"] = sd_prev == lam_prev
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            raise CEDError(f"ear {k} (basis {B}) failed: {', '.join(failed)}")
        ears.append(ear)
    return EarDecomposition(M, delta, ears)


def relabel_facet(f: tuple, rl) -> tuple:
    return tuple(sorted(rl(v) for v in f))


# -- verification ----------------------------------------------------------------------

@dataclass
class EarCheck:
    index: int
    kind: str | None
    certified: bool
    proper: bool
    boundary_gluing: bool | None         # condition (iii); None for the first ear
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.certified and self.proper and self.boundary_gluing is not False


@dataclass
class CEDReport:
    covers: bool
    ears: list[EarCheck]

    @property
    def ok(self) -> bool:
        return self.covers and all(e.ok for e in self.ears)

    def first_failure(self) -> int | None:
        for e in self.ears:
            if not e.ok:
                return e.index
        return None


def verify_ced(delta: SimplicialComplex, ears: Sequence[Ear]) -> CEDReport:
    """Check (i) the ears cover delta, (ii) the first ear is a sphere and the
    others are balls properly inside their source spheres, (iii) each later ear
    meets the union of the earlier ones exactly in its boundary."""
    union_facets = set()
    for e in ears:
        union_facets.update(e.complex.facets)
    covers = union_facets == set(delta.facets)
    checks = []
    prev: set = set()
    for pos, e in enumerate(ears):
        kind, certified, detail = None, False, ""
        try:
            cert = ball_or_sphere(e.complex, e.shelling)
            kind = cert.kind
            want = "sphere" if pos == 0 else "ball"
            certified = kind == want and cert.euler_ok
            if not certified:
                detail = f"expected {want}, got {kind}"
        except ValueError as exc:
            detail = str(exc)
        inside = e.complex.is_subcomplex_of(e.source) and e.complex.is_subcomplex_of(delta)
        if pos == 0:
            proper = inside and e.complex == e.source
            gluing = None
        else:
            proper = inside and len(e.complex) < len(e.source)
            gluing = (e.complex.faces() & prev) == boundary_complex(e.complex).faces()
        prev |= e.complex.faces()
        checks.append(EarCheck(pos + 1, kind, certified, proper, gluing, detail))
    return CEDReport(covers, checks)
