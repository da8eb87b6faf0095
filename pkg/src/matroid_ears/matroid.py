"""Matroids on [n] given in uniform closed form or by an explicit basis family.

Subsets are accepted as any iterable of elements 1..n; internally they are
bitmasks with element ``i`` at bit ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from . import caps
from .caps import CapExceeded


class MatroidError(ValueError):
    """Invalid matroid data or an argument outside the ground set."""


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def _elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Flat:
    elements: tuple[int, ...]
    rank: int

    @property
    def vertex(self) -> tuple:
        """The flat vertex v_F in the global vertex order."""
        return (1, self.rank, self.elements)

    def __contains__(self, e: int) -> bool:
        return e in self.elements

    def __len__(self) -> int:
        return len(self.elements)


class Matroid:
    """A matroid on the ground set 1..n.

    Use :meth:`uniform` or :meth:`from_bases`.  Instances are immutable; rank
    and closure lookups are memoized per instance.
    """

    def __init__(self, n: int, rank: int, bases: Iterable[Iterable[int]] | None = None,
                 labels: tuple[int, ...] | None = None, _checked: bool = False):
        if n < 0:
            raise MatroidError("ground set size must be nonnegative")
        self.n = n
        self.rank = rank
        self.labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        if len(self.labels) != n:
            raise MatroidError("labels must have one entry per element")
        self._full = (1 << n) - 1
        self._rank_cache: dict[int, int] = {}
        self._closure_cache: dict[int, int] = {}
        if bases is None:
            if not 0 <= rank <= n:
                raise MatroidError(f"uniform matroid needs 0 <= d <= n, got d={rank}, n={n}")
            self._bases = None
        else:
            masks = set()
            for b in bases:
                b = tuple(b)
                if len(set(b)) != len(b):
                    raise MatroidError(f"basis {b} repeats an element")
                for e in b:
                    if not 1 <= e <= n:
                        raise MatroidError(f"element {e} of basis {b} outside [1, {n}]")
                if len(b) != rank:
                    raise MatroidError(f"basis {b} has size {len(b)}, expected {rank}")
                masks.add(_mask(b))
            if not masks:
                raise MatroidError("basis family must be nonempty")
            self._bases = tuple(sorted(masks, key=_elements))
            if not _checked:
                self._check_exchange()

    @classmethod
    def uniform(cls, d: int, n: int) -> "Matroid":
        return cls(n, d)

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        bases = [tuple(sorted(b)) for b in bases]
        if not bases:
            raise MatroidError("basis family must be nonempty")
        return cls(n, len(bases[0]), bases)

    def _check_exchange(self) -> None:
        family = set(self._bases)
        for b1 in self._bases:
            for b2 in self._bases:
                diff1 = b1 & ~b2
                diff2 = b2 & ~b1
                for x in _elements(diff1):
                    base = b1 & ~(1 << (x - 1))
                    if not any((base | (1 << (y - 1))) in family for y in _elements(diff2)):
                        raise MatroidError(
                            f"basis exchange fails for B1={_elements(b1)}, "
                            f"B2={_elements(b2)}, e={x}")

    # -- basic predicates ---------------------------------------------------

    @property
    def is_uniform(self) -> bool:
        return self._bases is None

    def __repr__(self) -> str:
        if self.is_uniform:
            return f"U({self.rank},{self.n})"
        return f"Matroid(n={self.n}, bases={[list(b) for b in self.bases()]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.rank == other.rank and \
            self._basis_masks() == other._basis_masks()

    def __hash__(self) -> int:
        return hash((self.n, self.rank, self._basis_masks() if self.n <= 12 else self.is_uniform))

    def _basis_masks(self) -> frozenset[int]:
        if self._bases is not None:
            return frozenset(self._bases)
        return frozenset(_mask(c) for c in combinations(range(1, self.n + 1), self.rank))

    def to_mask(self, subset: Iterable[int]) -> int:
        m = 0
        for e in subset:
            if not 1 <= e <= self.n:
                raise MatroidError(f"element {e} outside ground set [1, {self.n}]")
            m |= 1 << (e - 1)
        return m

    # -- rank and closure ----------------------------------------------------

    def _rank(self, mask: int) -> int:
        if self._bases is None:
            return min(_popcount(mask), self.rank)
        r = self._rank_cache.get(mask)
        if r is None:
            r = max(_popcount(mask & b) for b in self._bases)
            self._rank_cache[mask] = r
        return r

    def _closure(self, mask: int) -> int:
        if self._bases is None:
            return mask if _popcount(mask) < self.rank else self._full
        c = self._closure_cache.get(mask)
        if c is None:
            r = self._rank(mask)
            c = mask
            for i in range(self.n):
                bit = 1 << i
                if not mask & bit and self._rank(mask | bit) == r:
                    c |= bit
            self._closure_cache[mask] = c
        return c

    def rank_of(self, subset: Iterable[int]) -> int:
        return self._rank(self.to_mask(subset))

    def closure(self, subset: Iterable[int]) -> Flat:
        m = self._closure(self.to_mask(subset))
        return Flat(_elements(m), self._rank(m))

    def is_independent(self, subset: Iterable[int]) -> bool:
        m = self.to_mask(subset)
        return self._rank(m) == _popcount(m)

    def is_flat(self, subset: Iterable[int]) -> bool:
        m = self.to_mask(subset)
        return self._closure(m) == m

    def loops(self) -> tuple[int, ...]:
        return _elements(self._closure(0))

    def coloops(self) -> tuple[int, ...]:
        return tuple(e for e in range(1, self.n + 1)
                     if self._rank(self._full & ~(1 << (e - 1))) < self.rank)

    # -- bases and independent sets -----------------------------------------

    def num_bases(self) -> int:
        if self._bases is None:
            return comb(self.n, self.rank)
        return len(self._bases)

    def bases(self, max_bases: int | None = None) -> list[tuple[int, ...]]:
        """All bases as increasing tuples, in lexicographic order."""
        if max_bases is not None and self.num_bases() > max_bases:
            raise CapExceeded("max-bases", max_bases)
        if self._bases is None:
            return list(combinations(range(1, self.n + 1), self.rank))
        return [_elements(b) for b in self._bases]

    def independent_sets(self, max_sets: int | None = None) -> Iterator[tuple[int, ...]]:
        """Independent sets grouped by size, lexicographic within a size."""
        limit = caps.max_subsets(max_sets)
        if self._bases is None:
            total = sum(comb(self.n, k) for k in range(self.rank + 1))
            if total > limit:
                raise CapExceeded("max-subsets", limit)
            for k in range(self.rank + 1):
                yield from combinations(range(1, self.n + 1), k)
            return
        seen = set()
        for b in self._bases:
            sub = b
            while True:
                seen.add(sub)
                if len(seen) > limit:
                    raise CapExceeded("max-subsets", limit)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        yield from sorted((_elements(m) for m in seen), key=lambda t: (len(t), t))

    # -- circuits ------------------------------------------------------------

    def circuits(self, max_sets: int | None = None) -> list[tuple[int, ...]]:
        """Minimal dependent sets, ordered by size then lexicographically."""
        if self._bases is None:
            if self.rank == self.n:
                return []
            if comb(self.n, self.rank + 1) > caps.max_subsets(max_sets):
                raise CapExceeded("max-subsets", caps.max_subsets(max_sets))
            return list(combinations(range(1, self.n + 1), self.rank + 1))
        limit = caps.max_subsets(max_sets)
        if (1 << self.n) > limit:
            raise CapExceeded("max-subsets", limit)
        out = []
        for k in range(1, self.rank + 2):
            for c in combinations(range(1, self.n + 1), k):
                m = _mask(c)
                if self._rank(m) == k - 1 and all(
                        self._rank(m & ~(1 << (e - 1))) == k - 1 for e in c):
                    out.append(c)
        return out

    def broken_circuits(self, max_sets: int | None = None) -> list[tuple[int, ...]]:
        return sorted({c[1:] for c in self.circuits(max_sets)}, key=lambda t: (len(t), t))

    def nbc_bases(self, max_sets: int | None = None) -> list[tuple[int, ...]]:
        """Bases containing no broken circuit, in lexicographic order.

        A loop is a circuit whose broken circuit is empty, so a matroid with
        a loop has no nbc bases.
        """
        if self._bases is None:
            if self.rank == 0:
                return [()] if self.n == 0 else []
            return [b for b in self.bases() if b[0] == 1]
        bcs = [_mask(c) for c in self.broken_circuits(max_sets)]
        return [_elements(b) for b in self._bases if not any(bc & b == bc for bc in bcs)]

    # -- minors ----------------------------------------------------------------

    def restriction(self, flat: Iterable[int]) -> "Matroid":
        """M|F for a flat F, relabeled order-preservingly to 1..|F|."""
        fm = self.to_mask(flat)
        if self._closure(fm) != fm:
            raise MatroidError(f"{_elements(fm)} is not a flat")
        ground = _elements(fm)
        labels = tuple(self.labels[e - 1] for e in ground)
        r = self._rank(fm)
        if self._bases is None:
            return Matroid(len(ground), r, labels=labels)
        pos = {e: i + 1 for i, e in enumerate(ground)}
        family = {tuple(pos[e] for e in _elements(b & fm))
                  for b in self._bases if _popcount(b & fm) == r}
        return Matroid(len(ground), r, sorted(family), labels=labels, _checked=True)

    def contraction(self, subset: Iterable[int]) -> "Matroid":
        """M/S, relabeled order-preservingly to 1..n-|S|."""
        sm = self.to_mask(subset)
        ground = tuple(e for e in range(1, self.n + 1) if not sm & (1 << (e - 1)))
        labels = tuple(self.labels[e - 1] for e in ground)
        r = self.rank - self._rank(sm)
        if self._bases is None:
            return Matroid(len(ground), r, labels=labels)
        ind = 0
        for e in _elements(sm):
            bit = 1 << (e - 1)
            if self._rank(ind | bit) > _popcount(ind):
                ind |= bit
        pos = {e: i + 1 for i, e in enumerate(ground)}
        family = {tuple(pos[e] for e in _elements(b & ~ind))
                  for b in self._bases if b & ind == ind}
        return Matroid(len(ground), r, sorted(family), labels=labels, _checked=True)

    def delete_loops(self) -> "Matroid":
        """Deletion of all loops (the restriction to the complement of cl(empty))."""
        loops = self._closure(0)
        if not loops:
            return self
        keep = self._full & ~loops
        ground = _elements(keep)
        labels = tuple(self.labels[e - 1] for e in ground)
        if self._bases is None:
            # only U(0, n) has loops among uniform matroids
            return Matroid(0, 0, labels=())
        pos = {e: i + 1 for i, e in enumerate(ground)}
        family = {tuple(pos[e] for e in _elements(b)) for b in self._bases}
        return Matroid(len(ground), self.rank, sorted(family), labels=labels, _checked=True)


@dataclass(frozen=True)
class FlatLattice:
    """Flats grouped by rank, with upper covers."""

    ranks: tuple[tuple[Flat, ...], ...]
    covers: dict = field(compare=False)

    @property
    def bottom(self) -> Flat:
        return self.ranks[0][0]

    @property
    def top(self) -> Flat:
        return self.ranks[-1][0]

    def flats(self) -> Iterator[Flat]:
        for group in self.ranks:
            yield from group

    def __len__(self) -> int:
        return sum(len(g) for g in self.ranks)

    def counts(self) -> list[int]:
        return [len(g) for g in self.ranks]


def flat_lattice(M: Matroid, max_flats: int | None = None) -> FlatLattice:
    limit = caps.max_flats(max_flats)
    d, n = M.rank, M.n
    if M.is_uniform:
        if sum(comb(n, k) for k in range(d)) + 1 > limit:
            raise CapExceeded("max-flats", limit)
        top = Flat(tuple(range(1, n + 1)), d)
        ranks = [tuple(Flat(c, k) for c in combinations(range(1, n + 1), k)) for k in range(d)]
        ranks.append((top,))
        covers: dict[Flat, tuple[Flat, ...]] = {}
        for k in range(d):
            for f in ranks[k]:
                if k == d - 1:
                    covers[f] = (top,)
                else:
                    s = set(f.elements)
                    covers[f] = tuple(Flat(tuple(sorted(s | {e})), k + 1)
                                      for e in range(1, n + 1) if e not in s)
        covers[top] = ()
        return FlatLattice(tuple(ranks), covers)

    bottom = M._closure(0)
    levels = [[bottom]]
    cover_masks: dict[int, list[int]] = {}
    total = 1
    for k in range(d):
        nxt: set[int] = set()
        for f in levels[-1]:
            ups = set()
            for e in range(n):
                bit = 1 << e
                if not f & bit:
                    ups.add(M._closure(f | bit))
            cover_masks[f] = sorted(ups, key=_elements)
            nxt |= ups
        total += len(nxt)
        if total > limit:
            raise CapExceeded("max-flats", limit)
        levels.append(sorted(nxt, key=_elements))
    for f in levels[-1]:
        cover_masks[f] = []
    to_flat = {m: Flat(_elements(m), k) for k, lvl in enumerate(levels) for m in lvl}
    ranks = tuple(tuple(to_flat[m] for m in lvl) for lvl in levels)
    covers = {to_flat[m]: tuple(to_flat[u] for u in ups) for m, ups in cover_masks.items()}
    return FlatLattice(ranks, covers)


def rank(M: Matroid, subset: Iterable[int]) -> int:
    return M.rank_of(subset)


def closure(M: Matroid, subset: Iterable[int]) -> Flat:
    return M.closure(subset)


def circuits(M: Matroid) -> list[tuple[int, ...]]:
    return M.circuits()


def broken_circuits(M: Matroid) -> list[tuple[int, ...]]:
    return M.broken_circuits()


def nbc_bases(M: Matroid) -> list[tuple[int, ...]]:
    return M.nbc_bases()


def restriction(M: Matroid, flat: Iterable[int]) -> Matroid:
    if isinstance(flat, Flat):
        flat = flat.elements
    return M.restriction(flat)


def contraction(M: Matroid, subset: Iterable[int]) -> Matroid:
    if isinstance(subset, Flat):
        subset = subset.elements
    return M.contraction(subset)
