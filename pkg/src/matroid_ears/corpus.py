"""Small named matroids used as a test and verification corpus."""

from __future__ import annotations

from itertools import combinations, product

from .matroid import Matroid


def _complement_of_lines(n: int, lines) -> list[tuple[int, ...]]:
    lines = {tuple(sorted(l)) for l in lines}
    return [c for c in combinations(range(1, n + 1), 3) if c not in lines]


def direct_sum(*parts: Matroid) -> Matroid:
    blocks, offset = [], 0
    for M in parts:
        blocks.append([tuple(e + offset for e in b) for b in M.bases()])
        offset += M.n
    return Matroid.from_bases(offset, [sum(bs, ()) for bs in product(*blocks)])


# edges of K4 on vertices a, b, c, d: 1=ab 2=ac 3=ad 4=bc 5=bd 6=cd
K4_TRIANGLES = [(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)]
FANO_LINES = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]


def explicit_corpus() -> dict[str, Matroid]:
    U = Matroid.uniform
    return {
        "U24-explicit": Matroid.from_bases(4, U(2, 4).bases()),
        "K4": Matroid.from_bases(6, _complement_of_lines(6, K4_TRIANGLES)),
        "fano": Matroid.from_bases(7, _complement_of_lines(7, FANO_LINES)),
        "non-fano": Matroid.from_bases(7, _complement_of_lines(7, FANO_LINES[:-1])),
        "U12+U12": direct_sum(U(1, 2), U(1, 2)),
        "parallel-pair": Matroid.from_bases(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        "coloop": Matroid.from_bases(3, [(1, 2), (1, 3)]),
        "loop-last": Matroid.from_bases(4, [(1, 2), (1, 3), (2, 3)]),
        "loop-first": Matroid.from_bases(4, [(2, 3), (2, 4), (3, 4)]),
        "rank1-loop": Matroid.from_bases(3, [(2,), (3,)]),
        "U23+U23": direct_sum(U(2, 3), U(2, 3)),
        "U23+U34": direct_sum(U(2, 3), U(3, 4)),
        "K4+U12": direct_sum(Matroid.from_bases(6, _complement_of_lines(6, K4_TRIANGLES)), U(1, 2)),
        "U12+U23+U11": direct_sum(U(1, 2), U(2, 3), U(1, 1)),
    }


UNIFORM_CORPUS = [(0, 2), (1, 1), (1, 3), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4),
                  (3, 5), (3, 6), (4, 4), (4, 5), (4, 6), (4, 7), (5, 5), (5, 6), (5, 7)]


def uniform_corpus() -> dict[str, Matroid]:
    return {f"U{d},{n}": Matroid.uniform(d, n) for d, n in UNIFORM_CORPUS}


def corpus() -> dict[str, Matroid]:
    """Every corpus matroid has at most 200 bases and rank at most 5."""
    out = uniform_corpus()
    out.update(explicit_corpus())
    return out
