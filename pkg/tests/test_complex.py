from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from matroid_ears.complex import (CertificateError, ComplexError, SimplicialComplex,
                                  ball_or_sphere, boundary_complex, euler_characteristic,
                                  f_polynomial, h_polynomial, link, pseudomanifold_certificate,
                                  verify_shelling)
from matroid_ears.matroid import Matroid
from matroid_ears.matroid_complexes import augmented_bergman_complex


def v(i):
    return (1, 0, (i,))


CYCLE = [(v(i), v((i + 1) % 5)) for i in range(5)]
PATH = [(v(0), v(1)), (v(1), v(2)), (v(2), v(3))]


def brute_faces(facets):
    out = set()
    for f in facets:
        for k in range(len(f) + 1):
            out.update(combinations(sorted(f), k))
    return out


def test_f_examples():
    assert f_polynomial(SimplicialComplex(CYCLE)) == [1, 5, 5]
    assert f_polynomial(SimplicialComplex([()])) == [1]
    assert f_polynomial(augmented_bergman_complex(Matroid.uniform(2, 3))) == [1, 7, 9]


def test_void_versus_empty_face():
    void = SimplicialComplex([])
    assert void.is_void and void.dim == -2
    assert f_polynomial(void).is_zero()
    assert SimplicialComplex([()]).dim == -1


def test_non_maximal_faces_dropped():
    cx = SimplicialComplex([(v(0), v(1)), (v(0),), (v(2),)])
    assert cx.facets == ((v(0), v(1)), (v(2),))
    assert not cx.is_pure


def test_link_examples():
    lk = link(SimplicialComplex(CYCLE), [v(0)])
    assert lk.facets == ((v(1),), (v(4),))
    cx = SimplicialComplex(CYCLE)
    assert link(cx, []) == cx
    d = augmented_bergman_complex(Matroid.uniform(2, 3))
    assert link(d, [(1, 1, (1,))]).facets == (((0, 1),), ((1, 0, ()),))
    with pytest.raises(ComplexError):
        link(cx, [v(0), v(2)])


def test_shelling_examples():
    cx = SimplicialComplex(CYCLE)
    assert verify_shelling(cx, CYCLE)
    bad = [CYCLE[0], CYCLE[2], CYCLE[1], CYCLE[3], CYCLE[4]]
    verdict = verify_shelling(cx, bad)
    # 0-based position of the second edge
    assert not verdict and verdict.index == 1
    single = SimplicialComplex([(v(0), v(1), v(2))])
    assert verify_shelling(single, single.facets)


def test_shelling_input_errors():
    with pytest.raises(ComplexError):
        verify_shelling(SimplicialComplex([(v(0), v(1)), (v(2),)]), [])
    with pytest.raises(ComplexError):
        verify_shelling(SimplicialComplex(CYCLE), CYCLE[:4])


def test_shelling_prefixes_stay_valid():
    d = augmented_bergman_complex(Matroid.uniform(3, 4))
    from matroid_ears.ears import build_ced
    ear = build_ced(Matroid.uniform(3, 4)).ears[1]
    order = list(ear.shelling)
    for k in range(1, len(order) + 1):
        assert verify_shelling(SimplicialComplex(order[:k]), order[:k])
    assert d.is_pure


def test_restriction_faces_sum_to_h():
    # h_i counts facets whose restriction face has i vertices
    order = CYCLE
    verdict = verify_shelling(SimplicialComplex(CYCLE), order)
    sizes = [len(r) for r in verdict.restriction]
    assert [sizes.count(i) for i in range(3)] == list(h_polynomial(SimplicialComplex(CYCLE)).padded(2))


def test_ball_sphere_examples():
    s = ball_or_sphere(SimplicialComplex(CYCLE), CYCLE)
    assert s.kind == "sphere" and s.euler == 0 and s.euler_ok
    b = ball_or_sphere(SimplicialComplex(PATH), PATH)
    assert b.kind == "ball" and b.euler == 1 and b.boundary_ridges == ((v(0),), (v(3),))
    assert boundary_complex(SimplicialComplex(PATH)).facets == ((v(0),), (v(3),))
    assert boundary_complex(SimplicialComplex(CYCLE)).is_void


def test_omega_ball_example():
    u1, ve, v1 = (0, 1), (1, 0, ()), (1, 1, (1,))
    ball = SimplicialComplex([(u1, v1), (ve, v1)])
    cert = ball_or_sphere(ball, [(ve, v1), (u1, v1)])
    assert cert.kind == "ball"
    assert boundary_complex(ball).facets == ((u1,), (ve,))


def test_not_pseudomanifold():
    star = SimplicialComplex([(v(0), v(1)), (v(0), v(2)), (v(0), v(3))])
    assert not pseudomanifold_certificate(star).ridge_degrees_ok
    with pytest.raises(CertificateError):
        ball_or_sphere(star, star.facets)
    with pytest.raises(ComplexError):
        boundary_complex(star)


random_facets = st.lists(st.frozensets(st.integers(0, 6), min_size=3, max_size=3),
                         min_size=1, max_size=8)


@settings(max_examples=100, deadline=None)
@given(random_facets)
def test_faces_match_brute_force(facets):
    fs = [tuple(sorted(v(i) for i in f)) for f in facets]
    cx = SimplicialComplex(fs)
    assert cx.faces() == brute_faces(fs)
    h = h_polynomial(cx, 3)
    assert sum(h.coeffs) == len(cx.facets)
    chi = sum((-1) ** (len(f) - 1) for f in brute_faces(fs) if f)
    assert euler_characteristic(cx) == chi


@settings(max_examples=60, deadline=None)
@given(random_facets, st.randoms(use_true_random=False))
def test_verifier_matches_definition(facets, rnd):
    fs = sorted({tuple(sorted(v(i) for i in f)) for f in facets})
    rnd.shuffle(fs)
    cx = SimplicialComplex(fs)
    # definition: every earlier F has an earlier F' with F∩G ⊆ F'∩G, |F'∩G| = d-1
    expected = None
    for j in range(1, len(fs)):
        G = set(fs[j])
        ok = all(any(set(F) & G <= set(Fp) & G and len(set(Fp) & G) == 2 for Fp in fs[:j])
                 for F in fs[:j])
        if not ok:
            expected = j
            break
    verdict = verify_shelling(cx, fs)
    assert verdict.index == expected
