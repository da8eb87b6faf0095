from dataclasses import replace

import pytest

from matroid_ears.complex import SimplicialComplex, link, verify_shelling
from matroid_ears.ears import (CEDError, build_ced, chain_to_perm, gamma_k, inversions,
                               is_weak_order_ideal, lambda_k, lex_bases, minimal_labeling,
                               omega_gamma_shelling, perm_to_chain, sphere_shelling, verify_ced,
                               weak_order_key)
from matroid_ears.matroid import Matroid, MatroidError
from matroid_ears.matroid_complexes import augmented_bergman_complex, omega_gamma, sd_V

U = Matroid.uniform
VE = (1, 0, ())


def sv(*s):
    return (1, len(s), tuple(s))


def test_lex_bases():
    assert lex_bases(U(2, 3)) == [(1, 2), (1, 3), (2, 3)]
    assert lex_bases(U(3, 3)) == [(1, 2, 3)]
    assert lex_bases(U(2, 4)) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_minimal_labeling():
    assert minimal_labeling(U(2, 3), [(), (2,), (1, 2, 3)]).label == (2, 1)
    assert minimal_labeling(U(2, 3), [(), (1,), (1, 2, 3)]).label == (1, 2)
    assert minimal_labeling(U(3, 3), [(), (3,), (1, 3), (1, 2, 3)]).label == (3, 1, 2)
    with pytest.raises(MatroidError):
        minimal_labeling(U(3, 3), [(), (3,), (1, 2, 3)])


def test_lambda_examples():
    M = U(2, 3)
    assert lambda_k(M, 1).facets == ((sv(1),), (sv(2),))
    assert lambda_k(M, 2).facets == ((sv(3),),)
    assert lambda_k(M, 3).is_void


def test_gamma_examples():
    g = gamma_k(U(2, 3), 2)
    assert g.kind == "proper-ball" and g.complex.facets == ((sv(1),),)
    g = gamma_k(U(2, 3), 3)
    assert g.kind == "whole-sphere" and g.complex.facets == ((sv(2),), (sv(3),))
    with pytest.raises(ValueError):
        gamma_k(U(2, 3), 1)


def test_perm_chain_round_trip():
    from itertools import permutations
    for w in permutations(range(1, 5)):
        assert chain_to_perm(perm_to_chain(w), 4) == w
    assert inversions((3, 1, 2)) == 2
    assert weak_order_key((1, 3, 2)) < weak_order_key((2, 3, 1))


def test_weak_order_ideal():
    assert is_weak_order_ideal({(1, 2, 3), (2, 1, 3)})
    assert not is_weak_order_ideal({(2, 1, 3)})


def test_omega_gamma_shelling_small():
    order = omega_gamma_shelling(2, SimplicialComplex([(sv(1),)]), [(sv(1),)])
    assert order == [(VE, sv(1)), ((0, 1), sv(1))]
    full = sd_V(2)
    order = omega_gamma_shelling(2, full, [(sv(1),), (sv(2),)])
    assert len(order) == 4
    assert verify_shelling(omega_gamma(2, full), order)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sphere_shelling(d):
    from matroid_ears.matroid_complexes import stellohedron_boundary
    assert verify_shelling(stellohedron_boundary(d), sphere_shelling(d))


def test_ced_u23():
    ced = build_ced(U(2, 3))
    assert ced.facet_counts() == [5, 3, 1]
    ear2 = set(ced.ears[1].complex.facets)
    assert ear2 == {((0, 1), (0, 3)), ((0, 3), sv(3)), (VE, sv(3))}
    assert ced.ears[2].complex.facets == (((0, 2), (0, 3)),)
    assert ced.verify().ok


def test_ced_boolean_single_ear():
    for n in range(1, 5):
        ced = build_ced(U(n, n))
        assert len(ced.ears) == 1
        assert ced.ears[0].complex == augmented_bergman_complex(U(n, n))
        assert ced.verify().ok


def test_ced_u24_union():
    ced = build_ced(U(2, 4))
    assert len(ced.ears) == 6
    union = set().union(*(e.complex.facets for e in ced.ears))
    assert union == set(ced.complex.facets)
    assert sum(ced.facet_counts()) == len(ced.complex.facets)


def test_swapped_ears_detected():
    ced = build_ced(U(2, 3))
    e1, e2, e3 = ced.ears
    report = verify_ced(ced.complex, [e1, e3, e2])
    assert not report.ok
    assert report.ears[1].boundary_gluing is False
    assert report.first_failure() == 2


def test_bad_shelling_reported():
    ced = build_ced(U(2, 3))
    e2 = ced.ears[1]
    path = [((0, 1), (0, 3)), (VE, sv(3)), ((0, 3), sv(3))]
    rep = verify_ced(ced.complex, [ced.ears[0], replace(e2, shelling=tuple(path)), ced.ears[2]])
    assert rep.covers and not rep.ok
    assert not rep.ears[1].certified and "position 1" in rep.ears[1].detail


def test_rank_cap():
    from matroid_ears.caps import CapExceeded
    with pytest.raises(CapExceeded):
        build_ced(U(6, 6))
    with pytest.raises(CapExceeded):
        build_ced(U(2, 30), max_bases=50)


def _connected(cx: SimplicialComplex) -> bool:
    verts = list(cx.vertices())
    seen, todo = {verts[0]}, [verts[0]]
    while todo:
        x = todo.pop()
        for f in cx.facets:
            if x in f:
                for y in f:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
    return len(seen) == len(verts)


def test_omega_gamma_not_shellable_for_k4(explicit_matroids):
    """Gamma_7 of K4 is a shellable ball, yet Omega_V(Gamma_7) has a
    disconnected vertex link, so no facet order shells it."""
    M = explicit_matroids["K4"]
    g = gamma_k(M, 7)
    assert lex_bases(M)[6] == (1, 4, 6) and g.kind == "proper-ball"
    missing = perm_to_chain((3, 2, 1))
    abstract = SimplicialComplex(f for f in sd_V(3).facets if f != missing)
    assert len(abstract.facets) == len(g.complex.facets) == 5
    lk = link(omega_gamma(3, abstract), [(0, 3)])
    assert lk.dim == 1 and not _connected(lk)
    order = [perm_to_chain(w) for w in sorted(
        [chain_to_perm(f, 3) for f in abstract.facets], key=weak_order_key)]
    with pytest.raises(CEDError):
        omega_gamma_shelling(3, abstract, order)
    ced = build_ced(M)
    ear = ced.ears[6]
    assert ear.notes["omega_gamma_shellable"] is False
    assert ear.checks["intersection_is_ball"]
    assert ced.verify().ok


def test_intersection_differs_from_omega_gamma(explicit_matroids):
    ced = build_ced(explicit_matroids["coloop"])
    ear = ced.ears[1]
    assert ear.notes["intersection_equals_omega_gamma"] is False
    extra = set(ear.ball.facets) - set(ear.intersection.facets)
    assert extra == {((0, 3), (1, 1, (2, 3)))}
    assert ced.verify().ok


def test_uniform_intersection_is_omega_gamma():
    for d, n in [(2, 4), (3, 5), (4, 6)]:
        for ear in build_ced(U(d, n)).ears[1:]:
            assert ear.notes["intersection_equals_omega_gamma"]
            assert ear.notes["omega_gamma_shellable"]


def test_gamma_classification_and_unions(all_matroids):
    for name, M in all_matroids.items():
        if M.rank < 2 or M.num_bases() > 40:
            continue
        ced = build_ced(M)
        for ear in ced.ears[1:]:
            assert (ear.gamma.kind == "proper-ball") == ear.nbc, (name, ear.index)
            assert ear.checks["sd_union_equals_lambda_union"]
            if ear.nbc:
                assert ear.checks["lambda_boundary_gluing"]
