import pytest

from matroid_ears.chow import (augmented_chow_bruteforce, augmented_chow_hilbert, chow_hilbert,
                               verify_augmented_chow_identity, verify_bergman_chow_identity)
from matroid_ears.enumeration import eulerian
from matroid_ears.matroid import Matroid

U = Matroid.uniform


def test_chow_examples():
    assert chow_hilbert(U(2, 3)).poly == [1, 1]
    assert chow_hilbert(U(3, 3)).poly == [1, 4, 1]
    assert chow_hilbert(U(3, 4)).poly == [1, 7, 1]
    assert chow_hilbert(U(0, 0)).poly == [1]


def test_augmented_examples():
    assert augmented_chow_hilbert(U(2, 3)).poly == [1, 4, 1]
    assert augmented_chow_hilbert(U(1, 3)).poly == [1, 1]
    assert augmented_chow_hilbert(U(0, 3)).poly == [1]


def test_loops(explicit_matroids):
    M = explicit_matroids["loop-last"]
    assert chow_hilbert(M).poly.is_zero()
    loopless = M.delete_loops()
    assert augmented_chow_hilbert(M).poly == augmented_chow_hilbert(loopless).poly


@pytest.mark.parametrize("n", range(1, 7))
def test_boolean_chow_is_eulerian(n):
    assert chow_hilbert(U(n, n)).poly == eulerian(n)


def test_palindromic(all_matroids):
    for name, M in all_matroids.items():
        p = chow_hilbert(M).poly
        if M.loops():
            assert p.is_zero()
        elif M.rank:
            assert p.degree == M.rank - 1 and p.is_palindromic(M.rank - 1), name
            assert augmented_chow_hilbert(M).poly.is_palindromic(M.rank), name


def test_uniform_and_explicit_paths_agree(all_matroids):
    for name, M in all_matroids.items():
        if M.is_uniform and M.n <= 7:
            E = Matroid.from_bases(M.n, M.bases())
            assert chow_hilbert(E).poly == chow_hilbert(M).poly, name
            assert augmented_chow_hilbert(E).poly == augmented_chow_hilbert(M).poly, name


@pytest.mark.parametrize("d,n", [(d, n) for n in range(0, 6) for d in range(0, min(n, 3) + 1)])
def test_augmented_against_brute_force(d, n):
    M = Matroid.from_bases(n, U(d, n).bases()) if n else U(0, 0)
    assert augmented_chow_bruteforce(M) == augmented_chow_hilbert(U(d, n)).poly


def test_augmented_brute_force_corpus(explicit_matroids):
    for name, M in explicit_matroids.items():
        assert augmented_chow_bruteforce(M) == augmented_chow_hilbert(M).poly, name


def test_identity_examples():
    v = verify_bergman_chow_identity(3, 4)
    assert v.holds and v.lhs == [3, 8, 1]
    v = verify_bergman_chow_identity(2, 3)
    assert v.holds and v.lhs == [2, 1]
    assert verify_bergman_chow_identity(1, 9).lhs == [1]
    v = verify_augmented_chow_identity(2, 3)
    assert v.holds and v.lhs == [3, 5, 1]
    assert verify_augmented_chow_identity(0, 4).rhs == [1]
    with pytest.raises(ValueError):
        verify_bergman_chow_identity(0, 3)


@pytest.mark.parametrize("d", range(0, 6))
def test_identities_range(d):
    for n in range(d, 31):
        if d >= 1:
            assert verify_bergman_chow_identity(d, n).holds
        assert verify_augmented_chow_identity(d, n).holds
