from hypothesis import given, strategies as st
import pytest

from matroid_ears.poly import Poly, binom, f_from_h, h_from_f

coeffs = st.lists(st.integers(-50, 50), max_size=7)


def test_trim_and_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly().degree == -1
    assert Poly([0]) == Poly()
    assert Poly([3]) == 3


def test_arithmetic():
    p = Poly([1, 1])
    assert p * p == [1, 2, 1]
    assert p - p == Poly()
    assert p.shift(2) == [0, 0, 1, 1]
    assert Poly([1, 5, 3]).reversed(2) == [3, 5, 1]
    assert Poly([1, 2, 1]).is_palindromic(2)
    assert not Poly([1, 2]).is_palindromic(2)


def test_binom_conventions():
    assert binom(-1, 0) == 1
    assert binom(3, -1) == 0
    assert binom(5, 2) == 10


def test_h_from_f_example():
    assert h_from_f(Poly([1, 7, 9]), 2) == [1, 5, 3]
    assert f_from_h(Poly([1]), 4) == Poly.one_plus_x_pow(4)


def test_degree_above_d_rejected():
    with pytest.raises(ValueError):
        h_from_f(Poly([1, 1, 1]), 1)
    with pytest.raises(ValueError):
        Poly([1, 1, 1]).padded(1)


def test_big_round_trip():
    h = Poly([1, 1933066, 28121900, 60710014, 28680319, 29034396])
    assert h_from_f(f_from_h(h, 5), 5) == h


@given(coeffs, st.integers(0, 3))
def test_transforms_inverse(c, extra):
    p = Poly(c)
    d = max(p.degree, 0) + extra
    assert h_from_f(f_from_h(p, d), d) == p
    assert f_from_h(h_from_f(p, d), d) == p
